#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lck/complex.hpp"

namespace lck {

namespace detail {

inline std::string pair_str(const LieAlgebra& g, std::size_t i, std::size_t j) {
  return "(" + g.name(i) + "," + g.name(j) + ")";
}

inline Identity zero_matrix_identity(const LieAlgebra& g, const Mat& m, bool antisymmetric_only = false) {
  Identity id;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = antisymmetric_only ? i + 1 : 0; j < m.cols(); ++j) id.note(m(i, j), pair_str(g, i, j));
  return id;
}

inline Identity zero_form_identity(const LieAlgebra& g, const KForm& f) {
  Identity id;
  for (const auto& [idx, c] : f.coeffs()) {
    std::string where = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) where += (k ? "," : "") + g.name(idx[k]);
    id.note(c, where + ")");
  }
  return id;
}

inline Identity zero_vector_identity(const LieAlgebra& g, const Vec& v, const std::string& label) {
  Identity id;
  for (std::size_t i = 0; i < v.size(); ++i) id.note(v[i], label + "[" + g.name(i) + "]");
  return id;
}

inline CheckEntry& add_identity(StructureReport& r, const std::string& name, const Identity& id,
                                const std::string& ok_detail = {}) {
  if (id.holds) return r.add(name, true, ok_detail);
  return r.add(name, false, "fails at " + id.witness + "; holds only where the listed polynomials vanish", id.locus);
}

}  // namespace detail

/// Endomorphism with J^2 = -1; columns are the images of the basis vectors.
class ComplexStructure {
 public:
  explicit ComplexStructure(Mat J) : J_(std::move(J)) {
    if (!J_.is_square()) throw Error(ErrorKind::NotAlmostComplex, "non-square matrix");
    const Mat sq = J_ * J_ + Mat::identity(J_.rows());
    for (std::size_t i = 0; i < sq.rows(); ++i)
      for (std::size_t j = 0; j < sq.cols(); ++j)
        if (!sq(i, j).is_zero())
          throw Error(ErrorKind::NotAlmostComplex,
                      "J^2 + 1 has entry " + sq(i, j).str() + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  const Mat& matrix() const { return J_; }
  std::size_t dim() const { return J_.rows(); }
  Vec operator()(const Vec& v) const { return J_ * v; }

 private:
  Mat J_;
};

struct NijenhuisEntry {
  std::size_t i, j;
  Vec value;
};

struct NijenhuisResult {
  std::size_t dim = 0;
  std::vector<NijenhuisEntry> table;  // nonzero entries only, i < j
  Identity integrable;

  Vec at(std::size_t i, std::size_t j) const {
    for (const auto& e : table) {
      if (e.i == i && e.j == j) return e.value;
      if (e.i == j && e.j == i) return Scalar(-1) * e.value;
    }
    return Vec(dim);
  }
};

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] on basis pairs.
inline NijenhuisResult nijenhuis(const LieAlgebra& g, const ComplexStructure& J) {
  const std::size_t n = g.dim();
  if (J.dim() != n) throw Error(ErrorKind::AmbientMismatch, "J has the wrong size");
  NijenhuisResult r;
  r.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec x = unit_vector<Scalar>(n, i), y = unit_vector<Scalar>(n, j);
      const Vec Jx = J(x), Jy = J(y);
      const Vec N = g.bracket(Jx, Jy) - J(g.bracket(Jx, y)) - J(g.bracket(x, Jy)) - g.bracket(x, y);
      if (is_zero_vector(N)) continue;
      for (std::size_t k = 0; k < n; ++k)
        r.integrable.note(N[k], "N" + detail::pair_str(g, i, j) + "[" + g.name(k) + "]");
      r.table.push_back({i, j, N});
    }
  return r;
}

/// Complex subspace l with l + conj(l) = g^C and l /\ conj(l) = 0.
struct SubalgebraJ {
  ComplexStructure J;
  bool subalgebra = true;
  std::string witness;
  Locus locus;
};

/// J with eigenspace l for +i and conj(l) for -i.
inline SubalgebraJ subalgebra_to_J(const LieAlgebra& g, const std::vector<CVec>& ell) {
  const std::size_t n = g.dim();
  if (2 * ell.size() != n) throw Error(ErrorKind::NotTransverse, "l must have half the dimension");
  std::vector<CVec> cols = ell;
  for (const auto& v : ell) cols.push_back(conj(v));
  const CMat P = CMat::from_columns(cols, n);
  Locus locus;
  const auto Pinv = inverse(P, &locus);
  if (!Pinv) throw Error(ErrorKind::NotTransverse, "l meets its conjugate");
  CMat D(n, n);
  for (std::size_t k = 0; k < n; ++k) D(k, k) = k < ell.size() ? CScalar::i() : -CScalar::i();
  const CMat Jc = P * D * *Pinv;
  Mat J(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!Jc(i, j).im().is_zero()) throw Error(ErrorKind::InvalidArgument, "complex structure is not real");
      J(i, j) = Jc(i, j).re();
    }
  SubalgebraJ out{ComplexStructure(std::move(J)), true, {}, std::move(locus)};
  const CMat L = CMat::from_columns(ell, n);
  const std::size_t r = rank(L);
  for (std::size_t a = 0; a < ell.size() && out.subalgebra; ++a)
    for (std::size_t b = a + 1; b < ell.size(); ++b) {
      auto with = ell;
      with.push_back(g.bracket(ell[a], ell[b]));
      if (rank(CMat::from_columns(with, n)) != r) {
        out.subalgebra = false;
        out.witness = "bracket of spanning vectors " + std::to_string(a) + "," + std::to_string(b) + " leaves l";
        break;
      }
    }
  return out;
}

/// The +i eigenspace of J.
inline std::vector<CVec> J_to_subalgebra(const ComplexStructure& J) {
  const std::size_t n = J.dim();
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = CScalar(J.matrix()(i, j));
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= CScalar::i();
  return nullspace(m);
}

/// True when the two families of complex vectors span the same space.
inline bool same_complex_span(const std::vector<CVec>& a, const std::vector<CVec>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const std::size_t n = a.front().size();
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank(CMat::from_columns(a, n));
  return ra == rank(CMat::from_columns(b, n)) && ra == rank(CMat::from_columns(both, n));
}

struct LcsData {
  KForm omega;
  KForm lambda;
  Vec Z;
  std::vector<std::size_t> complement;  // basis indices spanning a complement of h
  bool nondegenerate = true;
  bool lambda_closed = true;
  bool lambda_unique = true;
  bool proper = true;
  Locus excluded;  // generic nondegeneracy assumes these nonzero
  StructureReport report;
};

/// Verifies that omega is lcs on g/h and extracts the Lee form and Reeb vector.
/// The Lee form is unique once the quotient has dimension >= 4; below that,
/// `preferred` is used when it solves the lcs equation.
inline LcsData lcs_check(const LieAlgebra& g, const KForm& omega, const std::optional<KForm>& preferred = std::nullopt) {
  const std::size_t n = g.dim();
  if (omega.degree() != 2 || omega.dim() != n) throw Error(ErrorKind::InvalidArgument, "omega must be a 2-form on g");
  if (!in_relative_complex(g, omega))
    throw Error(ErrorKind::InvalidArgument, "omega does not vanish on h or is not h-invariant");
  LcsData d;
  d.omega = omega;
  d.report.set_title("lcs");

  // complement of h by pivoting on basis order
  std::vector<Vec> acc = g.h_basis();
  std::size_t r = acc.empty() ? 0 : rank(Mat::from_columns(acc, n));
  const std::size_t hdim = r;
  for (std::size_t i = 0; i < n && r < n; ++i) {
    auto trial = acc;
    trial.push_back(unit_vector<Scalar>(n, i));
    const std::size_t rt = rank(Mat::from_columns(trial, n));
    if (rt > r) {
      acc = std::move(trial);
      r = rt;
      d.complement.push_back(i);
    }
  }
  const Mat W = omega.as_matrix();
  const std::size_t m = d.complement.size();
  Mat Wq(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) Wq(a, b) = W(d.complement[a], d.complement[b]);
  const Echelon<Scalar> eq = echelon(Wq);
  if (eq.rank() < m) {
    d.nondegenerate = false;
    throw Error(ErrorKind::Degenerate, "rank " + std::to_string(eq.rank()) + " on quotient");
  }
  d.excluded.merge(eq.locus);
  // top power omega^(m/2) on the complement
  KForm top = KForm::constant(n, Scalar(1));
  for (std::size_t k = 0; k < m / 2; ++k) top = wedge(top, omega);
  std::vector<Vec> cvecs;
  for (auto i : d.complement) cvecs.push_back(unit_vector<Scalar>(n, i));
  const Scalar top_value = top.evaluate(cvecs);
  if (top_value.is_zero() || m % 2) throw Error(ErrorKind::Degenerate, "top power vanishes on quotient");
  d.excluded.add(top_value);
  d.report.add("nondegenerate", true,
               "rank " + std::to_string(m) + " on quotient of dim " + std::to_string(n - hdim) +
                   ", top power " + top_value.str());

  // Lee form from lambda ^ omega = d omega
  const KForm domega = ce_d(g, omega);
  d.proper = !domega.is_zero();
  const auto c1 = relative_basis(g, 1);
  std::vector<Vec> cols;
  for (const auto& b : c1) cols.push_back(form_coords(wedge(b, omega)));
  const Mat A = Mat::from_columns(cols, combinations(n, 3).size());
  const auto sol = A.rows() == 0 ? std::optional<LinearSolution<Scalar>>(LinearSolution<Scalar>{Vec(c1.size()), {}, {}})
                                 : solve(A, form_coords(domega));
  if (!sol) throw Error(ErrorKind::NoLeeForm, "d omega = " + domega.str(g.names()) + " is not lambda ^ omega");
  d.lambda = KForm(n, 1);
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (!sol->particular[i].is_zero()) d.lambda = d.lambda + sol->particular[i] * c1[i];
  d.excluded.merge(sol->locus);
  d.lambda_unique = sol->kernel.empty();
  if (!d.lambda_unique && preferred && in_relative_complex(g, *preferred) &&
      wedge(*preferred, omega) == domega)
    d.lambda = *preferred;
  d.report.add("lee form", true,
               "lambda = " + d.lambda.str(g.names()) + (d.lambda_unique ? "" : " (not unique)") +
                   (d.proper ? "; proper" : "; d omega = 0"));
  const KForm dl = ce_d(g, d.lambda);
  d.lambda_closed = dl.is_zero();
  if (!d.lambda_closed) throw Error(ErrorKind::LeeFormNotClosed, "d lambda = " + dl.str(g.names()));
  d.report.add("lee form closed", true, "d lambda = 0");

  // Reeb vector: omega(Z, .) = lambda / 2, i.e. -W Z = lambda / 2
  const Vec half_lambda = Scalar(Rational(1, 2)) * d.lambda.as_covector();
  const auto zs = solve(-W, half_lambda);
  if (!zs) throw Error(ErrorKind::Degenerate, "no Reeb vector");
  d.Z = zs->particular;
  d.report.add("reeb vector", true, "Z = " + g.vector_str(d.Z));

  detail::add_identity(d.report, "d omega = lambda ^ omega", detail::zero_form_identity(g, domega - wedge(d.lambda, omega)));
  detail::add_identity(d.report, "omega(Z,.) = lambda/2",
                       detail::zero_form_identity(g, interior(d.Z, omega) - Scalar(Rational(1, 2)) * d.lambda));
  Identity lz;
  lz.note(d.lambda.evaluate({d.Z}), "lambda(Z)");
  detail::add_identity(d.report, "lambda(Z) = 0", lz);
  detail::add_identity(d.report, "L_Z omega = 0", detail::zero_form_identity(g, lie_derivative(g, d.Z, omega)));
  d.report.exclude(d.excluded);
  return d;
}

/// omega(JX, JY) = omega(X, Y) on all basis pairs.
inline Identity compatibility_check(const LieAlgebra& g, const KForm& omega, const ComplexStructure& J) {
  const Mat W = omega.as_matrix();
  const Mat& Jm = J.matrix();
  return detail::zero_matrix_identity(g, Jm.transpose() * W * Jm - W, true);
}

enum class Convention {
  Definition,  // g = omega(., J.)
  Theorem,     // g = -omega(J., .)
};

inline std::string_view to_string(Convention c) { return c == Convention::Definition ? "def" : "thm"; }

struct Metric {
  Mat matrix;
  Convention convention = Convention::Definition;

  Scalar operator()(const Vec& x, const Vec& y) const { return dot(x, matrix * y); }
  std::string str(const std::vector<std::string>& names) const {
    // quadratic form: sum g_ii (e^i)^2 + 2 g_ij e^i e^j
    std::string out;
    const std::size_t n = matrix.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (matrix(i, j).is_zero()) continue;
        const Scalar c = i == j ? matrix(i, j) : Scalar(2) * matrix(i, j);
        const std::string mono = i == j ? "(" + names[i] + ")^2" : names[i] + "*" + names[j];
        LieAlgebra::append_term(out, c, mono);
      }
    return out.empty() ? "0" : out;
  }
};

inline Metric metric_from(const LieAlgebra& g, const KForm& omega, const ComplexStructure& J, Convention c) {
  const Mat W = omega.as_matrix();
  Metric m{c == Convention::Definition ? W * J.matrix() : -(J.matrix().transpose() * W), c};
  for (std::size_t i = 0; i < m.matrix.rows(); ++i)
    for (std::size_t j = i + 1; j < m.matrix.cols(); ++j)
      if (m.matrix(i, j) != m.matrix(j, i))
        throw Error(ErrorKind::NotCompatible, "metric not symmetric at " + detail::pair_str(g, i, j));
  return m;
}

struct Signature {
  std::size_t positive = 0, negative = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
  bool definite(std::size_t n) const { return positive == n || negative == n; }
  std::string str() const { return "(" + std::to_string(positive) + "," + std::to_string(negative) + ")"; }
};

/// Signature of a symmetric rational matrix by congruence diagonalization.
inline Signature rational_signature(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Signature s;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n && !p; ++i)
      if (!done[i] && a[i][i] != 0) p = i;
    if (!p) {
      // no diagonal pivot: replace e_i by e_i + e_j for an off-diagonal entry
      for (std::size_t i = 0; i < n && !p; ++i)
        for (std::size_t j = 0; j < n && !p; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
            for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
            p = i;
          }
      if (!p) break;
    }
    const std::size_t i = *p;
    const Rational piv = a[i][i];
    (piv > 0 ? s.positive : s.negative)++;
    done[i] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || a[r][i] == 0) continue;
      const Rational f = a[r][i] / piv;
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[i][c];
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!done[c]) a[i][c] = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (!done[r]) a[r][i] = 0;
  }
  return s;
}

/// Exact signature of the metric at a parameter point.
inline Signature signature_at(const Metric& gm, const Assignment& at) {
  const std::size_t n = gm.matrix.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gm.matrix(i, j).eval(at);
  const Signature s = rational_signature(std::move(a));
  if (s.positive + s.negative < n) throw Error(ErrorKind::DegenerateAtPoint, assignment_str(at));
  return s;
}

/// Left-invariant Levi-Civita connection, nabla[i][j] = nabla_{e_i} e_j.
struct Connection {
  std::vector<std::vector<Vec>> nabla;
  Identity torsion_free;
  Identity metric;
  Locus excluded;

  /// nabla_{e_i} v for a left-invariant field with constant coefficients.
  Vec derivative(std::size_t i, const Vec& v) const {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out = out + v[j] * nabla[i][j];
    return out;
  }
};

/// Koszul formula 2g(nabla_X Y, W) = g([X,Y],W) - g([Y,W],X) + g([W,X],Y).
inline Connection levi_civita(const LieAlgebra& g, const Metric& gm) {
  const std::size_t n = g.dim();
  Connection c;
  const auto Ginv = inverse(gm.matrix, &c.excluded);
  if (!Ginv) throw Error(ErrorKind::DegenerateMetric, "metric is degenerate");
  const Scalar half(Rational(1, 2));
  auto e = [n](std::size_t i) { return unit_vector<Scalar>(n, i); };
  c.nabla.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec rhs(n);
      for (std::size_t k = 0; k < n; ++k)
        rhs[k] = half * (gm(g.structure(i, j), e(k)) - gm(g.structure(j, k), e(i)) + gm(g.structure(k, i), e(j)));
      c.nabla[i][j] = *Ginv * rhs;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i) {
        const Vec t = c.nabla[i][j] - c.nabla[j][i] - g.structure(i, j);
        for (std::size_t k = 0; k < n; ++k) c.torsion_free.note(t[k], "T" + detail::pair_str(g, i, j));
      }
      for (std::size_t k = j; k < n; ++k)
        c.metric.note(gm(c.nabla[i][j], e(k)) + gm(e(j), c.nabla[i][k]),
                      "(" + g.name(i) + "," + g.name(j) + "," + g.name(k) + ")");
    }
  return c;
}

struct LckData {
  LcsData lcs;
  Mat J;
  Metric metric;
  Vec xi;
  KForm theta;
  KForm phi;
  Scalar lambda_xi;       // lambda(xi)
  Scalar g_xi_xi;         // g(xi, xi)
  std::optional<Scalar> factor;  // phi = factor * theta, when proportional
  Locus excluded;
  StructureReport report;

  /// factor * lambda(xi) / (-2): the constant relating phi and theta once
  /// omega is rescaled so that lambda(xi) = -2.
  std::optional<Scalar> normalized_factor() const {
    if (!factor) return std::nullopt;
    return *factor * lambda_xi / Scalar(-2);
  }
};

/// Builds all derived lcK data: lambda, Z, g, xi, theta and the canonical
/// 1-form phi with phi(xi) = 0.
inline LckData assemble_lck(const LieAlgebra& g, const KForm& omega, const ComplexStructure& J, Convention conv) {
  LckData d;
  d.lcs = lcs_check(g, omega);
  d.J = J.matrix();
  d.excluded.merge(d.lcs.excluded);
  d.report.set_title("lck");
  d.report.append(d.lcs.report);
  const Identity compat = compatibility_check(g, omega, J);
  if (!compat.holds) throw Error(ErrorKind::NotCompatible, "omega(J.,J.) != omega at " + compat.witness);
  d.report.add("omega(J.,J.) = omega", true);
  d.metric = metric_from(g, omega, J, conv);
  d.report.add("metric", true, std::string(to_string(conv)) + ": " + d.metric.str(g.names()));

  const Vec lambda = d.lcs.lambda.as_covector();
  const auto xs = solve(d.metric.matrix, Scalar(Rational(-1, 2)) * lambda);
  if (!xs || !xs->kernel.empty()) throw Error(ErrorKind::DegenerateMetric, "metric is degenerate");
  d.xi = xs->particular;
  d.excluded.merge(xs->locus);
  d.theta = KForm::from_covector(Scalar(Rational(1, 2)) * (J.matrix().transpose() * lambda));
  d.lambda_xi = dot(lambda, d.xi);
  d.g_xi_xi = d.metric(d.xi, d.xi);
  d.report.add("lee vector", true, "xi = " + g.vector_str(d.xi) + ", g(xi,xi) = " + d.g_xi_xi.str() +
                                        ", lambda(xi) = " + d.lambda_xi.str());
  d.report.add("reeb form", true, "theta = " + d.theta.str(g.names()));
  detail::add_identity(d.report, "Z = J xi", detail::zero_vector_identity(g, d.lcs.Z - J(d.xi), "Z - J xi"));

  if (d.lambda_xi.is_zero()) throw Error(ErrorKind::GaugeUnresolvable, "lambda(xi) = 0");
  const Potential pot = solve_potential(g, omega, d.lcs.lambda, d.xi);
  d.phi = pot.phi;
  d.excluded.merge(pot.locus);
  d.report.add("canonical form", true, "phi = " + d.phi.str(g.names()) + " with phi(xi) = 0");
  detail::add_identity(d.report, "d_lambda phi = omega",
                       detail::zero_form_identity(g, twisted_d(g, d.phi, d.lcs.lambda) - omega));

  // proportionality phi = f theta
  if (wedge(d.phi, d.theta).is_zero() && !d.theta.is_zero()) {
    const auto& [idx, tc] = *d.theta.coeffs().begin();
    d.factor = d.phi.at(idx) / tc;
  }
  const KForm lxi = lie_derivative(g, d.xi, omega);
  const KForm rhs = d.lambda_xi * omega - wedge(d.lcs.lambda, d.theta) + ce_d(g, d.theta);
  detail::add_identity(d.report, "L_xi omega = lambda(xi) omega - lambda ^ theta + d theta",
                       detail::zero_form_identity(g, lxi - rhs));
  d.report.exclude(d.excluded);
  return d;
}

struct VaismanResult {
  Identity parallel;        // nabla xi = 0
  Identity killing;         // L_xi omega = 0
  Connection connection;
  StructureReport report;
};

inline VaismanResult vaisman_check(const LieAlgebra& g, const LckData& d) {
  VaismanResult v;
  v.connection = levi_civita(g, d.metric);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vec nx = v.connection.derivative(i, d.xi);
    for (std::size_t k = 0; k < nx.size(); ++k) v.parallel.note(nx[k], "nabla_" + g.name(i) + " xi");
  }
  v.killing = detail::zero_form_identity(g, lie_derivative(g, d.xi, d.lcs.omega));
  v.report.set_title("vaisman");
  detail::add_identity(v.report, "torsion free", v.connection.torsion_free);
  detail::add_identity(v.report, "metric connection", v.connection.metric);
  detail::add_identity(v.report, "nabla xi = 0", v.parallel,
                       "g(xi,xi) = " + d.g_xi_xi.str() + ", lambda(xi) = " + d.lambda_xi.str());
  if (v.parallel.holds) detail::add_identity(v.report, "L_xi omega = 0", v.killing);
  v.report.exclude(v.connection.excluded);
  v.report.exclude(d.excluded);
  return v;
}

struct BiinvariantResult {
  Vec v;              // B^{-1} phi
  Vec A_gxi;          // B^{-1} g(xi, .)
  std::size_t rank_ad_v = 0;
  std::size_t centralizer_dim = 0;        // in g
  std::size_t derived_centralizer_dim = 0;  // in [g, g]
  StructureReport report;
};

/// Checks that B is symmetric, nondegenerate and ad-invariant.
inline void require_biinvariant(const LieAlgebra& g, const Mat& B) {
  const std::size_t n = g.dim();
  if (B.rows() != n || !B.is_square()) throw Error(ErrorKind::AmbientMismatch, "B has the wrong size");
  if (!(B == B.transpose())) throw Error(ErrorKind::InvalidArgument, "B is not symmetric");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = y; w < n; ++w) {
        const Scalar s = dot(g.structure(x, y), B.column(w)) + dot(B.column(y), g.structure(x, w));
        if (!s.is_zero())
          throw Error(ErrorKind::NotAdInvariant, "(" + g.name(x) + "," + g.name(y) + "," + g.name(w) + ")");
      }
  if (determinant(B).is_zero()) throw Error(ErrorKind::DegenerateB, "det B = 0");
}

/// Identities linking phi, xi and an ad-invariant form B, with B o A
/// meaning (X, Y) -> B(AX, Y).
inline BiinvariantResult biinvariant_identities(const LieAlgebra& g, const Mat& B, const LckData& d) {
  require_biinvariant(g, B);
  const std::size_t n = g.dim();
  BiinvariantResult r;
  r.report.set_title("bi-invariant");
  const Mat Binv = *inverse(B);
  const Vec lambda = d.lcs.lambda.as_covector(), phi = d.phi.as_covector();
  const Vec Bl = Binv * lambda;
  if (dot(lambda, Bl).is_zero()) throw Error(ErrorKind::IsotropicLeeVector, "B(B^-1 lambda, B^-1 lambda) = 0");
  r.v = Binv * phi;
  r.A_gxi = Binv * (d.metric.matrix * d.xi);
  r.report.add("v = B^-1 phi", true, g.vector_str(r.v));
  const Mat adv = g.ad(r.v);

  // d phi = -B o ad_v
  const Mat dphi = ce_d(g, d.phi).as_matrix();
  detail::add_identity(r.report, "d phi = -B o ad_v",
                       detail::zero_matrix_identity(g, dphi + adv.transpose() * B));
  // lambda ^ phi = B o (lambda (x) v + 2 phi (x) A_gxi)
  Mat lhs = wedge(d.lcs.lambda, d.phi).as_matrix();
  Mat A1(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) A1(k, i) = lambda[i] * r.v[k] + Scalar(2) * phi[i] * r.A_gxi[k];
  detail::add_identity(r.report, "lambda ^ phi = B o (lambda (x) v + 2 phi (x) A_gxi)",
                       detail::zero_matrix_identity(g, lhs - A1.transpose() * B));
  // omega = B o A_omega with A_omega = -lambda (x) v - 2 phi (x) A_gxi - ad_v
  const Mat Aw = -A1 - adv;
  detail::add_identity(r.report, "omega = B o A_omega",
                       detail::zero_matrix_identity(g, d.lcs.omega.as_matrix() - Aw.transpose() * B));
  Identity central;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec br = g.bracket(r.A_gxi, unit_vector<Scalar>(n, i));
    for (std::size_t k = 0; k < n; ++k) central.note(br[k], "[A_gxi," + g.name(i) + "]");
  }
  detail::add_identity(r.report, "A_gxi central", central, g.vector_str(r.A_gxi));

  const Echelon<Scalar> ea = echelon(adv);
  r.rank_ad_v = ea.rank();
  r.report.add("rank ad_v >= dim g - 2", r.rank_ad_v + 2 >= n, "rank " + std::to_string(r.rank_ad_v), ea.locus);
  if (is_zero_vector(r.v)) throw Error(ErrorKind::ZeroVector, "v = 0");
  const Subspace zv = centralizer(g, r.v);
  r.centralizer_dim = zv.dim();
  r.report.add("dim Z_g(v) <= 2", r.centralizer_dim <= 2, "dim " + std::to_string(r.centralizer_dim), zv.locus());
  const Subspace zs = zv.intersect(derived_algebra(g));
  r.derived_centralizer_dim = zs.dim();
  r.report.add("dim Z_s(v) = 1", r.derived_centralizer_dim == 1, "dim " + std::to_string(r.derived_centralizer_dim),
               zs.locus());
  return r;
}

}  // namespace lck

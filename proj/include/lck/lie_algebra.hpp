#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lck/matrix.hpp"
#include "lck/report.hpp"

namespace lck {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error(ErrorKind::InvalidArgument, "empty basis");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw Error(ErrorKind::InvalidArgument, "duplicate basis name " + names_[i]);
    table_.assign(dim() * dim(), Vec(dim()));
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
    check_vec(v);
    table_.at(i * dim() + j) = v;
    table_.at(j * dim() + i) = Scalar(-1) * v;
  }
  /// Sets one ordered entry only; used to load tables verbatim (and to
  /// build deliberately broken ones).
  void set_structure(std::size_t i, std::size_t j, const Vec& v) {
    check_vec(v);
    table_.at(i * dim() + j) = v;
  }
  const Vec& structure(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

  template <class T>
  std::vector<T> bracket(const std::vector<T>& x, const std::vector<T>& y) const {
    const std::size_t n = dim();
    std::vector<T> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const Vec& c = structure(i, j);
        const T xy = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) r[k] += xy * T(c[k]);
      }
    }
    return r;
  }
  Vec bracket_basis(std::size_t i, std::size_t j) const { return structure(i, j); }

  /// Matrix of ad_x; column j is [x, e_j].
  Mat ad(const Vec& x) const {
    Mat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const Vec col = bracket(x, unit_vector<Scalar>(dim(), j));
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Distinguished isotropy subalgebra; empty means h = 0.
  const std::vector<Vec>& h_basis() const { return h_; }
  void set_h(std::vector<Vec> basis) {
    for (const auto& v : basis) check_vec(v);
    h_ = std::move(basis);
  }

  /// Human-readable vector, e.g. "1/2*e1 - e0".
  std::string vector_str(const Vec& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      append_term(out, v[i], names_[i]);
    }
    return out.empty() ? "0" : out;
  }

  /// Appends "coef*mono" to a sum, choosing the sign separator.
  static void append_term(std::string& out, const Scalar& c, const std::string& mono) {
    std::string cs = c.str();
    bool neg = false;
    if (c.is_constant() && c.constant_value() < 0) {
      neg = true;
      cs = (-c).str();
    } else if (!c.is_constant() && c.num().term_count() == 1 && c.num().leading_coefficient() < 0) {
      neg = true;
      cs = (-c).str();
    }
    std::string term;
    if (cs == "1") {
      term = mono;
    } else {
      const bool wrap = cs.find_first_of(" +-") != std::string::npos ||
                        (cs.find('/') != std::string::npos && !c.is_constant());
      term = (wrap ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }

 private:
  void check_vec(const Vec& v) const {
    if (v.size() != dim()) throw Error(ErrorKind::InvalidArgument, "vector length " + std::to_string(v.size()));
  }

  std::vector<std::string> names_;
  std::vector<Vec> table_;
  std::vector<Vec> h_;
};

/// Linear span inside an ambient space, stored as an independent basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
    for (const auto& v : spanning)
      if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length");
    if (spanning.empty()) return;
    // row-reduce the spanning set, keep the original vectors at pivot positions
    const Mat cols = Mat::from_columns(spanning, ambient_);
    Echelon<Scalar> e = echelon(cols);
    for (auto c : e.pivot_cols) basis_.push_back(spanning[c]);
    locus_ = std::move(e.locus);
  }

  static Subspace whole(std::size_t n) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector<Scalar>(n, i));
    return Subspace(n, b);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// Pivots that were assumed nonzero when computing the dimension.
  const Locus& locus() const { return locus_; }
  void add_locus(const Locus& l) { locus_.merge(l); }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length");
    if (is_zero_vector(v)) return true;
    if (basis_.empty()) return false;
    auto b = basis_;
    b.push_back(v);
    return rank(Mat::from_columns(b, ambient_)) == basis_.size();
  }
  bool contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

  Subspace intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw Error(ErrorKind::AmbientMismatch, "subspace ambient");
    if (basis_.empty() || o.basis_.empty()) return Subspace(ambient_, {});
    // solve sum x_i u_i - sum y_j w_j = 0
    std::vector<Vec> cols = basis_;
    for (const auto& w : o.basis_) cols.push_back(Scalar(-1) * w);
    Locus l;
    const auto ker = nullspace(Mat::from_columns(cols, ambient_), &l);
    std::vector<Vec> out;
    for (const auto& k : ker) {
      Vec v(ambient_);
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!k[i].is_zero()) v = v + k[i] * basis_[i];
      out.push_back(std::move(v));
    }
    Subspace s(ambient_, out);
    s.add_locus(l);
    return s;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  Locus locus_;
};

/// Antisymmetry, then Jacobi on all basis triples, then closure of h.
inline CheckEntry check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec s = g.structure(i, j) + g.structure(j, i);
      if (!is_zero_vector(s))
        return {"jacobi", Verdict::Fail, "antisymmetry fails at (" + g.name(i) + "," + g.name(j) + ")", {}};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = unit_vector<Scalar>(n, i), ej = unit_vector<Scalar>(n, j), ek = unit_vector<Scalar>(n, k);
        const Vec s = g.bracket(ei, g.bracket(ej, ek)) + g.bracket(ej, g.bracket(ek, ei)) +
                      g.bracket(ek, g.bracket(ei, ej));
        if (!is_zero_vector(s))
          return {"jacobi", Verdict::Fail,
                  "Jacobi fails at (" + g.name(i) + "," + g.name(j) + "," + g.name(k) + ")", {}};
      }
  if (!g.h_basis().empty()) {
    const Subspace h(n, g.h_basis());
    for (const auto& x : h.basis())
      for (const auto& y : h.basis())
        if (!h.contains(g.bracket(x, y)))
          return {"jacobi", Verdict::Fail, "h not closed: [" + g.vector_str(x) + ", " + g.vector_str(y) + "]", {}};
  }
  return {"jacobi", Verdict::Pass, "antisymmetry and Jacobi hold on all basis triples", {}};
}

inline Subspace centralizer(const LieAlgebra& g, const Vec& v) {
  if (v.size() != g.dim()) throw Error(ErrorKind::AmbientMismatch, "vector length");
  if (is_zero_vector(v)) throw Error(ErrorKind::ZeroVector, "centralizer of 0");
  Locus l;
  auto ker = nullspace(g.ad(v), &l);
  Subspace s(g.dim(), ker);
  s.add_locus(l);
  return s;
}

/// Centralizer of a subspace inside the algebra.
inline Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  Mat stacked;
  for (const auto& v : s.basis()) stacked = vstack(stacked, g.ad(v));
  if (stacked.rows() == 0) return Subspace::whole(g.dim());
  Locus l;
  auto ker = nullspace(stacked, &l);
  Subspace out(g.dim(), ker);
  out.add_locus(l);
  return out;
}

inline Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

inline Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<Vec> span;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!is_zero_vector(g.structure(i, j))) span.push_back(g.structure(i, j));
  return Subspace(g.dim(), span);
}

struct DerivationCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string witness_str;
};

/// Leibniz rule D[x,y] = [Dx,y] + [x,Dy] on basis pairs.
inline DerivationCheck is_derivation(const LieAlgebra& g, const Mat& D) {
  const std::size_t n = g.dim();
  if (D.rows() != n || D.cols() != n) throw Error(ErrorKind::AmbientMismatch, "derivation shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = D * g.structure(i, j);
      const Vec rhs = g.bracket(D.column(i), unit_vector<Scalar>(n, j)) +
                      g.bracket(unit_vector<Scalar>(n, i), D.column(j));
      if (!is_zero_vector(lhs - rhs))
        return {false, std::make_pair(i, j), "(" + g.name(i) + "," + g.name(j) + ")"};
    }
  return {};
}

/// The algebra RD + g with [D, x] = Dx. The new basis vector comes first.
inline LieAlgebra extend_algebra(const LieAlgebra& g, const Mat& D, std::string new_name = {}) {
  auto chk = is_derivation(g, D);
  if (!chk.ok) throw Error(ErrorKind::NotADerivation, chk.witness_str);
  if (new_name.empty()) new_name = g.index_of("e0") ? "D" : "e0";
  std::vector<std::string> names{new_name};
  names.insert(names.end(), g.names().begin(), g.names().end());
  LieAlgebra out(names);
  const std::size_t n = g.dim();
  auto lift = [n](const Vec& v) {
    Vec w(n + 1);
    for (std::size_t i = 0; i < n; ++i) w[i + 1] = v[i];
    return w;
  };
  for (std::size_t j = 0; j < n; ++j) out.set_bracket(0, j + 1, lift(D.column(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set_bracket(i + 1, j + 1, lift(g.structure(i, j)));
  std::vector<Vec> h;
  for (const auto& v : g.h_basis()) h.push_back(lift(v));
  out.set_h(std::move(h));
  return out;
}

}  // namespace lck

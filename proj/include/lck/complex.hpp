#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lck/kform.hpp"

namespace lck {

/// Coordinates of a k-form on the increasing tuples of combinations(n, k).
inline Vec form_coords(const KForm& a) {
  const auto tuples = combinations(a.dim(), a.degree());
  Vec v(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) v[t] = a.at(tuples[t]);
  return v;
}

inline KForm form_from_coords(std::size_t dim, std::size_t degree, const Vec& v) {
  const auto tuples = combinations(dim, degree);
  if (v.size() != tuples.size()) throw Error(ErrorKind::InvalidArgument, "coordinate vector length");
  KForm f(dim, degree);
  for (std::size_t t = 0; t < tuples.size(); ++t) f.set(tuples[t], v[t]);
  return f;
}

inline std::vector<KForm> standard_basis(std::size_t dim, std::size_t degree) {
  std::vector<KForm> out;
  for (const auto& I : combinations(dim, degree)) {
    KForm f(dim, degree);
    f.set(I, Scalar(1));
    out.push_back(std::move(f));
  }
  return out;
}

/// Basis of C^k(g, h): forms with i_X a = 0 and L_X a = 0 for X in h.
/// H is taken to be connected, so invariance is checked infinitesimally.
inline std::vector<KForm> relative_basis(const LieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  auto full = standard_basis(n, k);
  if (g.h_basis().empty() || k == 0) return full;
  // stack the linear conditions, one block of rows per generator of h
  Mat conds;
  for (const auto& x : g.h_basis()) {
    std::vector<Vec> interior_cols, lie_cols;
    for (const auto& b : full) {
      interior_cols.push_back(form_coords(interior(x, b)));
      lie_cols.push_back(form_coords(lie_derivative(g, x, b)));
    }
    conds = vstack(conds, Mat::from_columns(interior_cols, interior_cols.front().size()));
    conds = vstack(conds, Mat::from_columns(lie_cols, lie_cols.front().size()));
  }
  std::vector<KForm> out;
  for (const auto& c : nullspace(conds)) out.push_back(form_from_coords(n, k, c));
  return out;
}

/// True when a lies in C^k(g, h).
inline bool in_relative_complex(const LieAlgebra& g, const KForm& a) {
  if (a.degree() == 0) return true;
  for (const auto& x : g.h_basis())
    if (!interior(x, a).is_zero() || !lie_derivative(g, x, a).is_zero()) return false;
  return true;
}

namespace detail {

// Matrix of d_lambda restricted to C^k, columns in full Lambda^{k+1} coordinates.
inline Mat twisted_d_matrix(const LieAlgebra& g, const KForm& lambda, const std::vector<KForm>& basis,
                            std::size_t k) {
  const std::size_t rows = combinations(g.dim(), k + 1).size();
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(form_coords(twisted_d(g, b, lambda)));
  if (cols.empty()) return Mat(rows, 0);
  return Mat::from_columns(cols, rows);
}

inline void require_closed(const LieAlgebra& g, const KForm& lambda) {
  if (lambda.degree() != 1) throw Error(ErrorKind::InvalidArgument, "lambda must be a 1-form");
  const KForm dl = ce_d(g, lambda);
  if (!dl.is_zero()) throw Error(ErrorKind::NonClosedLambda, "d(lambda) = " + dl.str(g.names()));
}

}  // namespace detail

struct CohomologyDim {
  std::size_t dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  std::size_t cochain_dim = 0;
  /// Pivots assumed nonzero; at points on this set the dimension can jump.
  Locus locus;
};

/// dim H^k_lambda(g, h) = dim ker(d: C^k -> C^{k+1}) - dim im(d: C^{k-1} -> C^k).
inline CohomologyDim twisted_cohomology_dim(const LieAlgebra& g, const KForm& lambda, std::size_t k) {
  detail::require_closed(g, lambda);
  CohomologyDim r;
  const auto ck = relative_basis(g, k);
  r.cochain_dim = ck.size();
  const Echelon<Scalar> out = echelon(detail::twisted_d_matrix(g, lambda, ck, k));
  r.kernel_dim = ck.size() - out.rank();
  r.locus.merge(out.locus);
  if (k > 0) {
    const Echelon<Scalar> in = echelon(detail::twisted_d_matrix(g, lambda, relative_basis(g, k - 1), k - 1));
    r.image_dim = in.rank();
    r.locus.merge(in.locus);
  }
  r.dim = r.kernel_dim - r.image_dim;
  return r;
}

struct Potential {
  KForm phi;
  /// Basis of the d_lambda-closed 1-forms in C^1; phi is unique up to these.
  std::vector<KForm> kernel;
  Locus locus;
};

/// Solves d_lambda phi = omega for phi in C^1(g, h). With a gauge vector xi
/// the kernel freedom is used to impose phi(xi) = 0.
inline Potential solve_potential(const LieAlgebra& g, const KForm& omega, const KForm& lambda,
                                 const std::optional<Vec>& gauge = std::nullopt) {
  detail::require_closed(g, lambda);
  if (omega.degree() != 2) throw Error(ErrorKind::InvalidArgument, "omega must be a 2-form");
  const auto c1 = relative_basis(g, 1);
  const Mat A = detail::twisted_d_matrix(g, lambda, c1, 1);
  const auto sol = solve(A, form_coords(omega));
  if (!sol) throw Error(ErrorKind::NoSolution, "omega is not d_lambda-exact in C^1");
  auto combine = [&](const Vec& coeffs) {
    KForm f(g.dim(), 1);
    for (std::size_t i = 0; i < c1.size(); ++i)
      if (!coeffs[i].is_zero()) f = f + coeffs[i] * c1[i];
    return f;
  };
  Potential p{combine(sol->particular), {}, sol->locus};
  for (const auto& k : sol->kernel) p.kernel.push_back(combine(k));
  if (gauge) {
    const Scalar at_xi = p.phi.evaluate({*gauge});
    if (!at_xi.is_zero()) {
      bool fixed = false;
      for (const auto& kappa : p.kernel) {
        const Scalar kx = kappa.evaluate({*gauge});
        if (kx.is_zero()) continue;
        p.phi = p.phi - (at_xi / kx) * kappa;
        p.locus.add(kx);
        fixed = true;
        break;
      }
      if (!fixed) throw Error(ErrorKind::GaugeUnresolvable, "no closed 1-form is nonzero on the gauge vector");
    } else if (p.kernel.empty() || std::all_of(p.kernel.begin(), p.kernel.end(), [&](const KForm& kappa) {
                 return kappa.evaluate({*gauge}).is_zero();
               })) {
      // phi(xi) = 0 already; without a kernel direction the gauge is not a condition
      if (!p.kernel.empty()) throw Error(ErrorKind::GaugeUnresolvable, "every closed 1-form vanishes on the gauge vector");
    }
  }
  return p;
}

}  // namespace lck

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lck/lie_algebra.hpp"

namespace lck {

using Index = std::vector<std::size_t>;

namespace detail {

// Sorts a basis tuple in place; returns the permutation sign, 0 on repeats.
inline int sort_sign(Index& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

inline void next_combination(Index& c, std::size_t n, bool& done) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) {
    done = true;
    return;
  }
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
}

}  // namespace detail

/// All increasing k-tuples in {0..n-1}, lexicographically.
inline std::vector<Index> combinations(std::size_t n, std::size_t k) {
  std::vector<Index> out;
  if (k > n) return out;
  Index c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  bool done = false;
  while (!done) {
    out.push_back(c);
    if (k == 0) break;
    detail::next_combination(c, n, done);
  }
  return out;
}

/// Alternating k-form with coefficients on increasing basis tuples, in the
/// determinant convention (e^0 ^ e^1)(e_0, e_1) = 1.
class KForm {
 public:
  KForm() = default;
  // Degrees above the dimension are allowed; such forms are always zero.
  KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  static KForm constant(std::size_t dim, const Scalar& c) {
    KForm f(dim, 0);
    f.set({}, c);
    return f;
  }
  static KForm dual(std::size_t dim, std::size_t i) {
    KForm f(dim, 1);
    f.set({i}, Scalar(1));
    return f;
  }
  static KForm from_covector(const Vec& v) {
    KForm f(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) f.set({i}, v[i]);
    return f;
  }
  /// 2-form with w(e_i, e_j) = m(i, j); only the upper triangle is read.
  static KForm from_matrix(const Mat& m) {
    KForm f(m.rows(), 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i + 1; j < m.cols(); ++j) f.set({i, j}, m(i, j));
    return f;
  }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<Index, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of an arbitrary basis tuple, with the alternating sign.
  Scalar at(Index idx) const {
    if (idx.size() != degree_) throw Error(ErrorKind::InvalidArgument, "tuple length");
    const int s = detail::sort_sign(idx);
    if (s == 0) return Scalar();
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return Scalar();
    return s > 0 ? it->second : -it->second;
  }

  void set(Index idx, const Scalar& c) {
    if (idx.size() != degree_) throw Error(ErrorKind::InvalidArgument, "tuple length");
    for (auto i : idx)
      if (i >= dim_) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    const int s = detail::sort_sign(idx);
    if (s == 0) {
      if (!c.is_zero()) throw Error(ErrorKind::InvalidArgument, "repeated index in alternating form");
      return;
    }
    if (c.is_zero())
      coeffs_.erase(idx);
    else
      coeffs_[idx] = s > 0 ? c : -c;
  }
  void add_to(Index idx, const Scalar& c) {
    if (c.is_zero()) return;
    const int s = detail::sort_sign(idx);
    if (s == 0) return;
    Scalar& slot = coeffs_[idx];
    slot += s > 0 ? c : -c;
    if (slot.is_zero()) coeffs_.erase(idx);
  }

  Vec as_covector() const {
    if (degree_ != 1) throw Error(ErrorKind::InvalidArgument, "not a 1-form");
    Vec v(dim_);
    for (const auto& [i, c] : coeffs_) v[i[0]] = c;
    return v;
  }
  /// W(i, j) = w(e_i, e_j).
  Mat as_matrix() const {
    if (degree_ != 2) throw Error(ErrorKind::InvalidArgument, "not a 2-form");
    Mat m(dim_, dim_);
    for (const auto& [i, c] : coeffs_) {
      m(i[0], i[1]) = c;
      m(i[1], i[0]) = -c;
    }
    return m;
  }
  Scalar scalar_value() const {
    if (degree_ != 0) throw Error(ErrorKind::InvalidArgument, "not a 0-form");
    return at({});
  }

  /// Value on arbitrary vectors: sum over tuples of coefficient times minor.
  Scalar evaluate(const std::vector<Vec>& vs) const {
    if (vs.size() != degree_) throw Error(ErrorKind::InvalidArgument, "wrong number of arguments");
    for (const auto& v : vs)
      if (v.size() != dim_) throw Error(ErrorKind::AmbientMismatch, "vector length");
    Scalar total;
    for (const auto& [idx, c] : coeffs_) {
      Mat minor(degree_, degree_);
      for (std::size_t a = 0; a < degree_; ++a)
        for (std::size_t b = 0; b < degree_; ++b) minor(a, b) = vs[a][idx[b]];
      const Scalar d = determinant(minor);
      if (!d.is_zero()) total += c * d;
    }
    return total;
  }

  KForm substitute(const Assignment& at) const {
    KForm f(dim_, degree_);
    for (const auto& [i, c] : coeffs_) f.set(i, c.substitute(at));
    return f;
  }

  /// (P^* w)(X, ...) = w(P X, ...).
  KForm pullback(const Mat& P) const {
    if (P.rows() != dim_ || !P.is_square()) throw Error(ErrorKind::AmbientMismatch, "pullback shape");
    KForm f(dim_, degree_);
    for (const auto& J : combinations(dim_, degree_)) {
      std::vector<Vec> args;
      for (auto j : J) args.push_back(P.column(j));
      f.set(J, evaluate(args));
    }
    return f;
  }

  friend KForm operator+(KForm a, const KForm& b) {
    check_same(a, b);
    for (const auto& [i, c] : b.coeffs_) a.add_to(i, c);
    return a;
  }
  friend KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }
  friend KForm operator-(KForm a) {
    for (auto& [i, c] : a.coeffs_) c = -c;
    return a;
  }
  friend KForm operator*(const Scalar& s, const KForm& a) {
    KForm r(a.dim_, a.degree_);
    if (s.is_zero()) return r;
    for (const auto& [i, c] : a.coeffs_) r.coeffs_[i] = s * c;
    return r;
  }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && (a - b).is_zero();
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  /// Sum of monomials in the given names, e.g. "e0^e1 + (a - b)*e2^e3".
  std::string str(const std::vector<std::string>& names) const {
    if (degree_ == 0) return at({}).str();
    std::string out;
    for (const auto& [idx, c] : coeffs_) {
      std::string mono;
      for (std::size_t k = 0; k < idx.size(); ++k) mono += (k ? "^" : "") + names.at(idx[k]);
      LieAlgebra::append_term(out, c, mono);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_same(const KForm& a, const KForm& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::AmbientMismatch, "forms live on different algebras");
    if (a.degree_ != b.degree_) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
  }

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Index, Scalar> coeffs_;
};

inline KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::AmbientMismatch, "wedge of forms on different algebras");
  KForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [I, c] : a.coeffs())
    for (const auto& [J, d] : b.coeffs()) {
      Index K = I;
      K.insert(K.end(), J.begin(), J.end());
      r.add_to(K, c * d);
    }
  return r;
}

inline KForm interior(const Vec& v, const KForm& a) {
  if (a.degree() == 0) throw Error(ErrorKind::DegreeZero, "interior product of a 0-form");
  if (v.size() != a.dim()) throw Error(ErrorKind::AmbientMismatch, "vector length");
  KForm r(a.dim(), a.degree() - 1);
  for (const auto& [I, c] : a.coeffs())
    for (std::size_t p = 0; p < I.size(); ++p) {
      if (v[I[p]].is_zero()) continue;
      Index rest = I;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      r.add_to(rest, (p % 2 ? Scalar(-1) : Scalar(1)) * v[I[p]] * c);
    }
  return r;
}

inline KForm interior_basis(std::size_t i, const KForm& a) {
  return interior(unit_vector<Scalar>(a.dim(), i), a);
}

/// Chevalley-Eilenberg differential,
/// da(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i,X_j], X_0..^i..^j..X_k).
inline KForm ce_d(const LieAlgebra& g, const KForm& a) {
  if (a.dim() != g.dim()) throw Error(ErrorKind::AmbientMismatch, "form and algebra dimensions differ");
  const std::size_t k = a.degree(), n = g.dim();
  KForm r(n, k + 1);
  if (k == 0 || a.is_zero()) return r;
  for (const auto& J : combinations(n, k + 1)) {
    Scalar val;
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t q = p + 1; q <= k; ++q) {
        const Vec& br = g.structure(J[p], J[q]);
        Index rest;
        for (std::size_t m = 0; m <= k; ++m)
          if (m != p && m != q) rest.push_back(J[m]);
        Scalar s;
        for (std::size_t m = 0; m < n; ++m) {
          if (br[m].is_zero()) continue;
          Index t{m};
          t.insert(t.end(), rest.begin(), rest.end());
          const Scalar c = a.at(t);
          if (!c.is_zero()) s += br[m] * c;
        }
        if (s.is_zero()) continue;
        if ((p + q) % 2) val -= s;
        else val += s;
      }
    r.set(J, val);
  }
  return r;
}

/// d_lambda a = da - lambda ^ a.
inline KForm twisted_d(const LieAlgebra& g, const KForm& a, const KForm& lambda) {
  if (lambda.degree() != 1) throw Error(ErrorKind::InvalidArgument, "twisting form must have degree 1");
  return ce_d(g, a) - wedge(lambda, a);
}

/// Cartan formula L_v = d i_v + i_v d.
inline KForm lie_derivative(const LieAlgebra& g, const Vec& v, const KForm& a) {
  KForm r = interior(v, ce_d(g, a));
  if (a.degree() > 0) r = r + ce_d(g, interior(v, a));
  return r;
}

struct Extension {
  LieAlgebra algebra;
  KForm lambda;
};

/// g(D) = RD + g together with the closed 1-form lambda, lambda(D) = 1.
inline Extension extend_by_derivation(const LieAlgebra& g, const Mat& D, std::string new_name = {}) {
  Extension e{extend_algebra(g, D, std::move(new_name)), KForm()};
  e.lambda = KForm::dual(e.algebra.dim(), 0);
  if (!ce_d(e.algebra, e.lambda).is_zero())
    throw Error(ErrorKind::NonClosedLambda, "d(lambda) != 0 on the extension");
  return e;
}

}  // namespace lck

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lck/scalar.hpp"

namespace lck {

/// Finite set of polynomials. Depending on context it is either a set of
/// equations (a condition holds exactly where all vanish) or a set of
/// exclusions (a generic result needs all of them nonzero).
class Locus {
 public:
  void add(const Poly& p) {
    if (p.is_zero() || p.is_constant()) return;
    Poly m = p.monic();
    for (const auto& q : polys_)
      if (q == m) return;
    polys_.push_back(std::move(m));
  }
  void add(const Scalar& s) {
    add(s.num());
  }
  void merge(const Locus& o) {
    for (const auto& p : o.polys_) add(p);
  }
  bool empty() const { return polys_.empty(); }
  std::size_t size() const { return polys_.size(); }
  const std::vector<Poly>& polys() const { return polys_; }

  /// True when some polynomial of the set is annihilated by the point.
  bool hits(const Assignment& at) const {
    for (const auto& p : polys_)
      if (p.eval(at) == 0) return true;
    return false;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (i) out += ", ";
      out += polys_[i].str();
    }
    return out + "}";
  }

 private:
  std::vector<Poly> polys_;
};

inline std::size_t scalar_size(const Scalar& s) { return s.size(); }
inline std::size_t scalar_size(const CScalar& s) { return s.size(); }

inline void add_pivot_locus(Locus& l, const Scalar& s) {
  if (!s.is_constant()) {
    l.add(s.num());
    l.add(s.den());
  }
}
inline void add_pivot_locus(Locus& l, const CScalar& s) {
  if (!s.is_constant()) l.add(s.norm2());
}

/// Dense row-major matrix. Column j of an endomorphism is the image of e_j.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != nrows) throw Error(ErrorKind::InvalidArgument, "column length");
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape");
    std::vector<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (a.data_[k] != b.data_[k]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Stacks `b` below `a`.
  friend Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    if (a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "vstack shape");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), r.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + a.data_.size());
    return r;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Vec = std::vector<Scalar>;
using CVec = std::vector<CScalar>;
using Mat = Matrix<Scalar>;
using CMat = Matrix<CScalar>;

template <class T>
std::vector<T> unit_vector(std::size_t n, std::size_t i) {
  std::vector<T> v(n);
  v[i] = T(1);
  return v;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

template <class T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class T>
std::vector<T> operator*(const T& s, std::vector<T> a) {
  for (auto& x : a) x = s * x;
  return a;
}

inline CVec complexify(const Vec& v) {
  CVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}
inline CVec conj(const CVec& v) {
  CVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.conj());
  return r;
}

/// Reduced row echelon form over the scalar field. Pivots are the entries
/// divided out; non-constant ones make the rank generic and land in `locus`.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;
  std::vector<T> pivots;
  Locus locus;

  std::size_t rank() const { return pivot_cols.size(); }
};

template <class T>
Echelon<T> echelon(Matrix<T> m) {
  Echelon<T> e;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::optional<std::size_t> best;
    bool best_const = false;
    std::size_t best_size = 0;
    for (std::size_t i = row; i < R; ++i) {
      const T& x = m(i, col);
      if (x.is_zero()) continue;
      const bool c = x.is_constant();
      const std::size_t sz = scalar_size(x);
      if (!best || (c && !best_const) || (c == best_const && sz < best_size)) {
        best = i;
        best_const = c;
        best_size = sz;
      }
    }
    if (!best) continue;
    if (*best != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(row, j), m(*best, j));
    const T piv = m(row, col);
    e.pivots.push_back(piv);
    add_pivot_locus(e.locus, piv);
    const T inv = T(1) / piv;
    for (std::size_t j = col; j < C; ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const T f = m(i, col);
      for (std::size_t j = col; j < C; ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return echelon(m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, Locus* locus = nullptr) {
  const Echelon<T> e = echelon(m);
  if (locus) locus->merge(e.locus);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(C);
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solutions of m x = b: a particular solution (free variables zero) and a
/// kernel basis, or nullopt when the system is inconsistent.
template <class T>
struct LinearSolution {
  std::vector<T> particular;
  std::vector<std::vector<T>> kernel;
  Locus locus;
};

template <class T>
std::optional<LinearSolution<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "solve: rhs length");
  const std::size_t R = m.rows(), C = m.cols();
  Matrix<T> aug(R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  const Echelon<T> e = echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == C) return std::nullopt;
  LinearSolution<T> s;
  s.particular.assign(C, T{});
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) s.particular[e.pivot_cols[r]] = e.reduced(r, C);
  s.locus = e.locus;
  std::vector<bool> is_pivot(C, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(C);
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    s.kernel.push_back(std::move(v));
  }
  return s;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, Locus* locus = nullptr) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const Echelon<T> e = echelon(aug);
  if (locus) locus->merge(e.locus);
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Determinant by fraction-free (Bareiss) elimination.
template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return T{};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

template <class T>
std::string vec_str(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

inline Mat substitute(const Mat& m, const Assignment& at) {
  Mat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(at);
  return r;
}

inline Vec substitute(const Vec& v, const Assignment& at) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.substitute(at));
  return r;
}

}  // namespace lck

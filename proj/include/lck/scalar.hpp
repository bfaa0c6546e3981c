#pragma once

#include <string>
#include <utility>

#include "lck/poly.hpp"

namespace lck {

/// Element of Q(p1,...,pm): a reduced fraction of polynomials. The
/// denominator is kept monic, so the representation is canonical; equality
/// is still decided by cross-multiplication.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(int c) : num_(c), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}
  Scalar(const Rational& c) : num_(c), den_(1) {}
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}
  Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar param(const ParamSpacePtr& space, std::string_view name) {
    return Scalar(Poly::variable(space, name));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Rational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  Scalar operator-() const { return Scalar(-num_, den_, Raw{}); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_constant() && b.den_.is_constant())
      return Scalar(a.num_ * b.num_, Poly(1), Raw{});
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
    return Scalar(den_, num_);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ * b.den_ - b.num_ * a.den_ == Poly();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact value at a rational point.
  Rational eval(const Assignment& at) const {
    const Rational d = den_.eval(at);
    if (d == 0) throw Error(ErrorKind::DenominatorVanishes, assignment_str(at));
    return num_.eval(at) / d;
  }

  /// Specializes the assigned parameters, keeping the rest symbolic.
  Scalar substitute(const Assignment& at) const {
    if (den_.is_constant()) return Scalar(num_.substitute(at), den_, Raw{});
    Poly d = den_.substitute(at);
    if (d.is_zero()) throw Error(ErrorKind::DenominatorVanishes, assignment_str(at));
    return Scalar(num_.substitute(at), std::move(d));
  }

  /// Cost used to prefer simple pivots during elimination.
  std::size_t size() const { return num_.term_count() + den_.term_count(); }

  std::string str() const {
    if (den_.is_constant()) return num_.str();
    std::string n = num_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    const bool simple_den = den_.term_count() == 1 && den_.leading_coefficient() == 1 &&
                            d.find('*') == std::string::npos;
    if (!simple_den) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  struct Raw {};
  Scalar(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      num_ = Poly();
      den_ = Poly(1);
      return;
    }
    if (den_.is_constant()) {
      num_ = num_.scaled(Rational(1) / den_.constant_value());
      den_ = Poly(1);
      return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
      num_ = num_.scaled(Rational(1) / lc);
      den_ = den_.scaled(Rational(1) / lc);
    }
    if (den_.is_constant()) den_ = Poly(1);
  }

  Poly num_;
  Poly den_;
};

/// Element of Q(p)(i), used for complexified subalgebras.
class CScalar {
 public:
  CScalar() = default;
  CScalar(int c) : re_(c) {}
  CScalar(Scalar re) : re_(std::move(re)) {}
  CScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static CScalar i() { return CScalar(Scalar(0), Scalar(1)); }

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_constant() const { return re_.is_constant() && im_.is_constant(); }
  std::size_t size() const { return re_.size() + im_.size(); }

  CScalar conj() const { return CScalar(re_, -im_); }
  /// z * conj(z), always real.
  Scalar norm2() const { return re_ * re_ + im_ * im_; }

  CScalar operator-() const { return CScalar(-re_, -im_); }
  friend CScalar operator+(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend CScalar operator-(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend CScalar operator/(const CScalar& a, const CScalar& b) { return a * b.inverse(); }
  CScalar& operator+=(const CScalar& o) { return *this = *this + o; }
  CScalar& operator-=(const CScalar& o) { return *this = *this - o; }
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }
  CScalar& operator/=(const CScalar& o) { return *this = *this / o; }

  CScalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero complex scalar");
    const Scalar n = norm2();
    return CScalar(re_ / n, -im_ / n);
  }

  friend bool operator==(const CScalar& a, const CScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    const std::string im = "(" + im_.str() + ")*i";
    if (re_.is_zero()) return im;
    return "(" + re_.str() + ") + " + im;
  }

 private:
  Scalar re_;
  Scalar im_;
};

}  // namespace lck

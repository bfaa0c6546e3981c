#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lck/error.hpp"

namespace lck {

using Rational = mpq_class;

/// Ordered list of parameter names. Polynomials over the same names share
/// exponent layout; the order fixes the graded-lex monomial order.
class ParamSpace {
 public:
  explicit ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw Error(ErrorKind::InvalidArgument, "duplicate parameter " + names_[i]);
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

 private:
  std::vector<std::string> names_;
};

using ParamSpacePtr = std::shared_ptr<const ParamSpace>;

inline ParamSpacePtr make_params(std::vector<std::string> names) {
  return std::make_shared<const ParamSpace>(std::move(names));
}

/// Rational values for (some of) the parameters.
using Assignment = std::map<std::string, Rational, std::less<>>;

inline std::string assignment_str(const Assignment& at) {
  std::string out;
  for (const auto& [k, v] : at) {
    if (!out.empty()) out += ",";
    out += k + "=" + v.get_str();
  }
  return out;
}

namespace detail {

inline std::size_t space_size(const ParamSpacePtr& s) { return s ? s->size() : 0; }

inline bool same_space(const ParamSpacePtr& a, const ParamSpacePtr& b) {
  if (a == b) return true;
  if (space_size(a) != space_size(b)) return false;
  if (space_size(a) == 0) return true;
  return a->names() == b->names();
}

// Names of `a` followed by the names of `b` not already present.
inline ParamSpacePtr union_space(const ParamSpacePtr& a, const ParamSpacePtr& b) {
  if (space_size(a) == 0) return b;
  if (space_size(b) == 0) return a;
  std::vector<std::string> names = a->names();
  for (const auto& n : b->names())
    if (!a->index_of(n)) names.push_back(n);
  if (names.size() == a->size()) return a;
  return make_params(std::move(names));
}

}  // namespace detail

/// Sparse multivariate polynomial with rational coefficients.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
      const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
      const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
      if (da != db) return da > db;
      return a > b;
    }
  };
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
  }

  static Poly variable(const ParamSpacePtr& space, std::size_t index) {
    if (!space || index >= space->size())
      throw Error(ErrorKind::InvalidArgument, "parameter index out of range");
    Poly p;
    p.space_ = space;
    Exponents e(space->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  static Poly variable(const ParamSpacePtr& space, std::string_view name) {
    auto idx = space ? space->index_of(name) : std::nullopt;
    if (!idx) throw Error(ErrorKind::InvalidArgument, "unknown parameter " + std::string(name));
    return variable(space, *idx);
  }

  const ParamSpacePtr& space() const { return space_; }
  std::size_t nvars() const { return detail::space_size(space_); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }

  Rational constant_value() const {
    if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }

  unsigned total_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
      if (var < e.size()) d = std::max(d, e[var]);
    return d;
  }

  /// Same polynomial re-expressed over `target`, which must contain every
  /// parameter this polynomial uses.
  Poly in_space(const ParamSpacePtr& target) const {
    if (detail::same_space(space_, target)) {
      Poly p = *this;
      p.space_ = target;
      if (nvars() == 0 && detail::space_size(target) > 0) p = pad_constant(target);
      return p;
    }
    const std::size_t n = detail::space_size(target);
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto idx = target ? target->index_of(space_->names()[i]) : std::nullopt;
      if (!idx) {
        if (degree_in(i) != 0)
          throw Error(ErrorKind::InvalidArgument,
                      "parameter " + space_->names()[i] + " missing from target space");
        map[i] = n;
      } else {
        map[i] = *idx;
      }
    }
    Poly p;
    p.space_ = target;
    for (const auto& [e, c] : terms_) {
      Exponents ne(n, 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) ne[map[i]] = e[i];
      p.terms_.emplace(std::move(ne), c);
    }
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    auto [x, y] = unify(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    auto [x, y] = unify(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
    return x;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    auto [x, y] = unify(a, b);
    Poly r;
    r.space_ = x.space_;
    const std::size_t n = x.nvars();
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        Exponents e(n, 0);
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& s) const {
    if (s == 0) return Poly();
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }

  Poly pow(unsigned k) const {
    Poly r(1), base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (detail::same_space(a.space_, b.space_)) return a.terms_ == b.terms_;
    return (a - b).is_zero();
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Evaluates at a point; every parameter that occurs must be assigned.
  Rational eval(const Assignment& at) const {
    std::vector<std::optional<Rational>> vals(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = at.find(space_->names()[i]);
      if (it != at.end()) vals[i] = it->second;
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vals[i])
          throw Error(ErrorKind::InvalidArgument, "no value for parameter " + space_->names()[i]);
        Rational p = 1;
        for (unsigned k = 0; k < e[i]; ++k) p *= *vals[i];
        t *= p;
      }
      sum += t;
    }
    return sum;
  }

  /// Substitutes the assigned parameters; the rest stay symbolic.
  Poly substitute(const Assignment& at) const {
    std::vector<std::optional<Rational>> vals(nvars());
    bool any = false;
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = at.find(space_->names()[i]);
      if (it != at.end()) vals[i] = it->second, any = true;
    }
    if (!any) return *this;
    Poly r;
    r.space_ = space_;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      Exponents ne = e;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!vals[i] || e[i] == 0) continue;
        for (unsigned k = 0; k < e[i]; ++k) t *= *vals[i];
        ne[i] = 0;
      }
      r.add_term(ne, t);
    }
    return r;
  }

  /// Coefficients of this polynomial viewed in K[others][x_var]; index = degree.
  std::vector<Poly> coefficients_in(std::size_t var) const {
    std::vector<Poly> cs(degree_in(var) + 1);
    for (auto& c : cs) c.space_ = space_;
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      unsigned d = 0;
      if (var < ne.size()) d = ne[var], ne[var] = 0;
      cs[d].add_term(ne, c);
    }
    return cs;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coefficient());
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += space_->names()[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

  static std::pair<Poly, Poly> unify(const Poly& a, const Poly& b) {
    if (a.space_ == b.space_) return {a, b};
    if (detail::same_space(a.space_, b.space_)) {
      ParamSpacePtr s = a.nvars() ? a.space_ : b.space_;
      return {a.in_space(s), b.in_space(s)};
    }
    ParamSpacePtr u = detail::union_space(a.space_, b.space_);
    return {a.in_space(u), b.in_space(u)};
  }

 private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly pad_constant(const ParamSpacePtr& target) const {
    Poly p;
    p.space_ = target;
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponents(target->size(), 0), c);
    return p;
  }

  friend std::optional<Poly> try_divide(const Poly& a, const Poly& b);
  friend Poly from_terms(const ParamSpacePtr& space, Terms terms);

  ParamSpacePtr space_;
  Terms terms_;
};

/// Quotient a / b if b divides a, nullopt otherwise.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
  auto [r, d] = Poly::unify(a, b);
  Poly q;
  q.space_ = r.space_;
  const std::size_t n = d.nvars();
  const Poly::Exponents lead_d = d.leading_exponents();
  const Rational lc_d = d.leading_coefficient();
  while (!r.is_zero()) {
    const Poly::Exponents& lead_r = r.leading_exponents();
    Poly::Exponents e(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (lead_r[i] < lead_d[i]) return std::nullopt;
      e[i] = lead_r[i] - lead_d[i];
    }
    Poly t;
    t.space_ = r.space_;
    t.terms_.emplace(std::move(e), r.leading_coefficient() / lc_d);
    q.add_term(t.terms_.begin()->first, t.terms_.begin()->second);
    r = r - t * d;
  }
  return q;
}

/// Quotient a / b when b divides a exactly; throws std::logic_error otherwise.
inline Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

inline std::optional<std::size_t> shared_var(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
  return std::nullopt;
}

inline Poly content_in(const Poly& p, std::size_t var) {
  Poly g;
  for (const auto& c : p.coefficients_in(var))
    if (!c.is_zero()) g = gcd(g, c);
  return g;
}

inline Poly primitive_in(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, var));
}

// Pseudo-remainder of a by b as polynomials in x_var.
inline Poly prem(Poly r, const Poly& b, std::size_t var) {
  const auto cb = b.coefficients_in(var);
  const unsigned db = static_cast<unsigned>(cb.size() - 1);
  const Poly& lcb = cb.back();
  const Poly x = Poly::variable(b.space(), var);
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    const Poly lcr = r.coefficients_in(var).back();
    r = lcb * r - lcr * x.pow(dr - db) * b;
  }
  return r;
}

}  // namespace detail

inline Poly from_terms(const ParamSpacePtr& space, Poly::Terms terms) {
  Poly p;
  p.space_ = space;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

namespace detail {

// Fallback: recursive primitive remainder sequence in the first shared variable.
inline Poly prs_gcd(const Poly& x, const Poly& y) {
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  if (x.is_constant() || y.is_constant()) return Poly(1);
  const std::size_t var = *shared_var(x, y);
  if (x.degree_in(var) == 0) return gcd(x, content_in(y, var));
  if (y.degree_in(var) == 0) return gcd(content_in(x, var), y);
  const Poly cx = content_in(x, var);
  const Poly cy = content_in(y, var);
  Poly px = divide_exact(x, cx).monic();
  Poly py = divide_exact(y, cy).monic();
  const Poly g = gcd(cx, cy);
  if (px.degree_in(var) < py.degree_in(var)) std::swap(px, py);
  while (!py.is_zero()) {
    Poly r = prem(px, py, var);
    px = std::move(py);
    py = primitive_in(r, var).monic();
  }
  return (g * primitive_in(px, var)).monic();
}

inline mpz_class integer_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, mpz_class(c.get_num()));
  return g;
}

inline mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, mpz_class(abs(c.get_num())));
  return m;
}

// Scales p to an integer polynomial with coprime coefficients.
inline Poly primitive_integer(const Poly& p) {
  mpz_class l = 1;
  for (const auto& [e, c] : p.terms()) l = lcm(l, mpz_class(c.get_den()));
  Poly q = p.scaled(Rational(l));
  return q.scaled(Rational(1) / Rational(integer_content(q)));
}

inline Poly eval_var(const Poly& p, std::size_t var, const mpz_class& x) {
  Poly::Terms t;
  for (const auto& [e, c] : p.terms()) {
    mpz_class xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e[var]);
    Poly::Exponents ne = e;
    ne[var] = 0;
    t[ne] += c * Rational(xp);
  }
  return from_terms(p.space(), std::move(t));
}

// Recovers a polynomial in `var` from its value at var = x, reading the
// integer coefficients as balanced base-x digits.
inline Poly interpolate(Poly h, std::size_t var, const mpz_class& x) {
  Poly::Terms out;
  const mpz_class half = x / 2;
  for (unsigned i = 0; !h.is_zero(); ++i) {
    Poly::Terms digit;
    for (const auto& [e, c] : h.terms()) {
      mpz_class r = c.get_num() % x;
      if (r > half) r -= x;
      if (r < -half) r += x;
      if (r != 0) digit[e] = Rational(r);
    }
    const Poly g = from_terms(h.space(), digit);
    for (auto& [e, c] : digit) {
      Poly::Exponents ne = e;
      ne[var] = i;
      out[ne] = c;
    }
    h = (h - g).scaled(Rational(1) / Rational(x));
  }
  return from_terms(h.space(), std::move(out));
}

// Heuristic gcd of integer polynomials; nullopt when every evaluation point
// was unlucky.
inline std::optional<Poly> heuristic_gcd(Poly f, Poly g, std::vector<std::size_t> vars) {
  if (vars.empty()) {
    const mpz_class a = f.constant_value().get_num(), b = g.constant_value().get_num();
    Poly::Terms t;
    t[Poly::Exponents(f.nvars(), 0)] = Rational(gcd(a, b));
    return from_terms(f.space(), std::move(t));
  }
  const mpz_class cf = integer_content(f), cg = integer_content(g);
  const mpz_class cont = gcd(cf, cg);
  f = f.scaled(Rational(1) / Rational(cf));
  g = g.scaled(Rational(1) / Rational(cg));
  const mpz_class fn = max_norm(f), gn = max_norm(g);
  const mpz_class bound = 2 * std::min(fn, gn) + 29;
  const mpz_class lf = abs(f.leading_coefficient().get_num());
  const mpz_class lg = abs(g.leading_coefficient().get_num());
  mpz_class x = std::max(mpz_class(std::min(bound, mpz_class(99 * sqrt(bound)))),
                         mpz_class(2 * std::min(fn / lf, gn / lg) + 4));
  const std::size_t var = vars.back();
  vars.pop_back();
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Poly ff = eval_var(f, var, x), gg = eval_var(g, var, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heuristic_gcd(ff, gg, vars);
      if (!h) return std::nullopt;
      Poly cand = interpolate(*h, var, x);
      if (!cand.is_zero()) {
        cand = cand.scaled(Rational(1) / Rational(integer_content(cand)));
        if (try_divide(f, cand) && try_divide(g, cand)) return cand.scaled(Rational(cont));
      }
    }
    x = 73794 * x * mpz_class(sqrt(mpz_class(sqrt(x)))) / 27011;
  }
  return std::nullopt;
}

}  // namespace detail

/// Monic greatest common divisor. A heuristic evaluation/interpolation gcd
/// handles almost every input; the remainder sequence is the fallback.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  auto [x, y] = Poly::unify(a, b);
  if (x == y) return x.monic();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < x.nvars(); ++i)
    if (x.degree_in(i) > 0 || y.degree_in(i) > 0) vars.push_back(i);
  if (auto h = detail::heuristic_gcd(detail::primitive_integer(x), detail::primitive_integer(y), vars))
    return h->monic();
  return detail::prs_gcd(x, y);
}

}  // namespace lck

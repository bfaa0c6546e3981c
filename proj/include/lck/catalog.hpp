#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lck/kform.hpp"

namespace lck {

/// A named algebra with its parametric families of complex structures,
/// forms and bilinear forms.
struct CatalogEntry {
  std::string id;
  LieAlgebra algebra;
  ParamSpacePtr params;
  std::map<std::string, Mat> endos;
  std::map<std::string, KForm> forms;
  std::map<std::string, Mat> bilinears;
  Locus excluded;

  Scalar param(std::string_view n) const { return Scalar::param(params, n); }
  const Mat& endo(const std::string& n) const { return lookup(endos, n); }
  const KForm& form(const std::string& n) const { return lookup(forms, n); }
  const Mat& bilinear(const std::string& n) const { return lookup(bilinears, n); }

 private:
  template <class M>
  static const typename M::mapped_type& lookup(const M& m, const std::string& n) {
    auto it = m.find(n);
    if (it == m.end()) throw Error(ErrorKind::UnknownId, n);
    return it->second;
  }
};

namespace catalog {

inline Vec vec(std::initializer_list<Scalar> xs) { return Vec(xs); }

inline LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra(names);
}

// [e1,e2] = -e3 and cyclically, on the basis vectors starting at `off`.
inline void su2_brackets(LieAlgebra& g, std::size_t off) {
  const std::size_t n = g.dim();
  auto e = [&](std::size_t k) { return unit_vector<Scalar>(n, off + k); };
  g.set_bracket(off + 0, off + 1, Scalar(-1) * e(2));
  g.set_bracket(off + 1, off + 2, Scalar(-1) * e(0));
  g.set_bracket(off + 2, off + 0, Scalar(-1) * e(1));
}

// [h,e+] = 2e+, [h,e-] = -2e-, [e+,e-] = h on (h, ep, em) starting at `off`.
inline void sl2_brackets(LieAlgebra& g, std::size_t off) {
  const std::size_t n = g.dim();
  auto e = [&](std::size_t k) { return unit_vector<Scalar>(n, off + k); };
  g.set_bracket(off + 0, off + 1, Scalar(2) * e(1));
  g.set_bracket(off + 0, off + 2, Scalar(-2) * e(2));
  g.set_bracket(off + 1, off + 2, e(0));
}

inline LieAlgebra u2() {
  LieAlgebra g({"e0", "e1", "e2", "e3"});
  su2_brackets(g, 1);
  return g;
}
inline LieAlgebra su2() {
  LieAlgebra g({"e1", "e2", "e3"});
  su2_brackets(g, 0);
  return g;
}
inline LieAlgebra gl2r() {
  LieAlgebra g({"e0", "h", "ep", "em"});
  sl2_brackets(g, 1);
  return g;
}
inline LieAlgebra sl2r() {
  LieAlgebra g({"h", "ep", "em"});
  sl2_brackets(g, 0);
  return g;
}

inline Mat endo_from_columns(const std::vector<Vec>& cols) { return Mat::from_columns(cols, cols.size()); }

inline KForm two_form(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, Scalar>> terms) {
  KForm f(n, 2);
  for (const auto& [i, j, c] : terms) f.add_to({i, j}, c);
  return f;
}

inline CatalogEntry make_u2() {
  CatalogEntry e;
  e.id = "u2";
  e.algebra = u2();
  e.params = make_params({"a", "b", "a1", "a2", "a3", "t"});
  const Scalar a = e.param("a"), b = e.param("b"), t = e.param("t");
  const Scalar c = -(Scalar(1) + a * a) / b;
  const Scalar a1 = e.param("a1"), a2 = e.param("a2"), a3 = e.param("a3");
  // J e0 = a e0 + b e1, J e1 = c e0 - a e1, J e2 = -e3, J e3 = e2
  e.endos["J_ab"] = endo_from_columns({vec({a, b, 0, 0}), vec({c, -a, 0, 0}), vec({0, 0, 0, -1}), vec({0, 0, 1, 0})});
  e.endos["J_t"] = endo_from_columns({vec({0, 1, 0, 0}), vec({-1, 0, 0, 0}), vec({0, t, 0, 1}), vec({t, 0, -1, 0})});
  e.forms["omega"] = two_form(4, {{0, 1, 1}, {2, 3, 1}});
  e.forms["omega_general"] = two_form(4, {{0, 1, a1}, {0, 2, a2}, {0, 3, a3}, {2, 3, a1}, {3, 1, a2}, {1, 2, a3}});
  e.forms["lambda"] = -KForm::dual(4, 0);
  e.forms["phi"] = KForm::dual(4, 1);
  e.bilinears["B"] = Mat::from_rows({vec({1, 0, 0, 0}), vec({0, -2, 0, 0}), vec({0, 0, -2, 0}), vec({0, 0, 0, -2})});
  e.excluded.add(b.num());
  return e;
}

inline CatalogEntry make_gl2r() {
  CatalogEntry e;
  e.id = "gl2r";
  e.algebra = gl2r();
  e.params = make_params({"mu1", "mu2", "ah", "ap", "am"});
  const Scalar m1 = e.param("mu1"), m2 = e.param("mu2");
  const Scalar ah = e.param("ah"), ap = e.param("ap"), am = e.param("am");
  const Scalar n2 = m1 * m1 + m2 * m2, half(Rational(1, 2));
  // family (i); columns are the images of e0, h, e+, e-
  const Mat Ji = endo_from_columns({vec({m2 / m1, 0, -n2 / (Scalar(2) * m1), n2 / (Scalar(2) * m1)}),
                                    vec({0, 0, 1, 1}),
                                    vec({Scalar(1) / m1, -half, -m2 / (Scalar(2) * m1), m2 / (Scalar(2) * m1)}),
                                    vec({Scalar(-1) / m1, -half, m2 / (Scalar(2) * m1), -m2 / (Scalar(2) * m1)})});
  const Mat flip = Mat::from_rows({vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, -1, 0}), vec({0, 0, 0, -1})});
  e.endos["J_mu_i"] = Ji;
  e.endos["J_mu_ii"] = flip * Ji * flip;
  const KForm phi = KForm::from_covector(vec({0, ah, ap, am}));
  const KForm e0 = KForm::dual(4, 0);
  e.forms["phi"] = phi;
  e.forms["omega_general"] = wedge(e0, phi) + ce_d(e.algebra, phi);
  e.forms["omega_thm_i"] = two_form(4, {{0, 2, 1}, {0, 3, -1}, {1, 2, -2}, {1, 3, -2}});
  e.forms["lambda"] = -e0;
  e.bilinears["B"] = Mat::from_rows({vec({1, 0, 0, 0}), vec({0, 2, 0, 0}), vec({0, 0, 0, 1}), vec({0, 0, 1, 0})});
  e.excluded.add(m1.num());
  e.excluded.add((ah * ah + Scalar(4) * ap * am).num());
  return e;
}

inline CatalogEntry make_su2() {
  CatalogEntry e;
  e.id = "su2";
  e.algebra = su2();
  e.params = make_params({});
  e.forms["phi"] = KForm::dual(3, 0);
  e.bilinears["B"] = Mat::from_rows({vec({-2, 0, 0}), vec({0, -2, 0}), vec({0, 0, -2})});
  return e;
}

inline CatalogEntry make_sl2r() {
  CatalogEntry e;
  e.id = "sl2r";
  e.algebra = sl2r();
  e.params = make_params({});
  e.forms["phi"] = KForm::dual(3, 1) - KForm::dual(3, 2);
  e.bilinears["B"] = Mat::from_rows({vec({2, 0, 0}), vec({0, 0, 1}), vec({0, 1, 0})});
  return e;
}

inline CatalogEntry make_abelian(std::size_t n) {
  CatalogEntry e;
  e.id = "abelian_" + std::to_string(n);
  e.algebra = abelian(n);
  e.params = make_params({});
  e.bilinears["B"] = Mat::identity(n);
  return e;
}

}  // namespace catalog

/// Fresh catalog entry: u2, gl2r, su2, sl2r or abelian_<n>.
inline CatalogEntry get(const std::string& id) {
  if (id == "u2") return catalog::make_u2();
  if (id == "gl2r") return catalog::make_gl2r();
  if (id == "su2") return catalog::make_su2();
  if (id == "sl2r") return catalog::make_sl2r();
  const std::string prefix = "abelian_";
  if (id.rfind(prefix, 0) == 0 && id.size() > prefix.size() && id.size() <= prefix.size() + 2) {
    std::size_t n = 0;
    for (char ch : id.substr(prefix.size())) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::UnknownId, id);
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (n >= 1 && n <= 12) return catalog::make_abelian(n);
  }
  throw Error(ErrorKind::UnknownId, id);
}

inline std::vector<std::string> catalog_ids() { return {"u2", "gl2r", "su2", "sl2r", "abelian_<n>"}; }

}  // namespace lck

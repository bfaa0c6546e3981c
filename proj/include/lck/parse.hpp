#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lck/catalog.hpp"

namespace lck {

inline Error parse_error(const std::string& where, std::size_t pos, const std::string& msg) {
  return Error(ErrorKind::ParseError, where + " at position " + std::to_string(pos) + ": " + msg);
}

namespace parse_detail {

// Value of a subexpression: a scalar or a homogeneous form.
struct Val {
  bool is_form = false;
  Scalar s;
  KForm f;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, const ParamSpacePtr& params, const std::vector<std::string>* basis,
             std::string where)
      : text_(text), params_(params), basis_(basis), where_(std::move(where)) {}

  Val parse() {
    Val v = sum();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(where_, pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Val add(Val a, Val b, bool negate, std::size_t at) {
    if (negate) b = neg(std::move(b));
    if (!a.is_form && !b.is_form) return {false, a.s + b.s, {}};
    // scalar zero is the neutral element for any degree
    if (!a.is_form && a.s.is_zero()) return b;
    if (!b.is_form && b.s.is_zero()) return a;
    if (a.is_form != b.is_form || a.f.degree() != b.f.degree()) {
      pos_ = at;
      fail("adding terms of different degree");
    }
    return {true, {}, a.f + b.f};
  }
  static Val neg(Val v) {
    if (v.is_form) v.f = Scalar(-1) * v.f;
    else v.s = -v.s;
    return v;
  }

  Val sum() {
    skip_ws();
    Val v;
    if (accept('-')) v = neg(product());
    else {
      accept('+');
      v = product();
    }
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) v = add(std::move(v), product(), false, at);
      else if (accept('-')) v = add(std::move(v), product(), true, at);
      else return v;
    }
  }

  Val product() {
    Val v = unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        Val w = unary();
        if (v.is_form && w.is_form) {
          pos_ = at;
          fail("use ^ to multiply forms");
        }
        if (!v.is_form && !w.is_form) v.s *= w.s;
        else if (v.is_form) v.f = w.s * v.f;
        else v = {true, {}, v.s * w.f};
      } else if (accept('/')) {
        Val w = unary();
        if (w.is_form) {
          pos_ = at;
          fail("division by a form");
        }
        if (w.s.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (v.is_form) v.f = w.s.inverse() * v.f;
        else v.s /= w.s;
      } else {
        return v;
      }
    }
  }

  Val unary() {
    if (accept('-')) return neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Val power() {
    Val v = primary();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '^') {
      const std::size_t at = pos_++;
      if (v.is_form) {
        Val w = primary();
        if (!w.is_form) {
          pos_ = at;
          fail("wedge with a scalar");
        }
        v.f = wedge(v.f, w.f);
      } else {
        skip_ws();
        bool minus = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) minus = text_[pos_++] == '-';
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        Scalar r(1);
        for (long k = 0; k < e; ++k) r *= v.s;
        if (minus) {
          if (v.s.is_zero()) {
            pos_ = at;
            fail("zero to a negative power");
          }
          r = r.inverse();
        }
        v.s = r;
      }
      skip_ws();
    }
    return v;
  }

  Val primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Val v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return {false, Scalar(Rational(std::string(text_.substr(start, pos_ - start)))), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string id(text_.substr(start, pos_ - start));
      if (basis_) {
        for (std::size_t i = 0; i < basis_->size(); ++i)
          if ((*basis_)[i] == id) return {true, {}, KForm::dual(basis_->size(), i)};
      }
      if (params_ && params_->index_of(id)) return {false, Scalar::param(params_, id), {}};
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  ParamSpacePtr params_;
  const std::vector<std::string>* basis_;
  std::string where_;
  std::size_t pos_ = 0;
};

}  // namespace parse_detail

/// Parses a scalar literal: integers, parameters, + - * / ^, parentheses.
inline Scalar parse_scalar(std::string_view text, const ParamSpacePtr& params, const std::string& where = "scalar") {
  const auto v = parse_detail::ExprParser(text, params, nullptr, where).parse();
  return v.s;
}

/// Parses a linear combination of wedge monomials in dual-basis names,
/// e.g. "e0^e1 + e2^e3" or "-(1+a^2)/b * e1^e3".
inline KForm parse_form(std::string_view text, const ParamSpacePtr& params, const std::vector<std::string>& basis,
                        const std::string& where = "form") {
  const auto v = parse_detail::ExprParser(text, params, &basis, where).parse();
  if (!v.is_form) {
    if (v.s.is_zero()) throw parse_error(where, 0, "the zero form has no degree; omit it");
    return KForm::constant(basis.size(), v.s);
  }
  return v.f;
}

/// One algebra with its named forms, endomorphisms and bilinear forms.
struct Document {
  std::string id;
  ParamSpacePtr params;
  LieAlgebra algebra;
  std::map<std::string, KForm> forms;
  std::map<std::string, Mat> endos;
  std::map<std::string, Mat> bilinears;
  std::vector<Poly> excluded;

  std::vector<std::string> parameter_names() const {
    return params ? params->names() : std::vector<std::string>{};
  }
};

inline Document document_from(const CatalogEntry& e) {
  Document d{e.id, e.params, e.algebra, e.forms, e.endos, e.bilinears, e.excluded.polys()};
  return d;
}

namespace parse_detail {

using json = nlohmann::ordered_json;

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(where, 0, "missing field '" + key + "'");
  return j.at(key);
}

inline std::string as_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw parse_error(where, 0, "expected a string");
}

inline std::size_t basis_index(const json& j, const LieAlgebra& g, const std::string& where) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    const long long i = j.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= g.dim()) throw parse_error(where, 0, "index out of range");
    return static_cast<std::size_t>(i);
  }
  if (j.is_string()) {
    if (auto i = g.index_of(j.get<std::string>())) return *i;
    throw parse_error(where, 0, "unknown basis vector '" + j.get<std::string>() + "'");
  }
  throw parse_error(where, 0, "expected a basis index or name");
}

inline Vec parse_vector(const json& j, std::size_t n, const ParamSpacePtr& p, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw parse_error(where, 0, "expected " + std::to_string(n) + " entries");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    v[i] = parse_scalar(as_string(j[i], w), p, w);
  }
  return v;
}

inline Mat parse_matrix(const json& j, std::size_t n, const ParamSpacePtr& p, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw parse_error(where, 0, "expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vec row = parse_vector(j[r], n, p, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

inline json emit_matrix(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace parse_detail

/// Reads a document from JSON text. Every syntax or content problem raises
/// ParseError naming the JSON path and the character position.
inline Document parse_document(const std::string& text) {
  using parse_detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("document", e.byte, "malformed JSON");
  }
  if (!j.is_object()) throw parse_error("document", 0, "expected an object");
  Document d;
  d.id = j.value("id", std::string());
  std::vector<std::string> pnames;
  if (j.contains("parameters")) {
    const json& ps = j.at("parameters");
    if (!ps.is_array()) throw parse_error("parameters", 0, "expected a list of identifiers");
    for (const auto& p : ps) pnames.push_back(parse_detail::as_string(p, "parameters"));
  }
  d.params = pnames.empty() ? ParamSpacePtr{} : make_params(pnames);

  const json& alg = parse_detail::field(j, "algebra", "document");
  const json& basis = parse_detail::field(alg, "basis", "algebra");
  if (!basis.is_array() || basis.empty()) throw parse_error("algebra.basis", 0, "expected a nonempty list");
  std::vector<std::string> names;
  for (const auto& b : basis) names.push_back(parse_detail::as_string(b, "algebra.basis"));
  for (const auto& n : names)
    for (const auto& p : pnames)
      if (n == p) throw parse_error("algebra.basis", 0, "'" + n + "' is both a basis vector and a parameter");
  if (alg.contains("dim") && alg.at("dim") != names.size())
    throw parse_error("algebra.dim", 0, "dim does not match the basis length");
  try {
    d.algebra = LieAlgebra(names);
  } catch (const Error& e) {
    throw parse_error("algebra.basis", 0, e.witness());
  }
  const std::size_t n = names.size();

  // entries are loaded verbatim; the antisymmetric partner is filled in
  // only when the document does not list it
  std::vector<bool> listed(n * n, false);
  if (alg.contains("brackets")) {
    const json& br = alg.at("brackets");
    if (!br.is_array()) throw parse_error("algebra.brackets", 0, "expected a list");
    for (std::size_t k = 0; k < br.size(); ++k) {
      const std::string w = "algebra.brackets[" + std::to_string(k) + "]";
      const std::size_t i = parse_detail::basis_index(parse_detail::field(br[k], "i", w), d.algebra, w + ".i");
      const std::size_t jj = parse_detail::basis_index(parse_detail::field(br[k], "j", w), d.algebra, w + ".j");
      const json& cs = parse_detail::field(br[k], "coeffs", w);
      if (!cs.is_object()) throw parse_error(w + ".coeffs", 0, "expected a map basis -> scalar");
      Vec v(n);
      for (const auto& [key, val] : cs.items()) {
        const std::string wk = w + ".coeffs." + key;
        const auto idx = d.algebra.index_of(key);
        if (!idx) throw parse_error(wk, 0, "unknown basis vector '" + key + "'");
        v[*idx] = parse_scalar(parse_detail::as_string(val, wk), d.params, wk);
      }
      if (listed[i * n + jj]) throw parse_error(w, 0, "bracket listed twice");
      listed[i * n + jj] = true;
      d.algebra.set_structure(i, jj, v);
      if (!listed[jj * n + i]) d.algebra.set_structure(jj, i, Scalar(-1) * v);
    }
  }
  if (j.contains("h_subalgebra")) {
    const json& hs = j.at("h_subalgebra");
    if (!hs.is_array()) throw parse_error("h_subalgebra", 0, "expected a list of vectors");
    std::vector<Vec> h;
    for (std::size_t k = 0; k < hs.size(); ++k)
      h.push_back(parse_detail::parse_vector(hs[k], n, d.params, "h_subalgebra[" + std::to_string(k) + "]"));
    d.algebra.set_h(std::move(h));
  }
  if (j.contains("forms"))
    for (const auto& [key, val] : j.at("forms").items()) {
      const std::string w = "forms." + key;
      d.forms[key] = parse_form(parse_detail::as_string(val, w), d.params, names, w);
    }
  if (j.contains("endos"))
    for (const auto& [key, val] : j.at("endos").items())
      d.endos[key] = parse_detail::parse_matrix(val, n, d.params, "endos." + key);
  if (j.contains("bilinears"))
    for (const auto& [key, val] : j.at("bilinears").items())
      d.bilinears[key] = parse_detail::parse_matrix(val, n, d.params, "bilinears." + key);
  if (j.contains("excluded")) {
    const json& ex = j.at("excluded");
    if (!ex.is_array()) throw parse_error("excluded", 0, "expected a list of polynomials");
    for (std::size_t k = 0; k < ex.size(); ++k) {
      const std::string w = "excluded[" + std::to_string(k) + "]";
      const Scalar s = parse_scalar(parse_detail::as_string(ex[k], w), d.params, w);
      if (!s.den().is_constant()) throw parse_error(w, 0, "expected a polynomial");
      d.excluded.push_back(s.num());
    }
  }
  return d;
}

inline Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

/// Canonical JSON text: brackets for i < j only, terms in the fixed order.
inline std::string emit_document(const Document& d) {
  using parse_detail::json;
  json j;
  if (!d.id.empty()) j["id"] = d.id;
  j["parameters"] = d.parameter_names();
  const LieAlgebra& g = d.algebra;
  json alg;
  alg["dim"] = g.dim();
  alg["basis"] = g.names();
  json br = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      const Vec& v = g.structure(i, k);
      json cs = json::object();
      for (std::size_t m = 0; m < g.dim(); ++m)
        if (!v[m].is_zero()) cs[g.name(m)] = v[m].str();
      if (!cs.empty()) br.push_back({{"i", i}, {"j", k}, {"coeffs", cs}});
    }
  alg["brackets"] = br;
  j["algebra"] = alg;
  if (!g.h_basis().empty()) {
    json hs = json::array();
    for (const auto& v : g.h_basis()) {
      json row = json::array();
      for (const auto& x : v) row.push_back(x.str());
      hs.push_back(row);
    }
    j["h_subalgebra"] = hs;
  }
  json forms = json::object();
  for (const auto& [k, f] : d.forms)
    if (!f.is_zero()) forms[k] = f.str(g.names());
  j["forms"] = forms;
  json endos = json::object();
  for (const auto& [k, m] : d.endos) endos[k] = parse_detail::emit_matrix(m);
  j["endos"] = endos;
  json bil = json::object();
  for (const auto& [k, m] : d.bilinears) bil[k] = parse_detail::emit_matrix(m);
  j["bilinears"] = bil;
  if (!d.excluded.empty()) {
    json ex = json::array();
    for (const auto& p : d.excluded) ex.push_back(p.str());
    j["excluded"] = ex;
  }
  return j.dump(2) + "\n";
}

/// Parses "a=0,b=-1/2" into an assignment over the document parameters.
inline Assignment parse_assignment(std::string_view text, const ParamSpacePtr& params) {
  Assignment at;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw parse_error("--at", pos, "expected name=value");
    std::string name(item.substr(0, eq));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(0, 1);
    if (!params || !params->index_of(name)) throw parse_error("--at", pos, "unknown parameter '" + name + "'");
    const Scalar v = parse_scalar(item.substr(eq + 1), {}, "--at." + name);
    at[name] = v.constant_value();
    pos = end + 1;
  }
  return at;
}

}  // namespace lck

#include "cremona/io.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) { throw StructuralError(path + ": " + msg); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const char* key) { return path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::size_t index_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

// Rethrows parse errors with the field path in front.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StructuralError& e) {
    std::string m = e.what();
    if (m.rfind(path, 0) == 0) throw;
    bad(path, m);
  } catch (const DomainError& e) {
    bad(path, e.what());
  }
}

}  // namespace

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return at_path(path, [&] { return parse_scalar(j.get<std::string>()); });
  bad(path, "expected a rational as a string or an integer");
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

Vector vector_from_json(const json& j, const std::string& path) {
  Vector v;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) v.push_back(scalar_from_json(j[i], sub(path, i)));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(vector_to_json(row));
  return a;
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  Matrix m;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) m.push_back(vector_from_json(j[i], sub(path, i)));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m[0].size()) bad(sub(path, i), "rows have different lengths");
  }
  return m;
}

VarsPtr vars_from_json(const json& j, const std::string& path) {
  VarList names;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    if (!j[i].is_string() || j[i].get<std::string>().empty()) bad(sub(path, i), "expected a variable name");
    names.push_back(j[i].get<std::string>());
  }
  return at_path(path, [&] { return make_vars(names); });
}

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  // Highest terms first under lex, matching the text form's reading order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json exp = json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exp.push_back(int(it->first[i]));
    terms.push_back({{"num", it->second.get_num().get_str()}, {"den", it->second.get_den().get_str()}, {"exp", exp}});
  }
  return {{"vars", p.vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j, const VarsPtr& context, const std::string& path) {
  if (j.is_string()) {
    if (!context) bad(path, "a polynomial given as a string needs an enclosing \"vars\" list");
    return at_path(path, [&] { return parse_polynomial(j.get<std::string>(), context); });
  }
  VarsPtr v = j.is_object() && j.contains("vars") ? vars_from_json(j["vars"], sub(path, "vars")) : context;
  if (!v) bad(path, "missing field \"vars\"");
  if (context && !same_vars(v, context)) bad(sub(path, "vars"), "variables differ from the enclosing list");
  if (j.is_object() && j.contains("expr")) {
    const json& e = j["expr"];
    if (!e.is_string()) bad(sub(path, "expr"), "expected a string");
    return at_path(sub(path, "expr"), [&] { return parse_polynomial(e.get<std::string>(), v); });
  }
  const json& terms = array(field(j, "terms", path), sub(path, "terms"));
  Polynomial p(v);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string tp = sub(sub(path, "terms"), t);
    const json& num = field(terms[t], "num", tp);
    const json& den = terms[t].contains("den") ? terms[t]["den"] : json("1");
    if (!num.is_string()) bad(sub(tp, "num"), "expected a decimal string");
    if (!den.is_string()) bad(sub(tp, "den"), "expected a decimal string");
    Scalar c = at_path(tp, [&] { return scalar_from_strings(num.get<std::string>(), den.get<std::string>()); });
    const json& exp = array(field(terms[t], "exp", tp), sub(tp, "exp"));
    if (exp.size() != v->size()) bad(sub(tp, "exp"), "length differs from the variable count");
    Monomial m;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      std::size_t e = index_from_json(exp[i], sub(sub(tp, "exp"), i));
      if (e > 255) bad(sub(sub(tp, "exp"), i), "exponent too large");
      m.set(i, unsigned(e));
    }
    p.add_term(m, c);
  }
  return p;
}

json ideal_to_json(const Ideal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(polynomial_to_json(g));
  return {{"vars", *I.vars_ptr()}, {"gens", gens}};
}

Ideal ideal_from_json(const json& j, const std::string& path) {
  VarsPtr v = vars_from_json(field(j, "vars", path), sub(path, "vars"));
  const json& gens = array(field(j, "gens", path), sub(path, "gens"));
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < gens.size(); ++i) g.push_back(polynomial_from_json(gens[i], v, sub(sub(path, "gens"), i)));
  return Ideal(v, g);
}

json map_to_json(const RationalMap& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(polynomial_to_json(c));
  return {{"n", f.n()}, {"degree", f.degree()}, {"components", comps}};
}

RationalMap map_from_json(const json& j, const std::string& path) {
  const json& comps = array(field(j, "components", path), sub(path, "components"));
  if (comps.empty()) bad(sub(path, "components"), "needs at least one component");
  VarsPtr v;
  if (j.contains("vars")) {
    v = vars_from_json(j["vars"], sub(path, "vars"));
  } else if (comps[0].is_object() && comps[0].contains("vars")) {
    v = vars_from_json(comps[0]["vars"], sub(sub(sub(path, "components"), std::size_t{0}), "vars"));
  } else {
    v = coordinate_vars(comps.size());
  }
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    c.push_back(polynomial_from_json(comps[i], v, sub(sub(path, "components"), i)));
  }
  RationalMap f = at_path(path, [&] { return RationalMap(c); });
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<long long>() != (long long)f.n())) {
    bad(sub(path, "n"), "does not match the number of components");
  }
  if (j.contains("degree") && (!j["degree"].is_number_integer() || j["degree"].get<int>() != f.degree())) {
    bad(sub(path, "degree"), "does not match the degree of the components");
  }
  return f;
}

json algebra_to_json(const Algebra& a) {
  json table = json::array();
  for (const auto& e : a.table().entries()) table.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", vector_to_json(e.coeffs)}});
  return {{"dim", a.dim()}, {"basis", a.basis()}, {"unit", vector_to_json(a.unit())}, {"table", table}};
}

Algebra algebra_from_json(const json& j, const std::string& path) {
  const json& basis = array(field(j, "basis", path), sub(path, "basis"));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) bad(sub(sub(path, "basis"), i), "expected a name");
    names.push_back(basis[i].get<std::string>());
  }
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<std::size_t>() != names.size())) {
    bad(sub(path, "dim"), "does not match the basis length");
  }
  Vector unit = vector_from_json(field(j, "unit", path), sub(path, "unit"));
  if (unit.size() != names.size()) bad(sub(path, "unit"), "length differs from the basis");
  StructureConstants t;
  if (j.contains("products")) {
    const json& p = j["products"];
    if (!p.is_string()) bad(sub(path, "products"), "expected a string of products");
    t = at_path(sub(path, "products"), [&] { return parse_products(names, p.get<std::string>()); });
  } else {
    const json& table = array(field(j, "table", path), sub(path, "table"));
    std::vector<ProductEntry> entries;
    for (std::size_t k = 0; k < table.size(); ++k) {
      std::string ep = sub(sub(path, "table"), k);
      ProductEntry e;
      e.i = index_from_json(field(table[k], "i", ep), sub(ep, "i"));
      e.j = index_from_json(field(table[k], "j", ep), sub(ep, "j"));
      if (e.i >= names.size()) bad(sub(ep, "i"), "index out of range");
      if (e.j >= names.size()) bad(sub(ep, "j"), "index out of range");
      e.coeffs = vector_from_json(field(table[k], "coeffs", ep), sub(ep, "coeffs"));
      if (e.coeffs.size() != names.size()) bad(sub(ep, "coeffs"), "length differs from the basis");
      entries.push_back(std::move(e));
    }
    t = at_path(sub(path, "table"), [&] { return StructureConstants(names, entries); });
  }
  return at_path(path, [&] { return Algebra(t, unit); });
}

namespace {

json tensor_to_json(const std::vector<std::vector<Vector>>& t) {
  json a = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vector_to_json(v));
    a.push_back(r);
  }
  return a;
}

std::vector<std::vector<Vector>> tensor_from_json(const json& j, const std::string& path) {
  std::vector<std::vector<Vector>> t;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) {
    std::vector<Vector> row;
    for (std::size_t a = 0; a < array(j[k], sub(path, k)).size(); ++a) {
      row.push_back(vector_from_json(j[k][a], sub(sub(path, k), a)));
    }
    t.push_back(std::move(row));
  }
  return t;
}

}  // namespace

json gluing_to_json(const GluingSpec& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    if (b.kind == ModuleBlock::Kind::adjoint) {
      blocks.push_back({{"kind", "adjoint"}, {"dim", b.dim}, {"bilinear", tensor_to_json(b.bilinear)}});
    } else {
      blocks.push_back({{"kind", "module"},
                        {"dim", b.dim},
                        {"action", tensor_to_json(b.action)},
                        {"product", tensor_to_json(b.product)}});
    }
  }
  json twists = json::array();
  for (const auto& t : s.twists) twists.push_back(matrix_to_json(t));
  json out = {{"Fss", map_to_json(s.fss)}, {"blocks", blocks}, {"twists", twists}};
  if (s.unit) out["unit"] = vector_to_json(*s.unit);
  return out;
}

GluingSpec gluing_from_json(const json& j, const std::string& path) {
  GluingSpec s{map_from_json(field(j, "Fss", path), sub(path, "Fss")), std::nullopt, {}, {}};
  if (j.contains("unit")) s.unit = vector_from_json(j["unit"], sub(path, "unit"));
  if (j.contains("blocks")) {
    const json& blocks = array(j["blocks"], sub(path, "blocks"));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::string bp = sub(sub(path, "blocks"), i);
      ModuleBlock b;
      const json& kind = field(blocks[i], "kind", bp);
      b.dim = index_from_json(field(blocks[i], "dim", bp), sub(bp, "dim"));
      if (kind == "adjoint") {
        b.kind = ModuleBlock::Kind::adjoint;
        b.bilinear = tensor_from_json(field(blocks[i], "bilinear", bp), sub(bp, "bilinear"));
      } else if (kind == "module") {
        b.kind = ModuleBlock::Kind::module;
        b.action = tensor_from_json(field(blocks[i], "action", bp), sub(bp, "action"));
        b.product = tensor_from_json(field(blocks[i], "product", bp), sub(bp, "product"));
      } else {
        bad(sub(bp, "kind"), "expected \"adjoint\" or \"module\"");
      }
      s.blocks.push_back(std::move(b));
    }
  }
  if (j.contains("twists")) {
    const json& tw = array(j["twists"], sub(path, "twists"));
    for (std::size_t i = 0; i < tw.size(); ++i) s.twists.push_back(matrix_from_json(tw[i], sub(sub(path, "twists"), i)));
  }
  return s;
}

json unipoly_to_json(const UniPoly& p) { return p.to_string(); }

json hilbert_to_json(const HilbertData& h) {
  auto ints = [](const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(z.get_str());
    return a;
  };
  return {{"hilbert_polynomial", unipoly_to_json(h.hilbert_polynomial)},
          {"dimension", h.dimension},
          {"degree", h.degree.get_str()},
          {"series_numerator", ints(h.series_numerator)},
          {"reduced_numerator", ints(h.reduced_numerator)},
          {"regularity_bound", h.regularity_bound}};
}

}  // namespace cremona

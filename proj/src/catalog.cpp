#include "cremona/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "cremona/constructions.hpp"
#include "cremona/error.hpp"
#include "cremona/io.hpp"

namespace cremona {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_catalog();
}

namespace {

using Status = CheckResult::Status;

std::string join_path(const std::string& a, const std::string& b) { return a + "." + b; }

Provenance read_source(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("source")) throw StructuralError(path + ": missing source tag");
  const auto& s = j.at("source");
  if (s == "tabulated") return Provenance::tabulated;
  if (s == "computed") return Provenance::computed;
  throw StructuralError(path + ".source: expected \"tabulated\" or \"computed\"");
}

template <class F>
auto tagged(const json& expected, const char* key, const std::string& path, F&& read)
    -> std::optional<Tagged<decltype(read(json(), std::string()))>> {
  if (!expected.contains(key)) return std::nullopt;
  std::string p = join_path(path, key);
  const json& field = expected.at(key);
  Provenance src = read_source(field, p);
  if (!field.contains("value")) throw StructuralError(p + ": missing value");
  return Tagged<decltype(read(json(), std::string()))>{read(field.at("value"), p + ".value"), src};
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw StructuralError(path + ": expected a string");
  return j.get<std::string>();
}

int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw StructuralError(path + ": expected an integer");
  return j.get<int>();
}

std::vector<std::string> read_strings(const json& j, const std::string& path) {
  if (!j.is_array()) throw StructuralError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

RationalMap read_map(const json& j, std::size_t n, const std::string& path) {
  auto comps = read_strings(j, path);
  if (comps.size() != n) throw StructuralError(path + ": expected " + std::to_string(n) + " components");
  auto v = coordinate_vars(n);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      c.push_back(parse_polynomial(comps[i], v));
    } catch (const StructuralError& e) {
      throw StructuralError(path + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  try {
    return RationalMap(std::move(c));
  } catch (const StructuralError& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

StructureConstants read_products(const json& def, const std::string& path) {
  auto basis = read_strings(def.at("basis"), path + ".basis");
  try {
    return parse_products(basis, read_string(def.at("products"), path + ".products"));
  } catch (const StructuralError& e) {
    throw StructuralError(path + ".products: " + e.what());
  }
}

Ideal read_ideal(const json& j, std::size_t n, const std::string& path) {
  auto gens = read_strings(j, path);
  auto v = coordinate_vars(n);
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, v));
  return Ideal(v, g);
}

CatalogEntry parse_entry(const json& j, const std::string& table, CatalogEntry::Role role, const std::string& path) {
  CatalogEntry e;
  if (!j.is_object()) throw StructuralError(path + ": expected an object");
  for (const char* k : {"id", "label", "dimension", "definition", "expected"}) {
    if (!j.contains(k)) throw StructuralError(path + ": missing " + k);
  }
  e.id = read_string(j.at("id"), path + ".id");
  std::string p = table + "." + e.id;
  e.label = read_string(j.at("label"), p + ".label");
  e.table = table;
  e.role = role;
  e.dimension = std::size_t(read_int(j.at("dimension"), p + ".dimension"));
  std::size_t n = e.dimension;

  const json& def = j.at("definition");
  std::string dp = p + ".definition";
  std::string kind = read_string(def.at("kind"), dp + ".kind");
  if (kind == "nil") {
    e.kind = CatalogEntry::Kind::nil;
    e.products = read_products(def, dp);
  } else if (kind == "products") {
    e.kind = CatalogEntry::Kind::products;
    e.products = read_products(def, dp);
    e.unit = vector_from_json(def.at("unit"), dp + ".unit");
  } else if (kind == "adjoint") {
    e.kind = CatalogEntry::Kind::adjoint;
    e.map = read_map(def.at("components"), n, dp + ".components");
    const json& u = def.at("unit");
    read_source(u, dp + ".unit");
    e.unit = vector_from_json(u.at("value"), dp + ".unit.value");
  } else if (kind == "map") {
    e.kind = CatalogEntry::Kind::map;
    e.map = read_map(def.at("components"), n, dp + ".components");
  } else {
    throw StructuralError(dp + ".kind: unknown definition kind '" + kind + "'");
  }
  if (e.products && e.products->dim() != n) throw StructuralError(dp + ": basis size differs from dimension");
  if (e.unit && e.unit->size() != n) throw StructuralError(dp + ".unit: wrong length");

  if (j.contains("multiplication")) {
    const json& m = j.at("multiplication");
    std::string mp = p + ".multiplication";
    Provenance src = read_source(m, mp);
    auto table_ = read_products(m, mp);
    Vector unit = vector_from_json(m.at("unit"), mp + ".unit");
    try {
      e.multiplication = Tagged<Algebra>{Algebra(table_, unit), src};
    } catch (const std::exception& ex) {
      throw StructuralError(mp + ": " + ex.what());
    }
  }

  const json& ex = j.at("expected");
  std::string ep = p + ".expected";
  if (!ex.is_object()) throw StructuralError(ep + ": expected an object");
  static const std::set<std::string> known = {
      "rank",      "dim_radical", "nilindex_at_most",   "adjoint",           "type",   "semisimple",
      "structure", "unitalization", "multidegree",      "primary_components", "hilbert_polynomial", "jordan"};
  for (const auto& [key, value] : ex.items()) {
    if (!known.count(key)) throw StructuralError(ep + "." + key + ": unknown expected field");
    read_source(value, ep + "." + key);
  }
  auto& x = e.expected;
  x.rank = tagged(ex, "rank", ep, read_int);
  x.dim_radical = tagged(ex, "dim_radical", ep, read_int);
  x.nilindex_at_most = tagged(ex, "nilindex_at_most", ep, read_int);
  x.adjoint = tagged(ex, "adjoint", ep, [n](const json& v, const std::string& q) { return read_map(v, n, q); });
  x.type = tagged(ex, "type", ep, read_string);
  x.semisimple = tagged(ex, "semisimple", ep, read_string);
  x.structure = tagged(ex, "structure", ep, read_string);
  x.unitalization = tagged(ex, "unitalization", ep, read_string);
  x.multidegree = tagged(ex, "multidegree", ep, [](const json& v, const std::string& q) {
    if (!v.is_array()) throw StructuralError(q + ": expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_int(v[i], q + "[" + std::to_string(i) + "]"));
    return out;
  });
  x.primary_components = tagged(ex, "primary_components", ep, [n](const json& v, const std::string& q) {
    if (!v.is_array()) throw StructuralError(q + ": expected an array of components");
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_ideal(v[i], n, q + "[" + std::to_string(i) + "]"));
    return out;
  });
  x.hilbert_polynomial = tagged(ex, "hilbert_polynomial", ep, [](const json& v, const std::string& q) {
    return parse_unipoly(read_string(v, q));
  });
  x.jordan = tagged(ex, "jordan", ep, [](const json& v, const std::string& q) {
    if (!v.is_boolean()) throw StructuralError(q + ": expected a boolean");
    return v.get<bool>();
  });
  if (ex.contains("unitalization") && ex.at("unitalization").contains("split_products")) {
    std::string sp = ep + ".unitalization.split_products";
    x.split_products = parse_products(e.products->basis(), read_string(ex.at("unitalization").at("split_products"), sp));
  }
  if (ex.contains("structure") && ex.at("structure").contains("split_form")) {
    const json& s = ex.at("structure").at("split_form");
    std::string sp = ep + ".structure.split_form";
    read_source(s, sp);
    x.structure_form = vector_from_json(s.at("form"), sp + ".form");
    x.structure_conjugation = matrix_from_json(s.at("conjugation"), sp + ".conjugation");
  }
  if (j.contains("notes")) e.notes = read_strings(j.at("notes"), p + ".notes");
  if (j.contains("erratum")) e.erratum = read_map(j.at("erratum").at("listed"), n, p + ".erratum.listed");
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog_file(const json& file, const std::string& name) {
  if (!file.is_object()) throw StructuralError(name + ": expected an object");
  std::string table = file.contains("table") ? read_string(file.at("table"), name + ".table") : name;
  std::vector<CatalogEntry> out;
  const std::pair<const char*, CatalogEntry::Role> groups[] = {
      {"entries", CatalogEntry::Role::row},
      {"controls", CatalogEntry::Role::control},
      {"generic", CatalogEntry::Role::generic}};
  for (const auto& [key, role] : groups) {
    if (!file.contains(key)) continue;
    const json& arr = file.at(key);
    if (!arr.is_array()) throw StructuralError(name + "." + key + ": expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(parse_entry(arr[i], table, role, name + "." + key + "[" + std::to_string(i) + "]"));
    }
  }
  return out;
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.id).second) throw StructuralError("duplicate catalog id '" + e.id + "'");
  }
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  if (const auto* e = find(id)) return *e;
  throw StructuralError("no catalog entry '" + id + "'");
}

std::vector<const CatalogEntry*> Catalog::select(const std::string& table, CatalogEntry::Role role) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (e.table == table && e.role == role) out.push_back(&e);
  }
  return out;
}

const Catalog& load_catalog() {
  static const Catalog catalog = [] {
    std::vector<CatalogEntry> all;
    for (const auto& [name, text] : detail::embedded_catalog()) {
      try {
        auto part = parse_catalog_file(json::parse(text), std::string(name));
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      } catch (const std::exception& e) {
        throw InternalError(std::string("embedded catalog is malformed: ") + e.what());
      }
    }
    try {
      return Catalog(std::move(all));
    } catch (const std::exception& e) {
      throw InternalError(std::string("embedded catalog is malformed: ") + e.what());
    }
  }();
  return catalog;
}

std::optional<Algebra> entry_algebra(const CatalogEntry& e) {
  switch (e.kind) {
    case CatalogEntry::Kind::nil:
      return unitalize(*e.products);
    case CatalogEntry::Kind::products:
      return Algebra(*e.products, *e.unit);
    case CatalogEntry::Kind::adjoint:
      return algebra_from_adjoint(*e.map, *e.unit);
    case CatalogEntry::Kind::map:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<RationalMap> entry_map(const CatalogEntry& e) {
  if (e.expected.adjoint) return e.expected.adjoint->value;
  if (e.map) return e.map;
  return std::nullopt;
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

const char* to_string(CheckResult::Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

json report_to_json(const VerificationReport& r, bool timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json o = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) o["detail"] = c.detail;
    checks.push_back(std::move(o));
  }
  json j = {{"id", r.id}, {"status", r.passed() ? "pass" : "fail"}, {"checks", std::move(checks)}};
  if (timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

namespace {

std::string ints_to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string map_to_string(const RationalMap& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

// Number of basis vectors of a label "C x C[e]/(e^2) x J^m_{q,r}"; nullopt if unknown.
std::optional<std::size_t> label_dimension(const std::string& label) {
  std::size_t total = 0, pos = 0;
  while (pos <= label.size()) {
    std::size_t next = label.find(" x ", pos);
    std::string part = label.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part == "C") {
      total += 1;
    } else if (part.rfind("J^", 0) == 0) {
      total += std::size_t(std::stoul(part.substr(2)));
    } else if (part.rfind("C[e]/(e^", 0) == 0) {
      total += std::size_t(std::stoul(part.substr(8)));
    } else {
      return std::nullopt;
    }
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return total;
}

// Builds "C x J^m_{q,r}" (or a plain "C x C x ... " product) exactly.
std::optional<Algebra> label_algebra(const std::string& label, const std::optional<Vector>& form) {
  std::optional<Algebra> out;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t next = label.find(" x ", pos);
    std::string part = label.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::optional<Algebra> factor;
    if (part == "C") {
      factor = Algebra(parse_products({"c"}, "c*c=c"), {1});
    } else if (part.rfind("J^", 0) == 0) {
      std::size_t m = std::stoul(part.substr(2));
      std::size_t comma = part.find(',');
      std::size_t r = std::stoul(part.substr(comma + 1));
      factor = form ? quadratic_form_algebra(*form) : quadratic_form_algebra(m, r);
    } else {
      return std::nullopt;
    }
    out = out ? direct_product(*out, *factor) : *factor;
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

class Runner {
 public:
  Runner(VerificationReport& r) : r_(r) {}

  template <class F>
  void run(const std::string& name, F&& body) {
    CheckResult c{name, Status::pass, {}};
    try {
      body(c);
    } catch (const std::exception& e) {
      c.status = Status::fail;
      c.detail = std::string("exception: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& why) { r_.checks.push_back({name, Status::skipped, why}); }

 private:
  VerificationReport& r_;
};

void expect(CheckResult& c, bool ok, const std::string& detail_on_fail, const std::string& detail_on_pass = {}) {
  c.status = ok ? Status::pass : Status::fail;
  c.detail = ok ? detail_on_pass : detail_on_fail;
}

void verify_nil(const Catalog& catalog, const CatalogEntry& e, Runner& run) {
  const StructureConstants& r = *e.products;
  if (e.expected.nilindex_at_most) {
    run.run("nilindex", [&](CheckResult& c) {
      auto v = coordinate_vars(r.dim());
      std::vector<Polynomial> a;
      for (std::size_t i = 0; i < r.dim(); ++i) a.push_back(Polynomial::variable(v, i));
      // a^k = 0 for the generic element, with k the listed bound.
      std::vector<Polynomial> power = a;
      for (int k = 1; k < e.expected.nilindex_at_most->value; ++k) power = r.multiply(power, a);
      bool zero = std::all_of(power.begin(), power.end(), [](const Polynomial& p) { return p.is_zero(); });
      expect(c, zero, "generic element is not nil of index <= " + std::to_string(e.expected.nilindex_at_most->value));
    });
  }
  Algebra u = unitalize(r);
  run.run("jordan", [&](CheckResult& c) {
    auto j = check_jordan(u);
    expect(c, j.holds, j.witness ? "witness: " + j.witness->to_string() : "identity fails");
  });
  if (!e.expected.unitalization) return;
  run.run("unitalization", [&](CheckResult& c) {
    const CatalogEntry& target = catalog.at(e.expected.unitalization->value);
    auto want = entry_map(target);
    if (!want) throw StructuralError("linked entry has no adjoint");
    RationalMap got = adjoint_map(unitalize(r));
    if (got == *want) {
      expect(c, true, "", "adjoint of the unitalization equals " + target.id);
      return;
    }
    if (!e.expected.split_products) {
      expect(c, false, "expected " + map_to_string(*want) + ", got " + map_to_string(got));
      return;
    }
    // Presentations differing by a change of basis over C: both product
    // forms R/R² × R/R² → R² must have the same rank.
    auto form_rank = [](const StructureConstants& s) {
      Matrix m;
      for (std::size_t i = 0; i < s.dim(); ++i) {
        std::vector<Scalar> row;
        for (std::size_t j = 0; j < s.dim(); ++j) {
          for (const auto& x : s.product(i, j)) row.push_back(x);
        }
        m.push_back(row);
      }
      return matrix_rank(m);
    };
    RationalMap split = adjoint_map(unitalize(*e.expected.split_products));
    bool ok = split == *want && form_rank(r) == form_rank(*e.expected.split_products);
    expect(c, ok, "split presentation gives " + map_to_string(split) + ", expected " + map_to_string(*want),
           "equal to " + target.id + " through the split presentation (isomorphic over C)");
  });
}

void verify_rank3(const CatalogEntry& e, Depth depth, std::uint64_t seed, Runner& run) {
  std::optional<Algebra> alg;
  run.run("construct", [&](CheckResult& c) {
    alg = entry_algebra(e);
    if (!alg) throw StructuralError("entry defines no algebra");
    c.detail = e.kind == CatalogEntry::Kind::adjoint ? "algebra from adjoint and unit" : "algebra from products";
  });
  if (!alg) return;
  const auto& x = e.expected;
  run.run("power_associative", [&](CheckResult& c) { expect(c, check_power_associative(*alg), "x^2 x^2 != x (x x^2)"); });
  run.run("jordan", [&](CheckResult& c) {
    auto j = check_jordan(*alg);
    expect(c, j.holds, j.witness ? "witness in component " + std::to_string(j.component) + ": " + j.witness->to_string()
                                 : "identity fails");
  });
  if (x.rank) {
    run.run("rank", [&](CheckResult& c) {
      int got = alg->rank_profile().rank;
      expect(c, got == x.rank->value, "expected " + std::to_string(x.rank->value) + ", got " + std::to_string(got));
    });
  }
  std::optional<RationalMap> adj;
  run.run("adjoint", [&](CheckResult& c) {
    adj = adjoint_map(*alg);
    if (!x.adjoint) {
      c.detail = map_to_string(*adj);
      return;
    }
    expect(c, *adj == x.adjoint->value,
           "expected " + map_to_string(x.adjoint->value) + ", got " + map_to_string(*adj));
  });
  if (adj) {
    run.run("involution", [&](CheckResult& c) {
      auto inv = check_involution(*adj);
      if (!inv.ok) {
        expect(c, false, inv.detail);
        return;
      }
      const Polynomial& n = alg->rank_profile().norm();
      bool ok = inv.scaling->degree() == 3 && *inv.scaling == n;
      expect(c, ok, "scaling " + inv.scaling->to_string() + " differs from the cubic norm " + n.to_string(),
             "scaling " + inv.scaling->to_string());
    });
  }
  if (x.dim_radical) {
    run.run("radical", [&](CheckResult& c) {
      auto rad = radical(*alg);
      bool ok = int(rad.dim()) == x.dim_radical->value && rad.nil_verified;
      std::string info = "dim " + std::to_string(rad.dim()) + ", " + rad.method +
                         (rad.forms_agree ? ", bilinear forms agree" : ", bilinear forms differ");
      expect(c, ok,
             "expected dim " + std::to_string(x.dim_radical->value) + ", got " + info +
                 (rad.nil_verified ? "" : ", nil check failed"),
             info);
    });
  }
  if (x.semisimple && x.dim_radical) {
    run.run("semisimple_dimension", [&](CheckResult& c) {
      auto d = label_dimension(x.semisimple->value);
      if (!d) throw StructuralError("unrecognized label '" + x.semisimple->value + "'");
      std::size_t got = e.dimension - std::size_t(x.dim_radical->value);
      expect(c, *d == got, "label has dimension " + std::to_string(*d) + ", quotient has " + std::to_string(got));
    });
  }
  if (x.structure) {
    run.run("structure", [&](CheckResult& c) {
      auto built = label_algebra(x.structure->value, x.structure_form);
      if (!built) throw StructuralError("unrecognized label '" + x.structure->value + "'");
      RationalMap f = adjoint_map(*built);
      if (x.structure_conjugation) f = conjugate(f, *x.structure_conjugation);
      auto want = entry_map(e);
      expect(c, f == *want, "product gives " + map_to_string(f) + ", expected " + map_to_string(*want),
             x.structure_conjugation ? "equal after the stored split change of basis" : "equal");
    });
  }
  if (e.multiplication) {
    run.run("multiplication_table", [&](CheckResult& c) {
      const Algebra& m = e.multiplication->value;
      auto j = check_jordan(m);
      if (!j.holds) {
        expect(c, false, "table is not Jordan: " + (j.witness ? j.witness->to_string() : std::string()));
        return;
      }
      RationalMap f = adjoint_map(m);
      auto want = entry_map(e);
      expect(c, f == *want, "table gives " + map_to_string(f) + ", expected " + map_to_string(*want));
    });
  }
  (void)depth;
  (void)seed;
}

void verify_geometry(const CatalogEntry& e, Depth depth, std::uint64_t seed, Runner& run) {
  auto f = entry_map(e);
  if (!f) return;
  const auto& x = e.expected;
  if (e.kind == CatalogEntry::Kind::map) {
    run.run("involution", [&](CheckResult& c) {
      auto inv = check_involution(*f);
      expect(c, inv.ok, inv.detail, inv.ok ? "scaling " + inv.scaling->to_string() : "");
    });
  }
  if (x.type || x.hilbert_polynomial) {
    run.run("type", [&](CheckResult& c) {
      auto s = scheme_type(*f);
      std::string info = s.label + ", HP " + s.hilbert_polynomial.to_string();
      bool ok = !x.type || s.label == x.type->value;
      if (x.hilbert_polynomial) ok = ok && s.hilbert_polynomial == x.hilbert_polynomial->value;
      std::string want = (x.type ? x.type->value : std::string("?")) +
                         (x.hilbert_polynomial ? ", HP " + x.hilbert_polynomial->value.to_string() : "");
      expect(c, ok, "expected " + want + ", got " + info, info);
    });
  }
  if (x.multidegree) {
    if (depth == Depth::fast) {
      run.skip("multidegree", "fast");
    } else {
      run.run("multidegree", [&](CheckResult& c) {
        auto m = multidegree(*f, seed, 3);
        expect(c, m.entries == x.multidegree->value,
               "expected " + ints_to_string(x.multidegree->value) + ", got " + ints_to_string(m.entries),
               ints_to_string(m.entries) + " over 3 trials");
      });
    }
  }
  if (x.primary_components) {
    if (depth == Depth::fast) {
      run.skip("primary_decomposition", "fast");
    } else {
      run.run("primary_decomposition", [&](CheckResult& c) {
        Ideal meet = intersection(x.primary_components->value);
        Ideal base = base_ideal(*f, true);
        bool ok = ideal_equal(meet, base);
        expect(c, ok, "intersection " + meet.to_string() + " differs from base ideal " + base.to_string(),
               std::to_string(x.primary_components->value.size()) + " components");
      });
    }
  }
}

void verify_control(const CatalogEntry& e, Runner& run) {
  run.run("jordan", [&](CheckResult& c) {
    auto alg = entry_algebra(e);
    auto j = check_jordan(*alg);
    bool want = e.expected.jordan ? e.expected.jordan->value : true;
    if (j.holds == want) {
      c.status = Status::pass;
      c.detail = j.holds ? "identity holds" : "identity fails, witness in component " + std::to_string(j.component) +
                                                  ": " + j.witness->to_string();
    } else {
      c.status = Status::fail;
      c.detail = want ? "identity fails: " + (j.witness ? j.witness->to_string() : std::string())
                      : "identity unexpectedly holds";
    }
  });
}

}  // namespace

VerificationReport verify_entry(const Catalog& catalog, const CatalogEntry& e, Depth depth, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = e.id;
  Runner run(r);
  try {
    if (e.role == CatalogEntry::Role::control) {
      verify_control(e, run);
    } else if (e.kind == CatalogEntry::Kind::nil) {
      verify_nil(catalog, e, run);
    } else {
      if (e.kind != CatalogEntry::Kind::map) verify_rank3(e, depth, seed, run);
      verify_geometry(e, depth, seed, run);
    }
  } catch (const std::exception& ex) {
    r.checks.push_back({"internal", Status::fail, ex.what()});
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<const CatalogEntry*> table_rows(const Catalog& catalog, const std::string& table) {
  if (table == "p4-generic") return catalog.select("p4", CatalogEntry::Role::generic);
  if (table == "p5-generic") return catalog.select("p5", CatalogEntry::Role::generic);
  if (table == "controls") {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : catalog.entries()) {
      if (e.role == CatalogEntry::Role::control) out.push_back(&e);
    }
    return out;
  }
  static const std::set<std::string> tables = {"nil", "p2", "p3", "p4", "p5"};
  if (!tables.count(table)) throw StructuralError("unknown table '" + table + "'");
  return catalog.select(table);
}

std::vector<VerificationReport> verify_table(const Catalog& catalog, const std::string& table, Depth depth,
                                             std::uint64_t seed) {
  auto rows = table_rows(catalog, table);
  std::vector<VerificationReport> out(rows.size());
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) out[i] = verify_entry(catalog, *rows[i], depth, seed);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(workers, rows.size()); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace cremona

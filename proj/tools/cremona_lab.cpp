#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "cremona/catalog.hpp"
#include "cremona/constructions.hpp"
#include "cremona/error.hpp"
#include "cremona/io.hpp"

using namespace cremona;

namespace {

enum Exit { kOk = 0, kFail = 1, kError = 2 };

struct Options {
  bool pretty = false;
  bool fast = false;
  bool full = false;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  int trials = 3;
  std::string norm;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw StructuralError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(in), {}};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw StructuralError(path + ": invalid JSON: " + e.what());
  }
}

bool is_catalog_id(const std::string& arg) {
  return arg != "-" && !std::filesystem::exists(arg) && load_catalog().find(arg) != nullptr;
}

// A map file, or a catalog id standing for the entry's map.
RationalMap load_map(const std::string& arg) {
  if (is_catalog_id(arg)) {
    auto f = entry_map(load_catalog().at(arg));
    if (!f) throw StructuralError(arg + ": catalog entry has no map");
    return *f;
  }
  return map_from_json(read_json(arg), "map");
}

Algebra load_algebra(const std::string& arg) {
  if (is_catalog_id(arg)) {
    auto a = entry_algebra(load_catalog().at(arg));
    if (!a) throw StructuralError(arg + ": catalog entry defines no algebra");
    return *a;
  }
  return algebra_from_json(read_json(arg), "algebra");
}

std::uint64_t seed_of(const Options& o) { return o.seed ? *o.seed : default_seed(1); }

class Output {
 public:
  explicit Output(const Options& o) : o_(o), start_(std::chrono::steady_clock::now()) {}

  int emit(const json& payload, Exit code, const std::string& summary = {}) {
    std::cout << payload.dump() << '\n';
    note(summary);
    return code;
  }

  void line(const json& j) { std::cout << j.dump() << '\n'; }

  void note(const std::string& summary) const {
    if (!o_.pretty) return;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    if (!summary.empty()) std::cerr << summary << '\n';
    std::cerr << "time: " << ms << " ms\n";
  }

 private:
  const Options& o_;
  std::chrono::steady_clock::time_point start_;
};

std::string to_text(const RationalMap& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

json scaling_json(const ScalingResult& r) {
  json j = {{"involution", r.ok}};
  if (r.scaling) j["scaling"] = polynomial_to_json(*r.scaling);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

int verify_table_cmd(const std::string& table, const Options& o) {
  Output out(o);
  std::uint64_t seed = seed_of(o);
  Depth depth = o.fast ? Depth::fast : Depth::full;
  auto reports = verify_table(load_catalog(), table, depth, seed);
  int pass = 0, fail = 0;
  for (const auto& r : reports) {
    out.line(report_to_json(r));
    (r.passed() ? pass : fail)++;
    if (o.pretty) std::cerr << r.id << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.wall_time_ms << " ms)\n";
  }
  json summary = {{"summary", true}, {"table", table}, {"pass", pass}, {"fail", fail},
                  {"depth", o.fast ? "fast" : "full"}};
  if (!o.fast) summary["seed"] = seed;
  return out.emit(summary, fail ? kFail : kOk, std::to_string(pass) + "/" + std::to_string(pass + fail) + " pass");
}

int verify_entry_cmd(const std::string& id, const Options& o) {
  Output out(o);
  std::uint64_t seed = seed_of(o);
  auto r = verify_entry(load_catalog(), load_catalog().at(id), o.full ? Depth::full : Depth::fast, seed);
  json j = report_to_json(r);
  if (o.full) j["seed"] = seed;
  std::string text;
  for (const auto& c : r.checks) text += c.name + ": " + to_string(c.status) + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
  return out.emit(j, r.passed() ? kOk : kFail, text);
}

int algebra_info_cmd(const std::string& arg, const Options& o) {
  Output out(o);
  Algebra a = load_algebra(arg);
  json j = {{"dim", a.dim()}, {"basis", a.basis()}, {"unit", vector_to_json(a.unit())}};
  auto jc = check_jordan(a);
  j["jordan"] = jc.holds;
  if (jc.witness) j["jordan_witness"] = polynomial_to_json(*jc.witness);
  j["power_associative"] = check_power_associative(a);
  const auto& rp = a.rank_profile();
  j["rank"] = rp.rank;
  j["trace"] = polynomial_to_json(rp.trace());
  j["quad"] = polynomial_to_json(rp.quad());
  j["norm"] = polynomial_to_json(rp.norm());
  std::string summary = "dim " + std::to_string(a.dim()) + ", rank " + std::to_string(rp.rank);
  if (rp.rank == 3 && jc.holds) {
    RationalMap f = adjoint_map(a);
    j["adjoint"] = map_to_json(f);
    summary += ", adjoint " + to_text(f);
  }
  auto rad = radical(a);
  json basis = json::array();
  for (const auto& v : rad.basis) basis.push_back(vector_to_json(v));
  j["radical"] = {{"dim", rad.dim()},
                  {"basis", basis},
                  {"method", rad.method},
                  {"forms_agree", rad.forms_agree},
                  {"nil_verified", rad.nil_verified}};
  summary += ", dim R " + std::to_string(rad.dim());
  return out.emit(j, kOk, summary);
}

int check_involution_cmd(const std::string& arg, const Options& o) {
  Output out(o);
  auto r = check_involution(load_map(arg));
  return out.emit(scaling_json(r), r.ok ? kOk : kFail, r.ok ? "involution, scaling " + r.scaling->to_string() : r.detail);
}

int multidegree_cmd(const std::string& arg, const Options& o) {
  Output out(o);
  std::uint64_t seed = seed_of(o);
  auto m = multidegree(load_map(arg), seed, o.trials);
  json j = {{"mdeg", m.entries}, {"seed", seed}, {"trials", m.trials}};
  std::string s;
  for (int d : m.entries) s += (s.empty() ? "" : ",") + std::to_string(d);
  return out.emit(j, kOk, "multidegree (" + s + ")");
}

int type_cmd(const std::string& arg, const Options& o) {
  Output out(o);
  auto s = scheme_type(load_map(arg));
  json j = {{"type", s.label}, {"hilbert_polynomial", unipoly_to_json(s.hilbert_polynomial)},
            {"hilbert", hilbert_to_json(s.hilbert)}};
  return out.emit(j, kOk, "type " + s.label + ", HP " + s.hilbert_polynomial.to_string());
}

int hilbert_cmd(const std::string& arg, const Options& o) {
  Output out(o);
  auto h = hilbert(ideal_from_json(read_json(arg), "ideal"));
  return out.emit(hilbert_to_json(h), kOk, "HP " + h.hilbert_polynomial.to_string());
}

int saturate_cmd(const std::string& a, const std::string& b, const Options& o) {
  Output out(o);
  Ideal i = ideal_from_json(read_json(a), "ideal");
  Ideal j = ideal_from_json(read_json(b), "ideal");
  Ideal s = saturation(i, j);
  Ideal reduced(s.vars_ptr(), s.groebner());
  return out.emit(ideal_to_json(reduced), kOk, reduced.to_string());
}

int intersect_cmd(const std::string& a, const std::string& b, const Options& o) {
  Output out(o);
  Ideal i = ideal_from_json(read_json(a), "ideal");
  Ideal j = ideal_from_json(read_json(b), "ideal");
  Ideal s = intersection(i, j);
  Ideal reduced(s.vars_ptr(), s.groebner());
  return out.emit(ideal_to_json(reduced), kOk, reduced.to_string());
}

int emit_map(const RationalMap& f, const Options& o) {
  Output out(o);
  return out.emit(map_to_json(f), kOk, to_text(f));
}

int spampinato_cmd(const std::string& arg, const Options& o) {
  RationalMap f = load_map(arg);
  Polynomial n(f.vars_ptr());
  if (!o.norm.empty()) {
    n = parse_polynomial(o.norm, f.vars_ptr());
  } else {
    auto r = check_involution(f);
    if (!r.ok) throw DomainError("map is not an involution: " + r.detail);
    if (f.degree() != 2) throw StructuralError("--norm is required for maps of degree above 2");
    n = *r.scaling;
  }
  return emit_map(spampinato_lift(f, n), o);
}

int zorn_cmd(const std::string& arg, const Options& o) {
  Output out(o);
  Algebra a = load_algebra(arg);
  RationalMap f = zorn_cubic_map(a);
  std::uint64_t seed = seed_of(o);
  auto check = verify_involution(f, o.sampled, seed);
  json j = map_to_json(f);
  j["check"] = {{"ok", check.ok}, {"mode", check.mode}};
  if (o.sampled) j["check"]["points"] = check.points, j["seed"] = seed;
  if (check.scaling) j["check"]["scaling"] = polynomial_to_json(*check.scaling);
  if (!check.detail.empty()) j["check"]["detail"] = check.detail;
  return out.emit(j, check.ok ? kOk : kFail, check.ok ? "involution (" + check.mode + ")" : check.detail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank 3 Jordan algebras and quadro-quadric Cremona transformations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable summary on standard error");

  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed (default: CREMONA_LAB_SEED or 1)"); };

  std::string arg1, arg2, table;
  unsigned a1 = 0, a2 = 0, a3 = 0, n = 0;
  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "Re-check catalog rows")->require_subcommand(1);
  auto* vt = verify->add_subcommand("table", "Verify every row of a table");
  vt->add_option("table", table, "nil, p2, p3, p4, p5, p4-generic, p5-generic or controls")->required();
  vt->add_flag("--fast", o.fast, "Skip multidegree and decomposition checks");
  add_seed(vt);
  vt->callback([&] { action = [&] { return verify_table_cmd(table, o); }; });
  auto* ve = verify->add_subcommand("entry", "Verify one row");
  ve->add_option("id", arg1, "Catalog id")->required();
  ve->add_flag("--full", o.full, "Include multidegree and decomposition checks");
  add_seed(ve);
  ve->callback([&] { action = [&] { return verify_entry_cmd(arg1, o); }; });

  auto* alg = app.add_subcommand("algebra", "Algebra commands")->require_subcommand(1);
  auto* info = alg->add_subcommand("info", "Invariants of an algebra");
  info->add_option("source", arg1, "Catalog id or algebra JSON file")->required();
  info->callback([&] { action = [&] { return algebra_info_cmd(arg1, o); }; });

  auto* map = app.add_subcommand("map", "Rational map commands")->require_subcommand(1);
  auto* ci = map->add_subcommand("check-involution", "Test f∘f = c·id");
  ci->add_option("file", arg1, "Map JSON file or catalog id")->required();
  ci->callback([&] { action = [&] { return check_involution_cmd(arg1, o); }; });
  auto* md = map->add_subcommand("multidegree", "Multidegree by residual saturation");
  md->add_option("file", arg1, "Map JSON file or catalog id")->required();
  md->add_option("--trials", o.trials, "Agreeing trials required")->check(CLI::PositiveNumber);
  add_seed(md);
  md->callback([&] { action = [&] { return multidegree_cmd(arg1, o); }; });
  auto* ty = map->add_subcommand("type", "Base-locus type from the Hilbert polynomial");
  ty->add_option("file", arg1, "Map JSON file or catalog id")->required();
  ty->callback([&] { action = [&] { return type_cmd(arg1, o); }; });

  auto* ideal = app.add_subcommand("ideal", "Ideal commands")->require_subcommand(1);
  auto* hi = ideal->add_subcommand("hilbert", "Hilbert series and polynomial");
  hi->add_option("file", arg1, "Ideal JSON file")->required();
  hi->callback([&] { action = [&] { return hilbert_cmd(arg1, o); }; });
  auto* sa = ideal->add_subcommand("saturate", "I : J^∞");
  sa->add_option("I", arg1, "Ideal JSON file")->required();
  sa->add_option("J", arg2, "Ideal JSON file")->required();
  sa->callback([&] { action = [&] { return saturate_cmd(arg1, arg2, o); }; });
  auto* in = ideal->add_subcommand("intersect", "I ∩ J");
  in->add_option("I", arg1, "Ideal JSON file")->required();
  in->add_option("J", arg2, "Ideal JSON file")->required();
  in->callback([&] { action = [&] { return intersect_cmd(arg1, arg2, o); }; });

  auto* con = app.add_subcommand("construct", "Build Cremona transformations")->require_subcommand(1);
  auto* fa = con->add_subcommand("falpha", "F^α on P^(2+|α|)");
  fa->add_option("a1", a1)->required();
  fa->add_option("a2", a2)->required();
  fa->add_option("a3", a3)->required();
  fa->callback([&] { action = [&] { return emit_map(falpha(a1, a2, a3), o); }; });
  auto* fn = con->add_subcommand("fn", "F_n on P^(2n)");
  fn->add_option("n", n)->required();
  fn->callback([&] { action = [&] { return emit_map(f_n(n), o); }; });
  auto* st = con->add_subcommand("standard", "Standard involution on P^(n-1)");
  st->add_option("n", n)->required();
  st->callback([&] { action = [&] { return emit_map(standard_involution(n), o); }; });
  auto* sp = con->add_subcommand("spampinato", "[x : r] ↦ [r f(x) : N(x)]");
  sp->add_option("file", arg1, "Map JSON file or catalog id")->required();
  sp->add_option("--norm", o.norm, "N(x); defaults to the scaling of f∘f for quadratic f");
  sp->callback([&] { action = [&] { return spampinato_cmd(arg1, o); }; });
  auto* zo = con->add_subcommand("zorn", "Cubo-cubic map of the Zorn algebra");
  zo->add_option("source", arg1, "Catalog id or algebra JSON file")->required();
  zo->add_flag("--sampled", o.sampled, "Check the involution at random points");
  add_seed(zo);
  zo->callback([&] { action = [&] { return zorn_cmd(arg1, o); }; });
  auto* gl = con->add_subcommand("glue", "Assemble a map from a gluing spec");
  gl->add_option("file", arg1, "GluingSpec JSON file")->required();
  gl->callback([&] { action = [&] { return emit_map(glue(gluing_from_json(read_json(arg1), "glue")), o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}

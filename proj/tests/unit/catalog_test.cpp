#include <gtest/gtest.h>

#include <set>

#include "cremona/catalog.hpp"
#include "cremona/error.hpp"
#include "cremona/io.hpp"

using namespace cremona;

namespace {

RationalMap map_of(std::vector<std::string> comps) {
  auto v = coordinate_vars(comps.size());
  std::vector<Polynomial> c;
  for (const auto& s : comps) c.push_back(parse_polynomial(s, v));
  return RationalMap(c);
}

const CheckResult* check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

json minimal_file() {
  return json::parse(R"({"table": "p2", "entries": [{
    "id": "X", "label": "X", "dimension": 3,
    "definition": {"kind": "adjoint", "components": ["y*z", "x*z", "x*y"],
                   "unit": {"value": [1, 1, 1], "source": "computed"}},
    "expected": {"rank": {"value": 3, "source": "tabulated"},
                 "adjoint": {"value": ["y*z", "x*z", "x*y"], "source": "tabulated"}}}]})");
}

}  // namespace

TEST(Catalog, RowCounts) {
  const Catalog& c = load_catalog();
  EXPECT_EQ(c.select("nil").size(), 8u);
  EXPECT_EQ(c.select("p2").size(), 3u);
  EXPECT_EQ(c.select("p3").size(), 7u);
  EXPECT_EQ(c.select("p4").size(), 16u);
  EXPECT_EQ(c.select("p5").size(), 39u);
  EXPECT_EQ(table_rows(c, "p4-generic").size(), 3u);
  EXPECT_EQ(table_rows(c, "p5-generic").size(), 4u);
  EXPECT_EQ(table_rows(c, "controls").size(), 1u);
  std::set<std::string> ids;
  for (const auto& e : c.entries()) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
}

TEST(Catalog, ListedRowsMatchTheTables) {
  const Catalog& c = load_catalog();
  const auto& j16 = c.at("J5_16").expected;
  EXPECT_EQ(j16.adjoint->value, map_of({"y^2+z^2+t^2+u^2", "x*y", "-x*z", "-x*t", "-x*u"}));
  EXPECT_EQ(j16.type->value, "I");
  EXPECT_EQ(j16.multidegree->value, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(j16.dim_radical->value, 0);
  EXPECT_EQ(j16.adjoint->source, Provenance::tabulated);

  const auto& r2 = c.at("R2");
  EXPECT_EQ(r2.products->product(0, 0), (Vector{0, 1}));
  EXPECT_EQ(r2.products->product(0, 1), (Vector{0, 0}));
  EXPECT_EQ(r2.products->product(1, 1), (Vector{0, 0}));

  EXPECT_EQ(c.at("J_s").expected.adjoint->value,
            map_of({"y*z-v^2", "x*z-u^2", "x*y-t^2", "u*v-z*t", "t*v-u*y", "t*u-x*v"}));
  EXPECT_EQ(c.at("J_ES_d_111").expected.multidegree->value, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(c.at("J5_12").expected.primary_components->value.size(), 2u);
}

TEST(Catalog, CorrectedRowsKeepTheListedFormula) {
  const Catalog& c = load_catalog();
  const auto& j43 = c.at("J4_3");
  ASSERT_TRUE(j43.erratum.has_value());
  EXPECT_EQ(*j43.erratum, map_of({"y^2", "x*y", "x*z", "z*t"}));
  EXPECT_FALSE(check_involution(*j43.erratum).ok);
  EXPECT_EQ(j43.expected.adjoint->source, Provenance::computed);
  const auto& j45 = c.at("J4_5");
  ASSERT_TRUE(j45.erratum.has_value());
  // The listed map is an involution, but none of its fixed points
  // (1, 1, z, t) and (-1, 1, z, 0) is a unit.
  EXPECT_TRUE(check_involution(*j45.erratum).ok);
  for (const Vector& e : {Vector{1, 1, 0, 0}, Vector{1, 1, 1, 0}, Vector{1, 1, 0, 1}, Vector{-1, 1, 0, 0},
                          Vector{-1, 1, 2, 0}}) {
    EXPECT_EQ(j45.erratum->eval(e), e);
    EXPECT_ANY_THROW(algebra_from_adjoint(*j45.erratum, e));
  }
}

TEST(Catalog, ComputedFieldsAreTaggedAsSuch) {
  const Catalog& c = load_catalog();
  for (const auto* e : c.select("p5")) {
    ASSERT_TRUE(e->expected.hilbert_polynomial.has_value()) << e->id;
    EXPECT_EQ(e->expected.hilbert_polynomial->source, Provenance::computed);
    EXPECT_EQ(e->expected.type->source, Provenance::tabulated);
  }
}

TEST(Catalog, ParserRejectsUntaggedAndMalformedFields) {
  auto file = minimal_file();
  EXPECT_EQ(parse_catalog_file(file, "t").size(), 1u);

  auto untagged = file;
  untagged["entries"][0]["expected"]["rank"].erase("source");
  try {
    parse_catalog_file(untagged, "t");
    FAIL() << "missing source accepted";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("p2.X.expected.rank"), std::string::npos) << e.what();
  }

  auto bad_poly = file;
  bad_poly["entries"][0]["definition"]["components"][1] = "x*";
  try {
    parse_catalog_file(bad_poly, "t");
    FAIL() << "bad polynomial accepted";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("p2.X.definition.components[1]"), std::string::npos) << e.what();
  }

  auto unknown = file;
  unknown["entries"][0]["expected"]["colour"] = {{"value", 1}, {"source", "tabulated"}};
  EXPECT_THROW(parse_catalog_file(unknown, "t"), StructuralError);

  auto twice = parse_catalog_file(file, "t");
  twice.push_back(twice.front());
  EXPECT_THROW(Catalog{twice}, StructuralError);
}

TEST(Catalog, VerifyEntryExamples) {
  const Catalog& c = load_catalog();
  auto r = verify_entry(c, c.at("J4_7"), Depth::full, 1);
  EXPECT_TRUE(r.passed()) << report_to_json(r).dump();
  EXPECT_EQ(c.at("J4_7").expected.adjoint->value, map_of({"x^2", "-x*y", "-x*z", "y^2-x*t"}));

  r = verify_entry(c, c.at("J5_1"), Depth::full, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(check(r, "type")->status, CheckResult::Status::pass);
  EXPECT_NE(check(r, "multidegree")->detail.find("(2,3,2)"), std::string::npos);

  r = verify_entry(c, c.at("J_ES_d_111"), Depth::full, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(check(r, "involution")->detail.find("x^3"), std::string::npos);
  EXPECT_NE(check(r, "multidegree")->detail.find("(2,2,2,2)"), std::string::npos);
}

TEST(Catalog, FastDepthSkipsRandomizedChecks) {
  const Catalog& c = load_catalog();
  auto r = verify_entry(c, c.at("J5_12"), Depth::fast, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(check(r, "multidegree")->status, CheckResult::Status::skipped);
  EXPECT_EQ(check(r, "primary_decomposition")->status, CheckResult::Status::skipped);
  r = verify_entry(c, c.at("J5_12"), Depth::full, 1);
  EXPECT_EQ(check(r, "primary_decomposition")->status, CheckResult::Status::pass);
}

TEST(Catalog, WrongExpectationFailsWithBothValues) {
  CatalogEntry e = load_catalog().at("J5_10");
  e.expected.multidegree->value = {2, 2, 2};
  e.expected.type->value = "I";
  e.expected.dim_radical->value = 2;
  auto r = verify_entry(load_catalog(), e, Depth::full, 1);
  EXPECT_FALSE(r.passed());
  const auto* m = check(r, "multidegree");
  EXPECT_EQ(m->status, CheckResult::Status::fail);
  EXPECT_NE(m->detail.find("expected (2,2,2)"), std::string::npos);
  EXPECT_NE(m->detail.find("got (2,3,2)"), std::string::npos);
  EXPECT_EQ(check(r, "type")->status, CheckResult::Status::fail);
  EXPECT_EQ(check(r, "radical")->status, CheckResult::Status::fail);
  EXPECT_EQ(check(r, "jordan")->status, CheckResult::Status::pass);
}

TEST(Catalog, ControlFailsTheJordanIdentity) {
  const Catalog& c = load_catalog();
  auto r = verify_entry(c, c.at("T5_nonjordan"), Depth::fast, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(check(r, "jordan")->detail.find("witness"), std::string::npos);
  EXPECT_FALSE(check_jordan(*entry_algebra(c.at("T5_nonjordan"))).holds);
}

TEST(Catalog, SmallTablesPass) {
  const Catalog& c = load_catalog();
  for (const char* t : {"nil", "p2", "p3"}) {
    auto reports = verify_table(c, t, Depth::full, 1);
    for (const auto& r : reports) EXPECT_TRUE(r.passed()) << report_to_json(r).dump();
  }
  EXPECT_THROW(verify_table(c, "p6", Depth::fast, 1), StructuralError);
}

TEST(Catalog, ReportsAreDeterministicAndOrdered) {
  const Catalog& c = load_catalog();
  auto a = verify_table(c, "p4", Depth::full, 99);
  auto b = verify_table(c, "p4", Depth::full, 99);
  ASSERT_EQ(a.size(), 16u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, "J5_" + std::to_string(i + 1));
    EXPECT_EQ(report_to_json(a[i]).dump(), report_to_json(b[i]).dump());
  }
}

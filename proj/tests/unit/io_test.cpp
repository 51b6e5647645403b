#include <gtest/gtest.h>

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

// Runs f and returns the StructuralError message, or "" if nothing was thrown.
template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const StructuralError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, PolynomialRoundTripKeepsBigCoefficients) {
  auto v = make_vars({"x", "y"});
  Polynomial p = parse_polynomial("123456789012345678901234567890/7*x^3*y - 1/2*y^2 + 5", v);
  json j = polynomial_to_json(p);
  EXPECT_EQ(j["vars"], json({"x", "y"}));
  // Integers travel as strings.
  for (const auto& t : j["terms"]) {
    EXPECT_TRUE(t["num"].is_string());
    EXPECT_TRUE(t["den"].is_string());
  }
  EXPECT_EQ(polynomial_from_json(json::parse(j.dump())), p);
}

TEST(Io, PolynomialStringFormNeedsContext) {
  auto v = make_vars({"x", "y"});
  EXPECT_EQ(polynomial_from_json(json("x*y - y^2"), v), parse_polynomial("x*y-y^2", v));
  EXPECT_EQ(polynomial_from_json(json{{"vars", {"x", "y"}}, {"expr", "x+y"}}), parse_polynomial("x+y", v));
  EXPECT_THROW(polynomial_from_json(json("x*y")), StructuralError);
}

TEST(Io, IdealAndMapRoundTrip) {
  auto v = coordinate_vars(3);
  Ideal I(v, {parse_polynomial("x*y", v), parse_polynomial("z^2-x*y", v)});
  Ideal back = ideal_from_json(json::parse(ideal_to_json(I).dump()));
  EXPECT_EQ(back.generators(), I.generators());

  RationalMap f = map_of({"y*z", "x*z", "x*y"});
  json j = map_to_json(f);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(map_from_json(json::parse(j.dump())), f);
  json compact = {{"components", {"y*z", "x*z", "x*y"}}};
  EXPECT_EQ(map_from_json(compact), f);
}

TEST(Io, AlgebraRoundTrip) {
  Algebra a(parse_products({"e", "n"}, "e*e=e; e*n=n"), {1, 0});
  Algebra back = algebra_from_json(json::parse(algebra_to_json(a).dump()));
  EXPECT_EQ(back.basis(), a.basis());
  EXPECT_EQ(back.unit(), a.unit());
  EXPECT_EQ(back.table().entries().size(), a.table().entries().size());
  Algebra compact = algebra_from_json({{"basis", {"e", "n"}}, {"unit", {1, 0}}, {"products", "e*e=e; e*n=n"}});
  EXPECT_EQ(compact.multiply({0, 1}, {1, 1}), (Vector{0, 1}));
}

TEST(Io, GluingSpecRoundTrip) {
  ModuleBlock b;
  b.kind = ModuleBlock::Kind::module;
  b.dim = 1;
  b.action = {{Vector{Scalar(1, 2)}}, {Vector{Scalar(1, 2)}}};
  b.product = {{Vector{0}}};
  GluingSpec s{map_of({"x*y", "x^2"}), Vector{1, 1}, {b}, {}};
  GluingSpec back = gluing_from_json(json::parse(gluing_to_json(s).dump()));
  EXPECT_EQ(back.fss, s.fss);
  EXPECT_EQ(back.unit, s.unit);
  ASSERT_EQ(back.blocks.size(), 1u);
  EXPECT_EQ(back.blocks[0].action, b.action);
  EXPECT_EQ(glue(back), glue(s));
}

TEST(Io, ErrorsNameTheOffendingField) {
  json j = {{"components", {"y*z", "x*z", "x*y^"}}};
  EXPECT_NE(error_of([&] { map_from_json(j); }).find("map.components[2]"), std::string::npos);
  j = {{"n", 3}, {"components", {"y*z", "x*z", "x*y"}}};
  EXPECT_NE(error_of([&] { map_from_json(j); }).find("map.n"), std::string::npos);
  j = {{"vars", {"x", "y"}}, {"gens", {{{"vars", {"x", "y"}}, {"terms", {{{"num", "1"}, {"den", "0"}, {"exp", {1, 0}}}}}}}}};
  EXPECT_NE(error_of([&] { ideal_from_json(j); }).find("ideal.gens[0].terms[0]"), std::string::npos);
  j = {{"Fss", {{"components", {"x*y", "x^2"}}}}, {"blocks", {{{"kind", "other"}, {"dim", 1}}}}};
  EXPECT_NE(error_of([&] { gluing_from_json(j); }).find("glue.blocks[0]"), std::string::npos);
}

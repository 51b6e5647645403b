#include <gtest/gtest.h>

#include "cremona/cremona.hpp"
#include "cremona/error.hpp"

using namespace cremona;

namespace {

RationalMap map_of(std::vector<std::string> comps) {
  auto v = coordinate_vars(comps.size());
  std::vector<Polynomial> c;
  for (const auto& s : comps) c.push_back(parse_polynomial(s, v));
  return RationalMap(c);
}

Ideal ideal_of(const VarsPtr& v, std::vector<std::string> gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, v));
  return Ideal(v, g);
}

const std::vector<std::string> kStd2 = {"y*z", "x*z", "x*y"};
const std::vector<std::string> kJ5_1 = {"x^2", "-x*y", "-x*z", "y^2-x*t", "2*y*z-x*u"};
const std::vector<std::string> kJ5_13 = {"y*z", "x*z", "x*y", "-z*t", "-y*u"};

}  // namespace

TEST(Cremona, ComposeWithIdentity) {
  RationalMap f = map_of(kJ5_1);
  EXPECT_EQ(compose(f, RationalMap::identity(f.vars_ptr())), f);
  EXPECT_EQ(compose(RationalMap::identity(f.vars_ptr()), f), f);
  EXPECT_THROW(compose(f, map_of(kStd2)), StructuralError);
}

TEST(Cremona, StandardPlaneInvolutionSquared) {
  RationalMap f = map_of(kStd2);
  EXPECT_EQ(compose(f, f), map_of({"x^2*y*z", "x*y^2*z", "x*y*z^2"}));
  auto r = check_involution(f);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(*r.scaling, parse_polynomial("x*y*z", f.vars_ptr()));
}

TEST(Cremona, UnitalizedNilMapSquaresToCube) {
  // The unitalization of a nilalgebra has norm x^3 (x the unit coordinate).
  RationalMap f = map_of(kJ5_1);
  RationalMap ff = compose(f, f);
  Polynomial n = parse_polynomial("x^3", f.vars_ptr());
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(ff[i], n * Polynomial::variable(f.vars_ptr(), i));
  auto r = check_involution(f);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.scaling->degree(), 3);
}

TEST(Cremona, NonInvolutionsFailWithoutThrowing) {
  auto r = check_involution(map_of({"x^2", "y^2", "z^2"}));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.detail.empty());
  auto s = verify_inverse(map_of(kStd2), map_of({"x^2", "x*y", "z^2"}));
  EXPECT_FALSE(s.ok);
}

TEST(Cremona, ConjugatedInvolutionsVerify) {
  SplitMix64 rng(99);
  for (const auto& comps : {kStd2, kJ5_1, kJ5_13}) {
    RationalMap f = map_of(comps);
    Matrix l = random_invertible_matrix(f.n() + 1, rng);
    RationalMap g = conjugate(f, l);
    auto r = verify_inverse(g, g);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.scaling->degree(), 3);
    EXPECT_EQ(verify_inverse(f, f).scaling, check_involution(f).scaling);
  }
}

TEST(Cremona, SplitMixReferenceValues) {
  // Reference outputs of splitmix64 from seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(Cremona, BaseIdealOfStandardInvolution) {
  RationalMap f = map_of(kStd2);
  Ideal raw = base_ideal(f, false), sat = base_ideal(f, true);
  EXPECT_TRUE(ideal_equal(raw, sat));
  auto h = hilbert(sat);
  EXPECT_EQ(h.hilbert_polynomial, parse_unipoly("3"));
  EXPECT_EQ(h.dimension, 0);
}

TEST(Cremona, BaseIdealDecompositions) {
  RationalMap j12 = map_of({"x*y", "x^2", "-y*z", "-y*t", "-y*u"});
  auto v = j12.vars_ptr();
  EXPECT_TRUE(ideal_equal(base_ideal(j12), intersection(ideal_of(v, {"x^2", "y"}), ideal_of(v, {"x", "z", "t", "u"}))));
  RationalMap j11 = map_of({"x*y", "x^2", "u^2-y*z", "-y*t", "-x*u"});
  EXPECT_TRUE(ideal_equal(base_ideal(j11),
                          intersection(ideal_of(v, {"x", "t", "u^2-y*z"}), ideal_of(v, {"y", "x^2", "x*u", "u^2"}))));
  Ideal sat = base_ideal(j11);
  EXPECT_TRUE(contains(sat, base_ideal(j11, false)));
  EXPECT_TRUE(ideal_equal(saturate_irrelevant(sat), sat));
}

TEST(Cremona, SchemeTypes) {
  EXPECT_EQ(scheme_type(map_of({"x*y", "x^2", "-y*z", "-x*t", "2*z*t-x*u"})).label, "II");
  EXPECT_EQ(scheme_type(map_of({"x^2", "-x*y", "-x*z", "y^2+z^2-x*t", "2*y*z-x*u"})).label, "III");
  EXPECT_EQ(scheme_type(map_of({"x^2", "-x*y", "-x*z", "-x*t", "y^2+z^2-x*u"})).label, "I");
  auto s = scheme_type(map_of(kStd2));
  EXPECT_EQ(s.label, "other");
  EXPECT_EQ(s.hilbert_polynomial, parse_unipoly("3"));
}

TEST(Cremona, SchemeTypeInvariantUnderConjugation) {
  SplitMix64 rng(5);
  RationalMap f = map_of({"x*y", "x^2", "u^2-y*z", "-y*t", "-x*u"});
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(scheme_type(conjugate(f, random_invertible_matrix(5, rng))).label, "III");
  }
}

TEST(Cremona, Multidegrees) {
  EXPECT_EQ(multidegree(map_of(kJ5_13), 7).entries, (std::vector<int>{2, 3, 2}));
  EXPECT_EQ(multidegree(map_of(kStd2), 7).entries, (std::vector<int>{2, 2}));
  RationalMap js = map_of({"y*z-v^2", "x*z-u^2", "x*y-t^2", "u*v-z*t", "t*v-u*y", "t*u-x*v"});
  auto m = multidegree(js, 11);
  EXPECT_EQ(m.entries, (std::vector<int>{2, 4, 4, 2}));
  EXPECT_EQ(m.seed, 11u);
  EXPECT_EQ(m.trials, 3);
}

TEST(Cremona, MultidegreeInvariantUnderLinearEquivalence) {
  SplitMix64 rng(17);
  RationalMap f = map_of(kJ5_1);
  auto base = multidegree(f, 3).entries;
  RationalMap g = linear_equivalent(random_invertible_matrix(5, rng), f, random_invertible_matrix(5, rng));
  EXPECT_EQ(multidegree(g, 4).entries, base);
  EXPECT_EQ(base, (std::vector<int>{2, 3, 2}));
}

TEST(Cremona, MultidegreeRejectsBadArguments) {
  EXPECT_THROW(multidegree(map_of(kStd2), 1, 0), StructuralError);
}

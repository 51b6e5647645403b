#include <gtest/gtest.h>

#include "cremona/constructions.hpp"
#include "cremona/error.hpp"

using namespace cremona;

namespace {

RationalMap map_of(std::vector<std::string> comps) {
  auto v = coordinate_vars(comps.size());
  std::vector<Polynomial> c;
  for (const auto& s : comps) c.push_back(parse_polynomial(s, v));
  return RationalMap(c);
}

const std::vector<std::string> kStd2 = {"y*z", "x*z", "x*y"};

ModuleBlock adjoint_block(std::size_t p, std::size_t coordinate) {
  // 𝓕((x, y), y) = x_coordinate · y on a one-dimensional block.
  ModuleBlock b;
  b.kind = ModuleBlock::Kind::adjoint;
  b.dim = 1;
  b.bilinear.assign(p + 1, std::vector<Vector>(1, Vector{0}));
  b.bilinear[coordinate][0][0] = 1;
  return b;
}

ModuleBlock module_block(std::vector<Scalar> action) {
  ModuleBlock b;
  b.kind = ModuleBlock::Kind::module;
  b.dim = 1;
  for (const auto& a : action) b.action.push_back({Vector{a}});
  b.product = {{Vector{0}}};
  return b;
}

Matrix permutation(const std::vector<std::size_t>& to) {
  Matrix m(to.size(), std::vector<Scalar>(to.size(), Scalar(0)));
  for (std::size_t j = 0; j < to.size(); ++j) m[to[j]][j] = 1;
  return m;
}

}  // namespace

TEST(Glue, OneDimensionalBlocksGiveFalpha) {
  GluingSpec s{map_of(kStd2), std::nullopt, {adjoint_block(3, 0), adjoint_block(3, 1), adjoint_block(3, 2)}, {}};
  EXPECT_EQ(glue(s), falpha(1, 1, 1));
}

TEST(Glue, NoBlocksGivesSemisimpleMap) {
  GluingSpec s{map_of(kStd2), std::nullopt, {}, {}};
  EXPECT_EQ(glue(s), map_of(kStd2));
}

TEST(Glue, CyclicTwist) {
  Matrix cyc = permutation({1, 2, 0});
  GluingSpec s{map_of(kStd2), std::nullopt, {adjoint_block(3, 0), adjoint_block(3, 1), adjoint_block(3, 2)},
               {identity_matrix(3), cyc, cyc}};
  RationalMap g = glue(s);
  EXPECT_EQ(g.n(), 5u);
  EXPECT_NE(g, falpha(1, 1, 1));
  auto r = check_involution(g);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.scaling->degree(), 3);
}

TEST(Glue, BadTwistsAreRejected) {
  auto blocks = std::vector<ModuleBlock>{adjoint_block(3, 0)};
  Matrix scale = {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_THROW(glue(GluingSpec{map_of(kStd2), std::nullopt, blocks, {scale}}), DomainError);
  // Preserves xyz but does not commute with the involution.
  Matrix skew = {{2, 0, 0}, {0, Scalar(1, 2), 0}, {0, 0, 1}};
  EXPECT_THROW(glue(GluingSpec{map_of(kStd2), std::nullopt, blocks, {skew}}), DomainError);
  EXPECT_THROW(glue(GluingSpec{map_of(kStd2), std::nullopt, blocks, {identity_matrix(2)}}), StructuralError);
}

TEST(Glue, NonInvolutiveSemisimpleMapIsRejected) {
  EXPECT_THROW(glue(GluingSpec{map_of({"x^2", "y^2", "z^2"}), std::nullopt, {}, {}}), DomainError);
}

TEST(Glue, ModuleBlocksRoundTripThroughTheAlgebra) {
  // Semisimple part C·e1 ⊕ C·e2 with norm x²y; blocks with Peirce actions 1 and 1/2.
  GluingSpec s{map_of({"x*y", "x^2"}), Vector{1, 1},
               {module_block({1, 0}), module_block({Scalar(1, 2), Scalar(1, 2)}),
                module_block({Scalar(1, 2), Scalar(1, 2)})},
               {}};
  RationalMap g = glue(s);
  EXPECT_EQ(g, map_of({"x*y", "x^2", "-y*z", "-x*t", "-x*u"}));
  Algebra a = glued_algebra(s);
  EXPECT_TRUE(check_jordan(a).holds);
  EXPECT_EQ(adjoint_map(a), g);
}

TEST(Falpha, SmallCases) {
  EXPECT_EQ(falpha(0, 0, 0), map_of(kStd2));
  auto r = check_involution(falpha(2, 0, 0));
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(*r.scaling, parse_polynomial("x*y*z", falpha(2, 0, 0).vars_ptr()));
  RationalMap f = falpha(1, 1, 0);
  EXPECT_EQ(multidegree(f, 2).entries, (std::vector<int>{2, 3, 2}));
  EXPECT_EQ(scheme_type(f).label, "II");
}

TEST(Falpha, PermutingAlphaIsALinearConjugation) {
  // falpha(1,2,0) coordinates (x1,x2,x3,a11,a21,a22) go to falpha(2,1,0)'s (x2,x1,x3,a21,a11,a12).
  Matrix l = permutation({1, 0, 2, 5, 3, 4});
  RationalMap g = conjugate(falpha(2, 1, 0), invert(l));
  EXPECT_EQ(g, falpha(1, 2, 0));
  EXPECT_TRUE(verify_inverse(g, g).ok);
}

TEST(Fn, Identities) {
  EXPECT_EQ(f_n(1), map_of({"x^2", "-x*y", "y^2-x*z"}));
  for (unsigned n = 1; n <= 3; ++n) {
    RationalMap f = f_n(n);
    EXPECT_EQ(f.components().size(), 2 * n + 1);
    auto r = check_involution(f);
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(*r.scaling, Polynomial::variable(f.vars_ptr(), 0).pow(3));
  }
  EXPECT_THROW(f_n(0), DomainError);
}

TEST(Fn, SecondMemberIsConjugateToTypeThree) {
  // a = x, b1 = y+z, c1 = t+u, b2 = y−z, c2 = t−u.
  Matrix l = {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}, {0, 1, -1, 0, 0}, {0, 0, 0, 1, -1}};
  RationalMap g = conjugate(f_n(2), invert(l));
  EXPECT_EQ(g, map_of({"x^2", "-x*y", "-x*z", "y^2+z^2-x*t", "2*y*z-x*u"}));
  EXPECT_EQ(scheme_type(f_n(2)).label, "III");
}

TEST(Spampinato, LiftsOfStandardInvolutions) {
  RationalMap f = map_of(kStd2);
  RationalMap g = spampinato_lift(f, parse_polynomial("x*y*z", f.vars_ptr()));
  EXPECT_EQ(g, standard_involution(4));
  RationalMap h = spampinato_lift(g, parse_polynomial("x*y*z*t", g.vars_ptr()));
  EXPECT_EQ(h, standard_involution(5));
  auto r = check_involution(h);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.scaling->degree(), 15);
}

TEST(Spampinato, LiftOfTruncatedPolynomialAlgebra) {
  RationalMap f = f_n(1);
  RationalMap g = spampinato_lift(f, parse_polynomial("x^3", f.vars_ptr()));
  EXPECT_EQ(g.degree(), 3);
  auto r = check_involution(g);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.scaling->degree(), 8);
}

TEST(Spampinato, WrongNormIsRejected) {
  RationalMap f = map_of(kStd2);
  EXPECT_THROW(spampinato_lift(f, parse_polynomial("x^3", f.vars_ptr())), DomainError);
  EXPECT_THROW(spampinato_lift(f, parse_polynomial("x*y", f.vars_ptr())), DomainError);
}

TEST(StandardInvolution, Cases) {
  EXPECT_EQ(standard_involution(3), map_of(kStd2));
  RationalMap f = standard_involution(4);
  EXPECT_EQ(f, map_of({"y*z*t", "x*z*t", "x*y*t", "x*y*z"}));
  auto r = check_involution(f);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(*r.scaling, parse_polynomial("x*y*z*t", f.vars_ptr()).pow(2));
  EXPECT_THROW(standard_involution(2), DomainError);
}

TEST(Zorn, CubicInvolutionsOnP7) {
  Algebra c3(parse_products({"e1", "e2", "e3"}, "e1*e1=e1; e2*e2=e2; e3*e3=e3"), {1, 1, 1});
  Algebra eps3(parse_products({"e", "a", "b"}, "e*e=e; e*a=a; e*b=b; a*a=b"), {1, 0, 0});
  for (const auto* a : {&c3, &eps3}) {
    RationalMap f = zorn_cubic_map(*a);
    EXPECT_EQ(f.n(), 7u);
    EXPECT_EQ(f.degree(), 3);
    auto r = verify_involution(f, false);
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.mode, "symbolic");
    EXPECT_EQ(r.scaling->degree(), 8);
    auto s = verify_involution(f, true, 4);
    EXPECT_TRUE(s.ok);
    EXPECT_EQ(s.points, 20);
  }
}

TEST(Zorn, SampledModeOnLargerAlgebra) {
  Algebra j(parse_products({"e1", "e2", "a", "b", "d"},
                           "e1*e1=e1; e2*e2=e2; e1*a=a; e1*b=1/2*b; e1*d=1/2*d; e2*b=1/2*b; e2*d=1/2*d; b*b=a"),
            {1, 1, 0, 0, 0});
  RationalMap f = zorn_cubic_map(j);
  EXPECT_EQ(f.n(), 11u);
  auto r = verify_involution(f, true, 9, 25);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.points, 25);
  // A non-involution fails the sampled check.
  EXPECT_FALSE(verify_involution(map_of({"x^2", "y^2", "z^2"}), true).ok);
}

TEST(Zorn, RejectsRankTwo) { EXPECT_THROW(zorn_cubic_map(quadratic_form_algebra(3, 2)), DomainError); }

TEST(Zorn, FootnoteStructure) {
  Algebra c3(parse_products({"e1", "e2", "e3"}, "e1*e1=e1; e2*e2=e2; e3*e3=e3"), {1, 1, 1});
  ZornAlgebra z(c3);
  auto s = z.sigma();
  // σ•σ is the identity matrix and σ̄ = −σ.
  Vector one(z.dim(), Scalar(0));
  one.front() = 1;
  one.back() = 1;
  EXPECT_EQ(z.flatten(z.product(s, s)), z.flatten(z.constant(one)));
  Vector zero(z.dim(), Scalar(0));
  EXPECT_EQ(z.flatten(z.add(z.bar(s), s)), z.flatten(z.constant(zero)));
  // On basis pairs x#y = 2x∘y − T(x)y − T(y)x + ΔS(x,y)e, and the pairing is T(x∘y).
  const auto& rp = c3.rank_profile();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Vector bi(3, Scalar(0)), bj(3, Scalar(0)), sum(3, Scalar(0));
      bi[i] = 1;
      bj[j] = 1;
      for (std::size_t k = 0; k < 3; ++k) sum[k] = bi[k] + bj[k];
      Vector prod = c3.multiply(bi, bj);
      Scalar ti = rp.trace().eval(bi), tj = rp.trace().eval(bj);
      Scalar ds = rp.quad().eval(sum) - rp.quad().eval(bi) - rp.quad().eval(bj);
      std::vector<Polynomial> pi, pj;
      for (std::size_t k = 0; k < 3; ++k) {
        pi.push_back(Polynomial::constant(z.coordinates(), bi[k]));
        pj.push_back(Polynomial::constant(z.coordinates(), bj[k]));
      }
      auto sh = z.sharp(pi, pj);
      for (std::size_t k = 0; k < 3; ++k) {
        Scalar expect = 2 * prod[k] - ti * bj[k] - tj * bi[k] + ds * c3.unit()[k];
        EXPECT_EQ(sh[k], Polynomial::constant(z.coordinates(), expect));
      }
      EXPECT_EQ(z.trace_pairing(pi, pj), Polynomial::constant(z.coordinates(), rp.trace().eval(prod)));
    }
  }
  EXPECT_TRUE(trace_forms_agree(c3));
}

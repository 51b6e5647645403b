#include <gtest/gtest.h>

#include <random>

#include "cremona/error.hpp"
#include "cremona/polynomial.hpp"

using namespace cremona;

namespace {

VarsPtr xyz() {
  static VarsPtr v = make_vars({"x", "y", "z"});
  return v;
}

Polynomial P(const char* s) { return parse_polynomial(s, xyz()); }

// Factorial-based binomial coefficient, independent of the library routine.
long factorial_binomial(long n, long k) {
  long num = 1, den = 1;
  for (long i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

Polynomial random_poly(std::mt19937_64& rng, const VarsPtr& vars, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), exp(0, maxdeg), count(0, 5);
  Polynomial p(vars);
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    int budget = maxdeg;
    for (std::size_t v = 0; v < vars->size(); ++v) {
      int e = std::min(exp(rng), budget);
      budget -= e;
      m.set(v, e);
    }
    p.add_term(m, Scalar(coef(rng)) / (1 + (i % 3)));
  }
  return p;
}

}  // namespace

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ(P("(x+y)*(x-y)"), P("x^2-y^2"));
  EXPECT_TRUE((P("x+y") * Polynomial(xyz())).is_zero());
}

TEST(Poly, BinomialExpansionMatchesClosedForm) {
  Polynomial cube = P("x+y").pow(3);
  int e[] = {2, 1, 0};
  EXPECT_EQ(cube.coefficient(Monomial(e)), Scalar(3));
  Polynomial p = P("x+y");
  Polynomial acc = Polynomial::constant(xyz(), 1);
  for (int n = 1; n <= 9; ++n) {
    acc = acc * p;
    for (int k = 0; k <= n; ++k) {
      int ek[] = {n - k, k, 0};
      EXPECT_EQ(acc.coefficient(Monomial(ek)), Scalar(factorial_binomial(n, k)));
      EXPECT_EQ(binomial(n, k), Scalar(factorial_binomial(n, k)));
    }
  }
}

TEST(Poly, Eval) {
  Scalar pt[] = {2, 3, 0};
  EXPECT_EQ(P("x^2+y").eval(pt), 7);
  Scalar zero[] = {0, 0, 0};
  EXPECT_EQ(P("x^2+y+5/3").eval(zero), Scalar(5, 3));
  Scalar ones[] = {1, 1, 1};
  EXPECT_EQ(P("x*y*z").eval(ones), 1);
  Scalar bad[] = {1, 1};
  EXPECT_THROW(P("x").eval(bad), StructuralError);
}

TEST(Poly, Substitute) {
  std::vector<Polynomial> img = {P("y+z"), P("y"), P("z")};
  EXPECT_EQ(P("x^2").substitute(img), P("y^2+2*y*z+z^2"));
  std::vector<Polynomial> id = {P("x"), P("y"), P("z")};
  Polynomial p = P("x^3 - 2*x*y*z + 7/2*z");
  EXPECT_EQ(p.substitute(id), p);
  std::vector<Polynomial> img2 = {P("y*z"), P("x*z"), P("z")};
  EXPECT_EQ(P("x*y").substitute(img2), P("x*y*z^2"));
  std::vector<Polynomial> bad = {P("x")};
  EXPECT_THROW(p.substitute(bad), StructuralError);
}

TEST(Poly, Content) {
  EXPECT_EQ(P("2*x+4*y").content(), 2);
  EXPECT_EQ(P("1/2*x").content(), Scalar(1, 2));
  EXPECT_EQ(P("6*x^2-9*x*y+3*y^2").content(), 3);
  EXPECT_THROW(Polynomial(xyz()).content(), DomainError);
}

TEST(Poly, MismatchedVariablesRejected) {
  Polynomial a = parse_polynomial("x", make_vars({"x", "y"}));
  EXPECT_THROW(a + P("x"), StructuralError);
  EXPECT_THROW(a * P("x"), StructuralError);
}

TEST(Poly, ExactDivide) {
  EXPECT_EQ(P("x^2*y*z - y^3*z").exact_divide(P("x-y")), P("x*y*z+y^2*z"));
  EXPECT_THROW(P("x^2+1").exact_divide(P("x+y")), DomainError);
}

TEST(Poly, ParserForms) {
  EXPECT_EQ(P("2x y"), P("2*x*y"));
  EXPECT_EQ(P("xy - -z"), P("x*y+z"));
  EXPECT_EQ(P("-(x+y)^2/2"), P("-1/2*x^2 - x*y - 1/2*y^2"));
  EXPECT_THROW(P("x +"), StructuralError);
  EXPECT_THROW(P("q"), StructuralError);
  EXPECT_EQ(parse_polynomial(P("3/4*x^2*y - z + 1").to_string(), xyz()), P("3/4*x^2*y - z + 1"));
}

TEST(PolyProperty, RingAxiomsAndHomomorphisms) {
  std::mt19937_64 rng(20240611);
  VarsPtr v = make_vars({"a", "b", "c", "d"});
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = random_poly(rng, v, 4), q = random_poly(rng, v, 4), r = random_poly(rng, v, 4);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p + q, q + p);
    std::vector<Polynomial> imgs;
    for (int i = 0; i < 4; ++i) imgs.push_back(random_poly(rng, v, 2));
    EXPECT_EQ((p * q).substitute(imgs), p.substitute(imgs) * q.substitute(imgs));
    std::vector<Scalar> pt;
    std::uniform_int_distribution<int> c(-4, 4);
    for (int i = 0; i < 4; ++i) pt.push_back(Scalar(c(rng)) / (1 + i));
    std::vector<Scalar> images_at;
    for (const auto& im : imgs) images_at.push_back(im.eval(pt));
    EXPECT_EQ(p.substitute(imgs).eval(pt), p.eval(images_at));
  }
}

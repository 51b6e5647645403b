#include <gtest/gtest.h>

#include <random>

#include "cremona/error.hpp"
#include "cremona/groebner.hpp"

using namespace cremona;

namespace {

VarsPtr ring3() {
  static VarsPtr v = make_vars({"x", "y", "z"});
  return v;
}

Ideal id3(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, ring3()));
  return Ideal(ring3(), g);
}

Polynomial p3(const char* s) { return parse_polynomial(s, ring3()); }

// Every monomial of degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = int(left);
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = int(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

// Standard-monomial count of degree d: the Hilbert function oracle.
long count_standard(const std::vector<Monomial>& leads, std::size_t n, unsigned d) {
  long c = 0;
  for (const auto& m : monomials_of_degree(n, d)) {
    bool hit = false;
    for (const auto& l : leads) hit = hit || l.divides(m);
    c += !hit;
  }
  return c;
}

}  // namespace

TEST(Groebner, Principal) {
  auto g = id3({"x"}).groebner();
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], p3("x"));
}

TEST(Groebner, HandBuchberger) {
  auto g = id3({"x^2+y^2", "x^2-y^2"}).groebner();
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], p3("y^2"));
  EXPECT_EQ(g[1], p3("x^2"));
}

TEST(Groebner, BuchbergerCriterionPostCondition) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> c(-3, 3);
  VarsPtr v = make_vars({"a", "b", "c", "d"});
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial p(v);
      for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
          p.add_term(Monomial::variable(i) * Monomial::variable(j), c(rng));
        }
      }
      gens.push_back(p);
    }
    for (auto ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
      auto g = groebner_basis(gens, ord);
      EXPECT_TRUE(is_groebner_basis(g, ord)) << ord.name();
      for (const auto& f : gens) EXPECT_TRUE(reduce(f, g, ord).is_zero());
      for (const auto& f : g) EXPECT_EQ(leading_coefficient(f, ord), 1);
    }
  }
}

TEST(Groebner, NormalForms) {
  Ideal I = id3({"x"});
  EXPECT_TRUE(normal_form(p3("x^2+x*y"), I).is_zero());
  EXPECT_EQ(normal_form(p3("y"), I), p3("y"));
  Ideal J = id3({"x^2-y*z", "x*y-z^2", "y^2-x*z"});
  for (const auto& g : J.generators()) EXPECT_TRUE(contains(J, g));
  EXPECT_FALSE(contains(J, p3("x")));
}

TEST(Groebner, UnitIdeal) {
  Ideal I = id3({"x*y-1", "x"});
  EXPECT_TRUE(I.is_unit());
}

TEST(Ideals, Intersection) {
  EXPECT_TRUE(ideal_equal(intersection(id3({"x"}), id3({"y"})), id3({"x*y"})));
  Ideal meet = intersection(id3({"x", "y"}), id3({"x", "z"}));
  EXPECT_TRUE(ideal_equal(meet, id3({"x", "y*z"})));
  // Oracle: membership of small monomials in both ideals versus the meet.
  for (unsigned d = 1; d <= 3; ++d) {
    for (const auto& m : monomials_of_degree(3, d)) {
      Polynomial p = Polynomial::term(ring3(), m, 1);
      bool both = contains(id3({"x", "y"}), p) && contains(id3({"x", "z"}), p);
      EXPECT_EQ(contains(meet, p), both);
    }
  }
}

TEST(Ideals, Quotient) {
  EXPECT_TRUE(ideal_equal(quotient(id3({"x*y"}), p3("x")), id3({"y"})));
  EXPECT_TRUE(ideal_equal(quotient(id3({"x^2"}), p3("x")), id3({"x"})));
  EXPECT_TRUE(ideal_equal(quotient(id3({"x*z", "y*z"}), p3("z")), id3({"x", "y"})));
  EXPECT_THROW(quotient(id3({"x"}), Polynomial(ring3())), DomainError);
  // Both quotient algorithms agree.
  Ideal I = id3({"x^2*y - z^3", "x*y^2", "y*z^2"});
  for (const char* f : {"x", "y+z", "x*y"}) {
    EXPECT_TRUE(ideal_equal(quotient(I, p3(f)), quotient_homogeneous(I, p3(f)))) << f;
  }
}

TEST(Ideals, Saturation) {
  EXPECT_TRUE(ideal_equal(saturation(id3({"x*z", "y*z"}), id3({"z"})), id3({"x", "y"})));
  Ideal I = id3({"x^2*y", "x*y^2"});
  Ideal S = saturation(I, id3({"x", "y"}));
  EXPECT_TRUE(ideal_equal(S, id3({"x*y"})));
  // Brute-force oracle: xy·(x,y)^k ⊂ I for some k; x and y are not in the saturation.
  Polynomial xy = p3("x*y");
  bool found = false;
  for (unsigned k = 0; k <= 3 && !found; ++k) {
    bool all = true;
    for (unsigned a = 0; a <= k; ++a) {
      Polynomial m = xy * p3("x").pow(a) * p3("y").pow(k - a);
      all = all && contains(I, m);
    }
    found = all;
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(contains(S, p3("x")));
  EXPECT_FALSE(contains(S, p3("y")));
  EXPECT_TRUE(ideal_equal(saturation(S, id3({"x", "y"})), S));
  EXPECT_TRUE(saturation(Ideal(ring3()), id3({"x"})).is_zero());
  EXPECT_TRUE(ideal_equal(saturation(I, id3({"x", "y"}), SaturationMethod::intersection), S));
}

TEST(Hilbert, PointsAndLines) {
  HilbertData h = hilbert(id3({"x", "y"}));
  EXPECT_EQ(h.dimension, 0);
  EXPECT_EQ(h.degree, 1);
  EXPECT_EQ(h.hilbert_polynomial, parse_unipoly("1"));
  HilbertData three = hilbert(id3({"y*z", "x*z", "x*y"}));
  EXPECT_EQ(three.hilbert_polynomial, parse_unipoly("3"));
  HilbertData conic = hilbert(id3({"x^2+y^2+z^2"}));
  EXPECT_EQ(conic.dimension, 1);
  EXPECT_EQ(conic.hilbert_polynomial, parse_unipoly("2t+1"));
  HilbertData empty = hilbert(id3({"x", "y", "z"}));
  EXPECT_EQ(empty.dimension, -1);
  EXPECT_EQ(empty.degree, 0);
  EXPECT_THROW(hilbert(id3({"x+1"})), DomainError);
}

TEST(Hilbert, BruteForceCountAgrees) {
  VarsPtr v = make_vars({"x", "y", "z", "t", "u"});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2 + trial % 4; ++k) {
      Polynomial p(v);
      for (int i = 0; i < 5; ++i) {
        for (int j = i; j < 5; ++j) {
          if (c(rng) == 0) p.add_term(Monomial::variable(i) * Monomial::variable(j), c(rng) + 3);
        }
      }
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    Ideal I(v, gens);
    HilbertData h = hilbert(I);
    std::vector<Monomial> leads;
    for (const auto& g : I.groebner()) leads.push_back(leading_monomial(g, MonomialOrder::degrevlex()));
    for (unsigned d = 0; d <= 8; ++d) {
      long count = count_standard(leads, 5, d);
      EXPECT_EQ(h.hilbert_function(int(d)), count);
      if (int(d) >= h.regularity_bound) EXPECT_EQ(h.hilbert_polynomial.eval(d), count);
    }
    EXPECT_EQ(hilbert(Ideal(v, I.groebner())).hilbert_polynomial, h.hilbert_polynomial);
  }
}

TEST(Hilbert, MonomialKPolynomial) {
  // (x^2, y^2) in 2 variables: K = (1 - t^2)^2.
  int a[] = {2, 0}, b[] = {0, 2};
  auto k = monomial_k_polynomial({Monomial(a), Monomial(b)}, 2);
  std::vector<Integer> expect = {1, 0, -2, 0, 1};
  EXPECT_EQ(k, expect);
}

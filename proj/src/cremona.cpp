#include "cremona/cremona.hpp"

#include <cstdlib>
#include <string_view>

#include "cremona/error.hpp"

namespace cremona {

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("CREMONA_LAB_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') throw StructuralError("CREMONA_LAB_SEED must be a non-negative integer");
  return v;
}

Matrix random_invertible_matrix(std::size_t n, SplitMix64& rng, long range) {
  for (;;) {
    Matrix m(n, std::vector<Scalar>(n));
    for (auto& row : m) {
      for (auto& c : row) c = rng.uniform(-range, range);
    }
    if (matrix_rank(m) == n) return m;
  }
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  if (f.n() != g.n()) throw StructuralError("cannot compose maps of different ambient dimensions");
  std::vector<Polynomial> c;
  c.reserve(f.components().size());
  for (const auto& p : f.components()) c.push_back(p.substitute(g.components()));
  return RationalMap(std::move(c));
}

RationalMap conjugate(const RationalMap& f, const Matrix& l) { return linear_equivalent(l, f, invert(l)); }

RationalMap linear_equivalent(const Matrix& l1, const RationalMap& f, const Matrix& l2) {
  const VarsPtr& v = f.vars_ptr();
  return compose(compose(RationalMap::linear(v, l1), f), RationalMap::linear(v, l2));
}

namespace {

ScalingResult scaling_against_identity(const RationalMap& h) {
  ScalingResult r;
  const VarsPtr& v = h.vars_ptr();
  std::optional<Polynomial> c;
  for (std::size_t i = 0; i < h.components().size() && !c; ++i) {
    if (h[i].is_zero()) continue;
    try {
      c = h[i].exact_divide(Polynomial::variable(v, i));
    } catch (const DomainError&) {
      r.detail = "component " + std::to_string(i) + " is not divisible by its coordinate";
      return r;
    }
  }
  if (!c) {
    r.detail = "composition is identically zero";
    return r;
  }
  for (std::size_t i = 0; i < h.components().size(); ++i) {
    if (h[i] != *c * Polynomial::variable(v, i)) {
      r.detail = "component " + std::to_string(i) + " differs from c·x_" + std::to_string(i);
      return r;
    }
  }
  r.ok = true;
  r.scaling = std::move(c);
  return r;
}

}  // namespace

ScalingResult check_involution(const RationalMap& f) { return scaling_against_identity(compose(f, f)); }

ScalingResult verify_inverse(const RationalMap& f, const RationalMap& g) {
  if (f.n() != g.n()) throw StructuralError("maps have different ambient dimensions");
  return scaling_against_identity(compose(g, f));
}

Ideal base_ideal(const RationalMap& f, bool saturate) {
  Ideal raw(f.vars_ptr(), f.components());
  return saturate ? saturate_irrelevant(raw) : raw;
}

const UniPoly& type_polynomial(const std::string& label, std::size_t n) {
  static const UniPoly h1 = parse_unipoly("t^2+2t+2");
  static const UniPoly h2 = parse_unipoly("(t^2+7t+2)/2");
  static const UniPoly h3 = parse_unipoly("5t");
  // Computed from the generic maps of P^5: quadric threefold plus a point,
  // three-dimensional union of linear spaces, degree 3 and Veronese surfaces.
  static const UniPoly g1 = parse_unipoly("(2t^3+9t^2+13t+12)/6");
  static const UniPoly g2 = parse_unipoly("(t^3+9t^2+20t+6)/6");
  static const UniPoly g3 = parse_unipoly("(3t^2+9t)/2");
  static const UniPoly g4 = parse_unipoly("2t^2+3t+1");
  if (n == 4) {
    if (label == "I") return h1;
    if (label == "II") return h2;
    if (label == "III") return h3;
  } else if (n == 5) {
    if (label == "I") return g1;
    if (label == "II") return g2;
    if (label == "III") return g3;
    if (label == "IV") return g4;
  } else {
    throw StructuralError("scheme types are tabulated on P^4 and P^5 only");
  }
  throw StructuralError("unknown scheme type '" + label + "'");
}

SchemeType scheme_type(const RationalMap& f) {
  SchemeType s;
  s.hilbert = hilbert(base_ideal(f, true));
  s.hilbert_polynomial = s.hilbert.hilbert_polynomial;
  s.label = "other";
  if ((f.n() == 4 || f.n() == 5) && f.degree() == 2) {
    for (const char* l : {"I", "II", "III", "IV"}) {
      if (f.n() == 4 && std::string_view(l) == "IV") continue;
      if (s.hilbert_polynomial == type_polynomial(l, f.n())) s.label = l;
    }
  }
  return s;
}

int residual_degree(const RationalMap& f, const Ideal& base, std::size_t k, SplitMix64& rng) {
  const VarsPtr& v = f.vars_ptr();
  std::vector<Polynomial> gens;
  while (gens.size() < k) {
    Polynomial g(v);
    for (const auto& c : f.components()) g += c * Scalar(rng.uniform(-20, 20));
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  Ideal residual = saturation(Ideal(v, gens), base);
  Integer d = hilbert(residual).degree;
  if (!d.fits_sint_p()) throw InternalError("residual degree overflows");
  return static_cast<int>(d.get_si());
}

MultiDegree multidegree(const RationalMap& f, std::uint64_t seed, int trials) {
  if (trials < 1) throw StructuralError("multidegree needs at least one trial");
  if (f.n() < 2) throw DomainError("multidegree needs n >= 2");
  Ideal base = base_ideal(f, true);
  SplitMix64 master(seed);
  std::vector<int> first;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(master.next());
    std::vector<int> d;
    for (std::size_t k = 1; k < f.n(); ++k) d.push_back(residual_degree(f, base, k, rng));
    if (f.n() == 2) d.push_back(d.front());
    if (t == 0) {
      first = d;
    } else if (d != first) {
      throw GenericityError("multidegree trials disagree; the random combinations were not generic. "
                            "Retry with another --seed or a wider coefficient range");
    }
  }
  return {first, seed, trials};
}

}  // namespace cremona

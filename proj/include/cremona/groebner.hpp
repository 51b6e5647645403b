#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cremona/order.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/// Dense univariate polynomial over Q; c[i] is the coefficient of t^i.
struct UniPoly {
  std::vector<Scalar> c;

  int degree() const;
  Scalar eval(const Scalar& t) const;
  Scalar leading() const { return c.empty() ? Scalar(0) : c.back(); }
  std::string to_string(const std::string& var = "t") const;
  void trim();

  friend bool operator==(const UniPoly& a, const UniPoly& b);
};

/// Parses forms like "t^2 + 2t + 2", "(t^2+7t+2)/2" or "5t" in variable t.
UniPoly parse_unipoly(const std::string& text);

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord);
Scalar leading_coefficient(const Polynomial& p, const MonomialOrder& ord);

/// Reduced Gröbner basis of the ideal spanned by `gens`: monic, interreduced,
/// sorted by increasing leading monomial. Empty for the zero ideal.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

/// Buchberger's criterion on an arbitrary generating set: every S-polynomial
/// reduces to zero modulo `basis`.
bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// Remainder of p on full division by `basis` (assumed a Gröbner basis for `ord`).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// Ideal of a polynomial ring with cached reduced bases, one per order.
/// Copies share the cache; concurrent first computations are harmless.
class Ideal {
 public:
  explicit Ideal(VarsPtr vars, std::vector<Polynomial> gens = {});

  const VarsPtr& vars_ptr() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  struct Cache;
  VarsPtr vars_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& p, const Ideal& I,
                       const MonomialOrder& ord = MonomialOrder::degrevlex());
bool contains(const Ideal& I, const Polynomial& p);
/// J ⊆ I.
bool contains(const Ideal& I, const Ideal& J);
/// Equality of ideals through their reduced degrevlex bases.
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// I ∩ k[x_first..x_last]: elimination of the variables with index < k.
/// The result lives in the ring of the remaining variables `target`.
Ideal eliminate_leading(const Ideal& I, std::size_t k, VarsPtr target);

/// I ∩ J through t·I + (1 − t)·J and elimination of t.
Ideal intersection(const Ideal& I, const Ideal& J);
Ideal intersection(const std::vector<Ideal>& ideals);

/// (I : f) computed as (I ∩ (f)) / f.
Ideal quotient(const Ideal& I, const Polynomial& f);

/// (I : f) for homogeneous I and f, from a single weighted-degrevlex basis of
/// I + (w − f) with the auxiliary variable w last (Bayer's argument).
Ideal quotient_homogeneous(const Ideal& I, const Polynomial& f);

enum class SaturationMethod { automatic, intersection };

/// (I : J^∞) = ∩_g (I : g^∞) over the generators g of J, each factor found by
/// iterating single-generator quotients until the reduced basis stabilizes.
/// `automatic` uses the homogeneous quotient when I and g are homogeneous.
Ideal saturation(const Ideal& I, const Ideal& J, SaturationMethod method = SaturationMethod::automatic);
Ideal saturation(const Ideal& I, const Polynomial& g, SaturationMethod method = SaturationMethod::automatic);

/// Saturation by the irrelevant ideal (all variables).
Ideal saturate_irrelevant(const Ideal& I);

/// Hilbert series data of S/I for homogeneous I.
struct HilbertData {
  /// K-polynomial: HS(t) = K(t) / (1 − t)^n.
  std::vector<Integer> series_numerator;
  /// Reduced numerator h(t) with HS(t) = h(t) / (1 − t)^(dimension + 1).
  std::vector<Integer> reduced_numerator;
  /// Projective dimension; −1 for the empty scheme.
  int dimension = -1;
  /// h(1); 0 for the empty scheme.
  Integer degree = 0;
  UniPoly hilbert_polynomial;
  /// HF(s) = HP(s) for all s ≥ regularity_bound.
  int regularity_bound = 0;

  /// Hilbert function value from the series expansion.
  Integer hilbert_function(int s) const;
};

HilbertData hilbert(const Ideal& I);

/// K-polynomial of a monomial ideal in n variables (pivot recursion).
std::vector<Integer> monomial_k_polynomial(std::vector<Monomial> gens, std::size_t n);

}  // namespace cremona

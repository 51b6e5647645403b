#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/groebner.hpp"
#include "cremona/map.hpp"
#include "cremona/random.hpp"

namespace cremona {

/// f∘g by substituting g into f. No common factor is cancelled, so the
/// degree is deg f · deg g.
RationalMap compose(const RationalMap& f, const RationalMap& g);

/// l∘f∘l⁻¹ for an invertible matrix l.
RationalMap conjugate(const RationalMap& f, const Matrix& l);

/// f ↦ l1∘f∘l2 with l1, l2 invertible.
RationalMap linear_equivalent(const Matrix& l1, const RationalMap& f, const Matrix& l2);

struct ScalingResult {
  bool ok = false;
  /// c with g∘f = c·id.
  std::optional<Polynomial> scaling;
  std::string detail;
};

/// Succeeds iff f∘f = c·(x_0, …, x_n) for one polynomial c.
ScalingResult check_involution(const RationalMap& f);
/// Succeeds iff g∘f = c·id.
ScalingResult verify_inverse(const RationalMap& f, const RationalMap& g);

/// Ideal of the components, optionally saturated by the irrelevant ideal.
Ideal base_ideal(const RationalMap& f, bool saturate = true);

struct SchemeType {
  /// "I", "II", "III" for quadro-quadric maps of P^4, "I" to "IV" on P^5
  /// (matched by Hilbert polynomial), otherwise "other".
  std::string label;
  UniPoly hilbert_polynomial;
  HilbertData hilbert;
};

/// Hilbert polynomial of a base-locus type on P^4 or P^5.
const UniPoly& type_polynomial(const std::string& label, std::size_t n = 4);

SchemeType scheme_type(const RationalMap& f);

struct MultiDegree {
  std::vector<int> entries;
  std::uint64_t seed = 0;
  int trials = 0;
};

/// d_k for k = 1..n−1: degree of the residual (g_1, …, g_k) : B^∞ where the
/// g_i are random combinations of the components with coefficients in
/// [−20, 20] and B is the saturated base ideal. On P^2 the inverse degree
/// d_1 is repeated, giving (2, 2) for quadratic maps. Throws GenericityError
/// if the trials disagree.
MultiDegree multidegree(const RationalMap& f, std::uint64_t seed, int trials = 3);

/// One trial of the residual computation for a given k.
int residual_degree(const RationalMap& f, const Ideal& base, std::size_t k, SplitMix64& rng);

}  // namespace cremona

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "cremona/monomial.hpp"

namespace cremona {

/// Term orders used by the Gröbner engine.
///
/// `elimination(k)` is the block order ((degrevlex on the first k variables),
/// (degrevlex on the rest)): any monomial involving the first block beats every
/// monomial that does not, so a Gröbner basis restricted to the remaining
/// variables generates the elimination ideal.
///
/// Degrevlex may carry positive integer weights; the degree comparison then
/// uses the weighted degree (needed for auxiliary variables standing for forms
/// of degree > 1).
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::elimination, block); }
  static MonomialOrder weighted_degrevlex(std::span<const unsigned> weights);

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  bool weighted() const { return weighted_; }

  /// Weighted total degree (plain total degree for unweighted orders).
  unsigned weighted_degree(const Monomial& m) const;

  /// Three-way comparison; `greater` means a is the larger monomial.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) { weights_.fill(1); }

  Kind kind_;
  std::size_t block_;
  bool weighted_ = false;
  std::array<std::uint8_t, kMaxVars> weights_{};
};

}  // namespace cremona

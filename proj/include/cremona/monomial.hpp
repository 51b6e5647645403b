#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace cremona {

/// Upper bound on the number of variables of any polynomial ring.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector packed into a fixed byte array. Unused trailing slots stay
/// zero, so the defaulted comparison is the lexicographic order on exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  /// Number of leading slots that may be nonzero, i.e. the index past the last nonzero one.
  std::size_t support_end() const;

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) with *this as the divisor of `other`: returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Sum of exponents over positions [begin, end).
  unsigned block_degree(std::size_t begin, std::size_t end) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t degree_ = 0;
};

}  // namespace cremona

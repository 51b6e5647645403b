#pragma once

#include <cstdint>

#include "cremona/map.hpp"

namespace cremona {

/// splitmix64 (Steele, Lea, Flood). Small state, fully specified output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Seed from CREMONA_LAB_SEED, or `fallback` when unset.
std::uint64_t default_seed(std::uint64_t fallback = 1);

/// Random invertible integer matrix with entries in [−range, range].
Matrix random_invertible_matrix(std::size_t n, SplitMix64& rng, long range = 3);

}  // namespace cremona

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cauchykit/cauchy.hpp"

namespace cauchykit {

/// 64-bit linear congruential stream (Knuth's MMIX constants). The state
/// starts at the seed and is advanced before every draw; a draw is the high
/// 32 bits of the new state.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next_u32() {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Uniform-ish in [0, bound): one draw mod bound, or two draws (high then
  /// low word) mod bound when bound exceeds 2^32.
  std::uint64_t below(std::uint64_t bound);

  /// Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

/// n-point data with 2n distinct scalars drawn by rejection: integers in
/// [-radius, radius] over Q (radius 0 means 4n), residues over GF(p). The
/// first n accepted values form x, the next n form x̃. Throws
/// InvalidArgument when GF(p) has fewer than 2n elements or the range is too
/// small.
CauchyData generate_data(std::size_t n, std::uint64_t seed, const Field& field, std::int64_t radius = 0);

/// Integer in [-radius, radius] over Q; a uniform residue over GF(p).
Scalar random_scalar(Lcg& rng, const Field& field, std::int64_t radius);
Scalar random_nonzero(Lcg& rng, const Field& field, std::int64_t radius);

}  // namespace cauchykit

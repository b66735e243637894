#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace ranklab {

__extension__ typedef unsigned __int128 Uint128;

// SplitMix64. Small, seedable, and splittable: stream(seed, i) hands every
// sample index its own generator, so results do not depend on how samples
// are spread over workers.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

 private:
  std::uint64_t state_;
};

// Seed of the i-th independent stream under `seed`.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64::mix(SplitMix64::mix(seed) + SplitMix64::kGamma * (index + 1));
}

inline SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(stream_seed(seed, index));
}

// Unbiased draw from [0, bound), bound >= 1 (Lemire's multiply-and-reject).
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const Uint128 product = static_cast<Uint128>(rng()) * bound;
    if (static_cast<std::uint64_t>(product) >= threshold) return static_cast<std::uint64_t>(product >> 64);
  }
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(SplitMix64& rng) noexcept { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::span<T> items, SplitMix64& rng) {
  for (std::size_t k = items.size(); k > 1; --k) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, k));
    std::swap(items[k - 1], items[j]);
  }
}

}  // namespace ranklab

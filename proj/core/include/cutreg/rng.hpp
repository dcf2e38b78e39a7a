#pragma once

#include <cstdint>
#include <initializer_list>

namespace cutreg {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Deterministic counter-style generator. Streams are derived by mixing a key
/// tuple, so (seed, guess index, sample index) and similar tuples address
/// independent streams regardless of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Burn one step so that seed 0 does not start at the raw constant.
    detail::splitmix64(state_);
  }

  static std::uint64_t derive(std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = 0x8e51'ab7e'0d5c'1f33ull;
    for (std::uint64_t k : keys) {
      h ^= k + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      std::uint64_t s = h;
      h = detail::splitmix64(s);
    }
    return h;
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    return next_u64() % bound;
  }

  bool next_bool() { return next_u64() & 1ull; }

 private:
  std::uint64_t state_;
};

}  // namespace cutreg

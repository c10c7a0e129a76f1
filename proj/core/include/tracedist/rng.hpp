#pragma once

#include <cstdint>

namespace tracedist {

/// Deterministic 64-bit generator (splitmix64). All randomness in the library
/// flows through explicit seeds of this type so that every operation is
/// reproducible bit-for-bit across platforms and thread counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  int next_bit() { return static_cast<int>(next() >> 63); }

  /// Derives an independent stream seed from (master, stream index).
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 mix(master ^ (0x632be59bd9b4e019ull + stream * 0x9e3779b97f4a7c15ull));
    mix.next();
    return mix.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace tracedist

#ifndef GRUNDY_RNG_HPP
#define GRUNDY_RNG_HPP

#include <cstdint>

namespace grundy {

/// splitmix64 (Steele, Lea, Flood). Fixed across platforms so seeded
/// generator output is bit-portable; the exact update is documented in
/// the README.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in 0..bound-1 (plain modulo; bias is irrelevant
  /// at the bounds used here and keeps the stream reproducible).
  uint64_t next_below(uint64_t bound) { return next() % bound; }

  /// Value in [0, 1) with 53 bits.
  double next_double() { return double(next() >> 11) * 0x1.0p-53; }
};

/// Per-sample seed for index-sharded streams: sample i of a run seeded
/// with s uses mix_seed(s, i).
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  SplitMix64 rng(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return rng.next();
}

}  // namespace grundy

#endif  // GRUNDY_RNG_HPP

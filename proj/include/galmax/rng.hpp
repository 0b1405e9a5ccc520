#pragma once

/// Deterministic pseudo-randomness.
///
/// Every randomized routine in the library (Cantor–Zassenhaus splits,
/// product-replacement element generation, falsifier sampling) receives an
/// explicit 64-bit seed and derives all of its choices from this generator,
/// so runs are reproducible bit-for-bit. The generator is xoshiro256**,
/// seeded through splitmix64 as its authors recommend.

#include <cstdint>

namespace galmax {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 stream fills the state; all-zero state is unreachable.
    std::uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform value in [0, n), n > 0. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~0ULL) / n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Derives an independent stream, for handing to sub-computations without
  /// coupling their consumption patterns.
  Rng fork() { return Rng(next() ^ 0xa0761d6478bd642fULL); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

} // namespace galmax

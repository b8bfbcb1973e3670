#pragma once

#include <cstdint>

// Counter-based mixing shared by the scalar and SIMD paths.  Every random
// quantity in the project is a pure function of (seed, counter), so samples
// are random-access and independent of worker count.

namespace lflab::rng {

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// table entry precomputed per prime (or per counter)
inline uint64_t premix(uint64_t key) { return mix64(key * kGolden + 0x6A09E667F3BCC909ull); }

// uniform in [0,1) from a seed and a premixed key, 52 random bits
inline double unit_from(uint64_t seed, uint64_t premixed) {
  return (double)(mix64(seed ^ premixed) >> 12) * 0x1p-52;
}

// derived per-sample seed
inline uint64_t subseed(uint64_t master, uint64_t index) { return mix64(master ^ premix(index)); }

}  // namespace lflab::rng

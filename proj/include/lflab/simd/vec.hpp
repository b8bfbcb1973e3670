#pragma once

// Lane abstraction for the numeric kernels.  Every kernel is written once as
// a template over a pack type and instantiated twice: ScalarPack is the
// reference lane, Avx2Pack the wide lane.  Both packs expose the same
// correctly-rounded primitives (IEEE add/mul/div/sqrt plus a true fused
// multiply-add), so a kernel produces the same per-lane bit pattern on either
// instantiation.  Avx2Pack is only defined inside translation units compiled
// with AVX2+FMA enabled (they define LFLAB_AVX2_TU before including this).

#include <cmath>
#include <cstdint>
#include <cstring>

#ifdef LFLAB_AVX2_TU
#include <immintrin.h>
#endif

namespace lflab::simd {

inline double bitcast_d(uint64_t u) {
  double d;
  std::memcpy(&d, &u, 8);
  return d;
}
inline uint64_t bitcast_u(double d) {
  uint64_t u;
  std::memcpy(&u, &d, 8);
  return u;
}

struct ScalarU64;

struct ScalarPack {
  static constexpr int width = 1;
  double v;

  static ScalarPack broadcast(double x) { return {x}; }
  static ScalarPack zero() { return {0.0}; }
  static ScalarPack load(const double* p) { return {*p}; }
  void store(double* p) const { *p = v; }

  friend ScalarPack operator+(ScalarPack a, ScalarPack b) { return {a.v + b.v}; }
  friend ScalarPack operator-(ScalarPack a, ScalarPack b) { return {a.v - b.v}; }
  friend ScalarPack operator*(ScalarPack a, ScalarPack b) { return {a.v * b.v}; }
  friend ScalarPack operator/(ScalarPack a, ScalarPack b) { return {a.v / b.v}; }
  friend ScalarPack operator-(ScalarPack a) { return {-a.v}; }
};

inline ScalarPack fma(ScalarPack a, ScalarPack b, ScalarPack c) { return {std::fma(a.v, b.v, c.v)}; }
inline ScalarPack round_nearest(ScalarPack a) { return {std::nearbyint(a.v)}; }
inline ScalarPack max(ScalarPack a, ScalarPack b) { return {a.v > b.v ? a.v : b.v}; }
inline ScalarPack min(ScalarPack a, ScalarPack b) { return {a.v < b.v ? a.v : b.v}; }
inline ScalarPack abs(ScalarPack a) { return {std::fabs(a.v)}; }
// Masks are all-ones / all-zeros bit patterns, like the vector compares.
inline ScalarPack cmp_lt(ScalarPack a, ScalarPack b) { return {bitcast_d(a.v < b.v ? ~0ull : 0ull)}; }
inline ScalarPack cmp_gt(ScalarPack a, ScalarPack b) { return {bitcast_d(a.v > b.v ? ~0ull : 0ull)}; }
inline ScalarPack cmp_ge(ScalarPack a, ScalarPack b) { return {bitcast_d(a.v >= b.v ? ~0ull : 0ull)}; }
inline ScalarPack blend(ScalarPack mask, ScalarPack a, ScalarPack b) {
  // lanes with mask bits set take a, others b
  return {bitcast_d((bitcast_u(a.v) & bitcast_u(mask.v)) | (bitcast_u(b.v) & ~bitcast_u(mask.v)))};
}
inline ScalarPack and_bits(ScalarPack a, ScalarPack b) { return {bitcast_d(bitcast_u(a.v) & bitcast_u(b.v))}; }
inline ScalarPack or_bits(ScalarPack a, ScalarPack b) { return {bitcast_d(bitcast_u(a.v) | bitcast_u(b.v))}; }
inline ScalarPack xor_bits(ScalarPack a, ScalarPack b) { return {bitcast_d(bitcast_u(a.v) ^ bitcast_u(b.v))}; }
inline bool any_true(ScalarPack mask) { return bitcast_u(mask.v) != 0; }
inline double reduce_add(ScalarPack a) { return a.v; }
inline ScalarPack sqrt(ScalarPack a) { return {std::sqrt(a.v)}; }

struct ScalarU64 {
  static constexpr int width = 1;
  uint64_t v;

  static ScalarU64 broadcast(uint64_t x) { return {x}; }
  static ScalarU64 load(const uint64_t* p) { return {*p}; }
  friend ScalarU64 operator+(ScalarU64 a, ScalarU64 b) { return {a.v + b.v}; }
  friend ScalarU64 operator^(ScalarU64 a, ScalarU64 b) { return {a.v ^ b.v}; }
  friend ScalarU64 operator>>(ScalarU64 a, int s) { return {a.v >> s}; }
  friend ScalarU64 operator<<(ScalarU64 a, int s) { return {a.v << s}; }
};
inline ScalarU64 mul_lo64(ScalarU64 a, ScalarU64 b) { return {a.v * b.v}; }
inline ScalarU64 or_u(ScalarU64 a, ScalarU64 b) { return {a.v | b.v}; }
inline ScalarU64 and_u(ScalarU64 a, ScalarU64 b) { return {a.v & b.v}; }
inline ScalarU64 to_u64_bits(ScalarPack a) { return {bitcast_u(a.v)}; }
inline ScalarPack to_double_bits(ScalarU64 a) { return {bitcast_d(a.v)}; }
// u64 -> double, value must be in [0, 2^52)
inline ScalarPack u52_to_double(ScalarU64 a) {
  return {bitcast_d(a.v | 0x4330000000000000ull) - 4503599627370496.0};
}

#ifdef LFLAB_AVX2_TU

struct Avx2U64;

struct Avx2Pack {
  static constexpr int width = 4;
  __m256d v;

  static Avx2Pack broadcast(double x) { return {_mm256_set1_pd(x)}; }
  static Avx2Pack zero() { return {_mm256_setzero_pd()}; }
  static Avx2Pack load(const double* p) { return {_mm256_loadu_pd(p)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  friend Avx2Pack operator+(Avx2Pack a, Avx2Pack b) { return {_mm256_add_pd(a.v, b.v)}; }
  friend Avx2Pack operator-(Avx2Pack a, Avx2Pack b) { return {_mm256_sub_pd(a.v, b.v)}; }
  friend Avx2Pack operator*(Avx2Pack a, Avx2Pack b) { return {_mm256_mul_pd(a.v, b.v)}; }
  friend Avx2Pack operator/(Avx2Pack a, Avx2Pack b) { return {_mm256_div_pd(a.v, b.v)}; }
  friend Avx2Pack operator-(Avx2Pack a) { return {_mm256_sub_pd(_mm256_setzero_pd(), a.v)}; }
};

inline Avx2Pack fma(Avx2Pack a, Avx2Pack b, Avx2Pack c) { return {_mm256_fmadd_pd(a.v, b.v, c.v)}; }
inline Avx2Pack round_nearest(Avx2Pack a) {
  return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC)};
}
inline Avx2Pack max(Avx2Pack a, Avx2Pack b) { return {_mm256_max_pd(a.v, b.v)}; }
inline Avx2Pack min(Avx2Pack a, Avx2Pack b) { return {_mm256_min_pd(a.v, b.v)}; }
inline Avx2Pack abs(Avx2Pack a) {
  return {_mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v)};
}
inline Avx2Pack cmp_lt(Avx2Pack a, Avx2Pack b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
inline Avx2Pack cmp_gt(Avx2Pack a, Avx2Pack b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
inline Avx2Pack cmp_ge(Avx2Pack a, Avx2Pack b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ)}; }
inline Avx2Pack blend(Avx2Pack mask, Avx2Pack a, Avx2Pack b) { return {_mm256_blendv_pd(b.v, a.v, mask.v)}; }
inline Avx2Pack and_bits(Avx2Pack a, Avx2Pack b) { return {_mm256_and_pd(a.v, b.v)}; }
inline Avx2Pack or_bits(Avx2Pack a, Avx2Pack b) { return {_mm256_or_pd(a.v, b.v)}; }
inline Avx2Pack xor_bits(Avx2Pack a, Avx2Pack b) { return {_mm256_xor_pd(a.v, b.v)}; }
inline bool any_true(Avx2Pack mask) { return _mm256_movemask_pd(mask.v) != 0; }
inline Avx2Pack sqrt(Avx2Pack a) { return {_mm256_sqrt_pd(a.v)}; }
inline double reduce_add(Avx2Pack a) {
  __m128d lo = _mm256_castpd256_pd128(a.v);
  __m128d hi = _mm256_extractf128_pd(a.v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

struct Avx2U64 {
  static constexpr int width = 4;
  __m256i v;

  static Avx2U64 broadcast(uint64_t x) { return {_mm256_set1_epi64x((long long)x)}; }
  static Avx2U64 load(const uint64_t* p) { return {_mm256_loadu_si256((const __m256i*)p)}; }
  friend Avx2U64 operator+(Avx2U64 a, Avx2U64 b) { return {_mm256_add_epi64(a.v, b.v)}; }
  friend Avx2U64 operator^(Avx2U64 a, Avx2U64 b) { return {_mm256_xor_si256(a.v, b.v)}; }
  friend Avx2U64 operator>>(Avx2U64 a, int s) { return {_mm256_srli_epi64(a.v, s)}; }
  friend Avx2U64 operator<<(Avx2U64 a, int s) { return {_mm256_slli_epi64(a.v, s)}; }
};
// 64x64 -> low 64 multiply out of 32-bit pieces (AVX2 has no mullo_epi64).
inline Avx2U64 mul_lo64(Avx2U64 a, Avx2U64 b) {
  __m256i alo_bhi = _mm256_mul_epu32(a.v, _mm256_srli_epi64(b.v, 32));
  __m256i ahi_blo = _mm256_mul_epu32(_mm256_srli_epi64(a.v, 32), b.v);
  __m256i hi = _mm256_slli_epi64(_mm256_add_epi64(alo_bhi, ahi_blo), 32);
  return {_mm256_add_epi64(_mm256_mul_epu32(a.v, b.v), hi)};
}
inline Avx2U64 or_u(Avx2U64 a, Avx2U64 b) { return {_mm256_or_si256(a.v, b.v)}; }
inline Avx2U64 and_u(Avx2U64 a, Avx2U64 b) { return {_mm256_and_si256(a.v, b.v)}; }
inline Avx2U64 to_u64_bits(Avx2Pack a) { return {_mm256_castpd_si256(a.v)}; }
inline Avx2Pack to_double_bits(Avx2U64 a) { return {_mm256_castsi256_pd(a.v)}; }
inline Avx2Pack u52_to_double(Avx2U64 a) {
  __m256i biased = _mm256_or_si256(a.v, _mm256_set1_epi64x(0x4330000000000000ll));
  return {_mm256_sub_pd(_mm256_castsi256_pd(biased), _mm256_set1_pd(4503599627370496.0))};
}

#endif  // LFLAB_AVX2_TU

}  // namespace lflab::simd

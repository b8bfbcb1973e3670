#pragma once

// exp / log / sincos over a lane pack.  Classic Cody-Waite reduction plus the
// fdlibm kernel polynomials, written branch-free so the scalar and AVX2
// instantiations execute the same rounded operation sequence per lane.
// Accuracy is ~2 ulp, verified against libm in the tests.
//
// sincos assumes |x| <= 2^19 * pi/2 (one-round 3-term reduction); every call
// site in this project stays far below that.

#include "lflab/simd/vec.hpp"

namespace lflab::simd {

namespace detail {
constexpr double kMagic52 = 6755399441055744.0;  // 2^52 + 2^51
}

// 2^n for integral-valued double lanes n in [-1021, 1023].
template <class P, class U>
inline P pow2_int(P n) {
  P z = n + P::broadcast(detail::kMagic52);
  U bits = to_u64_bits(z);
  // low 52 bits now hold n + 2^51; rebias to an IEEE exponent field
  U e = and_u(bits, U::broadcast(0xFFFFFFFFFFFFFull));
  e = e + U::broadcast((uint64_t)1023 - (1ull << 51));
  return to_double_bits(e << 52);
}

template <class P, class U>
inline P vexp(P x) {
  const P invln2 = P::broadcast(1.44269504088896338700e+00);
  const P ln2hi = P::broadcast(6.93147180369123816490e-01);
  const P ln2lo = P::broadcast(1.90821492927058770002e-10);

  P n = round_nearest(x * invln2);
  P nc = min(max(n, P::broadcast(-1021.0)), P::broadcast(1023.0));
  P r = fma(n, -ln2hi, x);
  r = fma(n, -ln2lo, r);

  // e^r on |r| <= ln2/2 + clamp slack, Taylor to degree 13
  P p = P::broadcast(1.0 / 6227020800.0);  // 1/13!
  p = fma(p, r, P::broadcast(1.0 / 479001600.0));
  p = fma(p, r, P::broadcast(1.0 / 39916800.0));
  p = fma(p, r, P::broadcast(1.0 / 3628800.0));
  p = fma(p, r, P::broadcast(1.0 / 362880.0));
  p = fma(p, r, P::broadcast(1.0 / 40320.0));
  p = fma(p, r, P::broadcast(1.0 / 5040.0));
  p = fma(p, r, P::broadcast(1.0 / 720.0));
  p = fma(p, r, P::broadcast(1.0 / 120.0));
  p = fma(p, r, P::broadcast(1.0 / 24.0));
  p = fma(p, r, P::broadcast(1.0 / 6.0));
  p = fma(p, r, P::broadcast(0.5));
  p = fma(p, r, P::broadcast(1.0));
  p = fma(p, r, P::broadcast(1.0));

  P y = p * pow2_int<P, U>(nc);
  // saturate out-of-range inputs
  y = blend(cmp_lt(x, P::broadcast(-708.0)), P::zero(), y);
  y = blend(cmp_gt(x, P::broadcast(709.7)), P::broadcast(1.0 / 0.0), y);
  return y;
}

template <class P, class U>
inline P vlog(P x) {
  const P ln2hi = P::broadcast(6.93147180369123816490e-01);
  const P ln2lo = P::broadcast(1.90821492927058770002e-10);
  const P sqrt2 = P::broadcast(1.41421356237309514547);

  U bits = to_u64_bits(x);
  U ebits = bits >> 52;
  P e = u52_to_double(ebits) - P::broadcast(1023.0);
  U mbits = or_u(and_u(bits, U::broadcast(0xFFFFFFFFFFFFFull)),
                 U::broadcast(0x3FF0000000000000ull));
  P m = to_double_bits(mbits);  // in [1, 2)
  P adj = cmp_ge(m, sqrt2);
  m = blend(adj, m * P::broadcast(0.5), m);
  e = e + and_bits(adj, P::broadcast(1.0));

  P f = m - P::broadcast(1.0);
  P s = f / (P::broadcast(2.0) + f);
  P z = s * s;
  P w = z * z;
  P t1 = w * fma(w, fma(w, P::broadcast(1.531383769920937332e-01),
                        P::broadcast(2.222219843214978396e-01)),
                 P::broadcast(3.999999999940941908e-01));
  P t2 = z * fma(w, fma(w, fma(w, P::broadcast(1.479819860511658591e-01),
                               P::broadcast(1.818357216161805012e-01)),
                        P::broadcast(2.857142874366239149e-01)),
                 P::broadcast(6.666666666666735130e-01));
  P R = t1 + t2;
  P hfsq = P::broadcast(0.5) * f * f;
  // e*ln2hi - ((hfsq - (s*(hfsq+R) + e*ln2lo)) - f)
  P inner = fma(s, hfsq + R, e * ln2lo);
  return fma(e, ln2hi, f - (hfsq - inner));
}

template <class P, class U>
inline void vsincos(P x, P& sn, P& cs) {
  const P twooverpi = P::broadcast(6.36619772367581382433e-01);
  const P pio2_1 = P::broadcast(1.57079632673412561417e+00);
  const P pio2_1t = P::broadcast(6.07710050650619224932e-11);

  P fn = round_nearest(x * twooverpi);
  P r = fma(fn, -pio2_1, x);
  r = fma(fn, -pio2_1t, r);

  P z = r * r;
  // fdlibm kernel sin
  P ps = P::broadcast(1.58969099521155010221e-10);
  ps = fma(ps, z, P::broadcast(-2.50507602534068634195e-08));
  ps = fma(ps, z, P::broadcast(2.75573137070700676789e-06));
  ps = fma(ps, z, P::broadcast(-1.98412698298579493134e-04));
  ps = fma(ps, z, P::broadcast(8.33333333332248946124e-03));
  ps = fma(ps, z, P::broadcast(-1.66666666666666324348e-01));
  P ksin = fma(r * z, ps, r);
  // fdlibm kernel cos
  P pc = P::broadcast(-1.13596475577881948265e-11);
  pc = fma(pc, z, P::broadcast(2.08757232129817482790e-09));
  pc = fma(pc, z, P::broadcast(-2.75573143513906633035e-07));
  pc = fma(pc, z, P::broadcast(2.48015872894767294178e-05));
  pc = fma(pc, z, P::broadcast(-1.38888888888741095749e-03));
  pc = fma(pc, z, P::broadcast(4.16666666666666019037e-02));
  P kcos = fma(z * z, pc, fma(z, P::broadcast(-0.5), P::broadcast(1.0)));

  // quadrant from low two bits of fn
  U q = and_u(to_u64_bits(fn + P::broadcast(detail::kMagic52)), U::broadcast(3));
  U b0 = and_u(q, U::broadcast(1));
  U b1 = and_u(q >> 1, U::broadcast(1));
  const U ones = U::broadcast(~0ull);
  P swap_m = to_double_bits(mul_lo64(b0, ones));
  P sneg_m = to_double_bits(mul_lo64(b1, ones));
  P cneg_m = to_double_bits(mul_lo64(b0 ^ b1, ones));

  P s0 = blend(swap_m, kcos, ksin);
  P c0 = blend(swap_m, ksin, kcos);
  const P signbit = P::broadcast(-0.0);
  sn = xor_bits(s0, and_bits(sneg_m, signbit));
  cs = xor_bits(c0, and_bits(cneg_m, signbit));
}

}  // namespace lflab::simd

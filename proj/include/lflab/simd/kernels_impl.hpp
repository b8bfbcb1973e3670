#pragma once

// Template bodies behind KernelApi.  Included only by kernels_scalar.cpp and
// kernels_avx2.cpp.  Terms are accumulated into 8 virtual lanes regardless of
// pack width (lane j always receives the terms with index = j mod 8, in index
// order) and the lanes are combined by a fixed pairwise tree, so both
// instantiations produce the same bits.

#include <cstring>

#include "lflab/simd/kernels.hpp"
#include "lflab/simd/rng.hpp"
#include "lflab/simd/vec.hpp"
#include "lflab/simd/vecmath.hpp"

namespace lflab::simd {

template <class P, class U>
struct KernelImpl {
  static constexpr int W = P::width;
  static constexpr int LANES = 8;
  static constexpr int GROUPS = LANES / W;

  static double combine(const double* lane) {
    return ((lane[0] + lane[1]) + (lane[2] + lane[3])) +
           ((lane[4] + lane[5]) + (lane[6] + lane[7]));
  }

  static void map_exp(const double* x, double* y, size_t n) {
    size_t i = 0;
    for (; i + W <= n; i += W) vexp<P, U>(P::load(x + i)).store(y + i);
    if (i < n) {
      double xb[W] = {0}, yb[W];
      std::memcpy(xb, x + i, (n - i) * sizeof(double));
      vexp<P, U>(P::load(xb)).store(yb);
      std::memcpy(y + i, yb, (n - i) * sizeof(double));
    }
  }

  static void map_log(const double* x, double* y, size_t n) {
    size_t i = 0;
    for (; i + W <= n; i += W) vlog<P, U>(P::load(x + i)).store(y + i);
    if (i < n) {
      double xb[W], yb[W];
      for (int k = 0; k < W; ++k) xb[k] = 1.0;
      std::memcpy(xb, x + i, (n - i) * sizeof(double));
      vlog<P, U>(P::load(xb)).store(yb);
      std::memcpy(y + i, yb, (n - i) * sizeof(double));
    }
  }

  static void map_sincos(const double* x, double* s, double* c, size_t n) {
    size_t i = 0;
    for (; i + W <= n; i += W) {
      P sn, cs;
      vsincos<P, U>(P::load(x + i), sn, cs);
      sn.store(s + i);
      cs.store(c + i);
    }
    if (i < n) {
      double xb[W] = {0}, sb[W], cb[W];
      std::memcpy(xb, x + i, (n - i) * sizeof(double));
      P sn, cs;
      vsincos<P, U>(P::load(xb), sn, cs);
      sn.store(sb);
      cs.store(cb);
      std::memcpy(s + i, sb, (n - i) * sizeof(double));
      std::memcpy(c + i, cb, (n - i) * sizeof(double));
    }
  }

  static std::complex<double> dirichlet_sum(double sigma, double t, const double* logn,
                                            const double* cre, const double* cim, size_t n) {
    P are[GROUPS], aim[GROUPS];
    for (int g = 0; g < GROUPS; ++g) {
      are[g] = P::zero();
      aim[g] = P::zero();
    }
    const P msig = P::broadcast(-sigma);
    const P tt = P::broadcast(t);
    const P one = P::broadcast(1.0);

    auto block = [&](const double* L, const double* wr_p, const double* wi_p) {
      for (int g = 0; g < GROUPS; ++g) {
        P L_ = P::load(L + g * W);
        P a = vexp<P, U>(msig * L_);
        P sn, cs;
        vsincos<P, U>(tt * L_, sn, cs);
        P wr = wr_p ? P::load(wr_p + g * W) : one;
        P wi = wi_p ? P::load(wi_p + g * W) : P::zero();
        P tre = fma(wr, cs, wi * sn);
        P tim = fma(wi, cs, -(wr * sn));
        are[g] = fma(a, tre, are[g]);
        aim[g] = fma(a, tim, aim[g]);
      }
    };

    size_t i = 0;
    for (; i + LANES <= n; i += LANES)
      block(logn + i, cre ? cre + i : nullptr, cim ? cim + i : nullptr);
    if (i < n) {
      double Lb[LANES] = {0}, wrb[LANES] = {0}, wib[LANES] = {0};
      size_t m = n - i;
      std::memcpy(Lb, logn + i, m * sizeof(double));
      if (cre)
        std::memcpy(wrb, cre + i, m * sizeof(double));
      else
        for (size_t k = 0; k < m; ++k) wrb[k] = 1.0;
      if (cim) std::memcpy(wib, cim + i, m * sizeof(double));
      block(Lb, wrb, wib);
    }

    double lr[LANES], li[LANES];
    for (int g = 0; g < GROUPS; ++g) {
      are[g].store(lr + g * W);
      aim[g].store(li + g * W);
    }
    return {combine(lr), combine(li)};
  }

  static double pow_sum(double a, const double* logn, const double* w, size_t n) {
    P acc[GROUPS];
    for (int g = 0; g < GROUPS; ++g) acc[g] = P::zero();
    const P ma = P::broadcast(-a);
    const P one = P::broadcast(1.0);

    auto block = [&](const double* L, const double* wp) {
      for (int g = 0; g < GROUPS; ++g) {
        P e = vexp<P, U>(ma * P::load(L + g * W));
        P wv = wp ? P::load(wp + g * W) : one;
        acc[g] = fma(wv, e, acc[g]);
      }
    };

    size_t i = 0;
    for (; i + LANES <= n; i += LANES) block(logn + i, w ? w + i : nullptr);
    if (i < n) {
      double Lb[LANES] = {0}, wb[LANES] = {0};
      size_t m = n - i;
      std::memcpy(Lb, logn + i, m * sizeof(double));
      if (w)
        std::memcpy(wb, w + i, m * sizeof(double));
      else
        for (size_t k = 0; k < m; ++k) wb[k] = 1.0;
      block(Lb, wb);
    }

    double lr[LANES];
    for (int g = 0; g < GROUPS; ++g) acc[g].store(lr + g * W);
    return combine(lr);
  }

  static U hash_v(U x) {
    x = x ^ (x >> 30);
    x = mul_lo64(x, U::broadcast(0xBF58476D1CE4E5B9ull));
    x = x ^ (x >> 27);
    x = mul_lo64(x, U::broadcast(0x94D049BB133111EBull));
    return x ^ (x >> 31);
  }

  static void phase_sincos(uint64_t seed, const uint64_t* pmix, double* c, double* s, size_t n) {
    const U sd = U::broadcast(seed);
    const P twopi = P::broadcast(6.283185307179586476925286766559);
    auto block = [&](const uint64_t* pm, double* cc, double* ss) {
      U h = hash_v(sd ^ U::load(pm));
      P u = u52_to_double(h >> 12) * P::broadcast(0x1p-52);
      P sn, cs;
      vsincos<P, U>(u * twopi, sn, cs);
      cs.store(cc);
      sn.store(ss);
    };
    size_t i = 0;
    for (; i + W <= n; i += W) block(pmix + i, c + i, s + i);
    if (i < n) {
      uint64_t pb[W] = {0};
      double cb[W], sb[W];
      std::memcpy(pb, pmix + i, (n - i) * sizeof(uint64_t));
      block(pb, cb, sb);
      std::memcpy(c + i, cb, (n - i) * sizeof(double));
      std::memcpy(s + i, sb, (n - i) * sizeof(double));
    }
  }

  static std::complex<double> weighted_cplx_sum(const double* c, const double* s,
                                                const double* wre, const double* wim, size_t n) {
    P are[GROUPS], aim[GROUPS];
    for (int g = 0; g < GROUPS; ++g) {
      are[g] = P::zero();
      aim[g] = P::zero();
    }
    auto block = [&](const double* cc, const double* ss, const double* wr_p, const double* wi_p) {
      for (int g = 0; g < GROUPS; ++g) {
        P cv = P::load(cc + g * W), sv = P::load(ss + g * W);
        P wr = P::load(wr_p + g * W);
        P wi = wi_p ? P::load(wi_p + g * W) : P::zero();
        are[g] = are[g] + fma(wr, cv, -(wi * sv));
        aim[g] = aim[g] + fma(wr, sv, wi * cv);
      }
    };
    size_t i = 0;
    for (; i + LANES <= n; i += LANES) block(c + i, s + i, wre + i, wim ? wim + i : nullptr);
    if (i < n) {
      double cb[LANES] = {0}, sb[LANES] = {0}, wrb[LANES] = {0}, wib[LANES] = {0};
      size_t m = n - i;
      std::memcpy(cb, c + i, m * sizeof(double));
      std::memcpy(sb, s + i, m * sizeof(double));
      std::memcpy(wrb, wre + i, m * sizeof(double));
      if (wim) std::memcpy(wib, wim + i, m * sizeof(double));
      block(cb, sb, wrb, wib);
    }
    double lr[LANES], li[LANES];
    for (int g = 0; g < GROUPS; ++g) {
      are[g].store(lr + g * W);
      aim[g].store(li + g * W);
    }
    return {combine(lr), combine(li)};
  }

  static double bs_tail_sum(double z, uint32_t N, uint32_t skip) {
    P acc[GROUPS];
    for (int g = 0; g < GROUPS; ++g) acc[g] = P::zero();
    const P z2 = P::broadcast(z * z);
    const P skipd = P::broadcast(skip ? (double)skip : -1.0);
    const P half = P::broadcast(0.5);

    static const double kIota[8] = {0, 1, 2, 3, 4, 5, 6, 7};
    double base = 1.0;
    uint32_t done = 0;
    while (done < N) {
      double nb[LANES] = {0};
      uint32_t m = N - done < LANES ? N - done : LANES;
      for (uint32_t k = 0; k < m; ++k) nb[k] = base + kIota[k];
      for (int g = 0; g < GROUPS; ++g) {
        P nd = P::load(nb + g * W);
        P t = fma(nd, nd, -z2);
        P term = nd / (t * t);
        // drop padding (n = 0) and the skipped index
        P keep = cmp_gt(nd, half);
        P iseq = and_bits(cmp_ge(nd, skipd), cmp_ge(skipd, nd));
        term = and_bits(term, keep);
        term = blend(iseq, P::zero(), term);
        acc[g] = acc[g] + term;
      }
      base += LANES;
      done += m;
    }
    double lr[LANES];
    for (int g = 0; g < GROUPS; ++g) acc[g].store(lr + g * W);
    return combine(lr);
  }

  static std::complex<double> phi_quad_sum(const double* cosn, const double* sinn, size_t m,
                                           double r_sigma, const PhiCoeffs& pc) {
    P are[GROUPS], aim[GROUPS];
    for (int g = 0; g < GROUPS; ++g) {
      are[g] = P::zero();
      aim[g] = P::zero();
    }
    const P r = P::broadcast(r_sigma);
    const P twopi = P::broadcast(6.283185307179586476925286766559);

    auto block = [&](const double* cc, const double* ss, int valid) {
      for (int g = 0; g < GROUPS; ++g) {
        P ure = P::load(cc + g * W) * r;
        P uim = P::load(ss + g * W) * r;
        P phi = P::zero();
        for (int j = 0; j < pc.J; ++j) {
          const double* br = pc.bre + (size_t)j * pc.K;
          const double* bi = pc.bim + (size_t)j * pc.K;
          P gre = P::broadcast(br[pc.K - 1]);
          P gim = P::broadcast(bi[pc.K - 1]);
          for (int k = pc.K - 2; k >= 0; --k) {
            P nre = fma(gre, ure, -(gim * uim)) + P::broadcast(br[k]);
            P nim = fma(gre, uim, gim * ure) + P::broadcast(bi[k]);
            gre = nre;
            gim = nim;
          }
          P hre = fma(gre, ure, -(gim * uim));
          P him = fma(gre, uim, gim * ure);
          phi = fma(P::broadcast(pc.x[j]), hre, phi);
          phi = fma(P::broadcast(pc.y[j]), him, phi);
        }
        P sn, cs;
        vsincos<P, U>(phi * twopi, sn, cs);
        if (valid < LANES) {
          static const double kIota[8] = {0, 1, 2, 3, 4, 5, 6, 7};
          P idx = P::load(kIota + g * W);
          P keep = cmp_lt(idx, P::broadcast((double)(valid - g * W)));
          cs = and_bits(cs, keep);
          sn = and_bits(sn, keep);
        }
        are[g] = are[g] + cs;
        aim[g] = aim[g] + sn;
      }
    };

    size_t i = 0;
    for (; i + LANES <= m; i += LANES) block(cosn + i, sinn + i, LANES);
    if (i < m) {
      double cb[LANES] = {0}, sb[LANES] = {0};
      size_t k = m - i;
      std::memcpy(cb, cosn + i, k * sizeof(double));
      std::memcpy(sb, sinn + i, k * sizeof(double));
      block(cb, sb, (int)k);
    }
    double lr[LANES], li[LANES];
    for (int g = 0; g < GROUPS; ++g) {
      are[g].store(lr + g * W);
      aim[g].store(li + g * W);
    }
    return {combine(lr), combine(li)};
  }

  static void boxmuller(uint64_t seed, uint64_t base, double* out, size_t n) {
    const U sd = U::broadcast(seed);
    const P twopi = P::broadcast(6.283185307179586476925286766559);
    const U c1 = U::broadcast(rng::kGolden);
    const U c2 = U::broadcast(0x6A09E667F3BCC909ull);
    size_t pairs = n / 2;
    size_t q = 0;
    while (q < pairs) {
      size_t batch = pairs - q < (size_t)W ? pairs - q : (size_t)W;
      uint64_t ctr1[W], ctr2[W];
      for (size_t k = 0; k < (size_t)W; ++k) {
        size_t qq = q + (k < batch ? k : batch - 1);
        ctr1[k] = base + 2 * qq;
        ctr2[k] = base + 2 * qq + 1;
      }
      // premix(ctr) then mix with the seed, as in rng::unit_from
      U h1 = hash_v(sd ^ hash_v(mul_lo64(U::load(ctr1), c1) + c2));
      U h2 = hash_v(sd ^ hash_v(mul_lo64(U::load(ctr2), c1) + c2));
      P u1 = u52_to_double(h1 >> 12) * P::broadcast(0x1p-52) + P::broadcast(0x1p-53);
      P u2 = u52_to_double(h2 >> 12) * P::broadcast(0x1p-52);
      P rad = sqrt(P::broadcast(-2.0) * vlog<P, U>(u1));
      P sn, cs;
      vsincos<P, U>(u2 * twopi, sn, cs);
      double a[W], b[W];
      (rad * cs).store(a);
      (rad * sn).store(b);
      for (size_t k = 0; k < batch; ++k) {
        out[2 * (q + k)] = a[k];
        out[2 * (q + k) + 1] = b[k];
      }
      q += batch;
    }
  }

  static constexpr KernelApi api(const char* name) {
    return KernelApi{name,        map_exp,  map_log,           map_sincos,  dirichlet_sum,
                     pow_sum,     phase_sincos, weighted_cplx_sum, bs_tail_sum, phi_quad_sum,
                     boxmuller};
  }
};

}  // namespace lflab::simd

#pragma once

// Runtime-dispatched numeric kernels.  Each entry has a scalar reference
// build and an AVX2 build instantiated from the same template
// (kernels_impl.hpp); kernels() returns the widest lane the CPU supports
// unless LFLAB_SIMD=scalar overrides it.  The two builds are equivalence-
// tested lane-for-lane in tests/test_simd.cpp.

#include <complex>
#include <cstddef>
#include <cstdint>

namespace lflab::simd {

// coefficients of the phase-quadrature integrand for one prime:
// g_j(u) = sum_{k=1..K} beta_j(p^k) u^k, J functions, row-major [J][K]
struct PhiCoeffs {
  int J = 0;
  int K = 0;
  const double* bre = nullptr;
  const double* bim = nullptr;
  const double* x = nullptr;  // J Fourier coordinates
  const double* y = nullptr;
};

struct KernelApi {
  const char* name;

  void (*map_exp)(const double* x, double* y, size_t n);
  void (*map_log)(const double* x, double* y, size_t n);
  void (*map_sincos)(const double* x, double* s, double* c, size_t n);

  // sum c_k * exp(-(sigma + i t) * logn_k); cim may be null (real coeffs),
  // cre may be null (unit coeffs)
  std::complex<double> (*dirichlet_sum)(double sigma, double t, const double* logn,
                                        const double* cre, const double* cim, size_t n);

  // sum w_k * exp(-a * logn_k); w may be null (unit weights)
  double (*pow_sum)(double a, const double* logn, const double* w, size_t n);

  // c_k + i s_k = exp(2 pi i U_k), U_k = unit(seed, pmix_k)
  void (*phase_sincos)(uint64_t seed, const uint64_t* pmix, double* c, double* s, size_t n);

  // sum (wre_k + i wim_k) * (c_k + i s_k); wim may be null
  std::complex<double> (*weighted_cplx_sum)(const double* c, const double* s,
                                            const double* wre, const double* wim, size_t n);

  // sum_{n=1..N, n != skip} n / (n^2 - z^2)^2   (skip = 0 keeps all terms)
  double (*bs_tail_sum)(double z, uint32_t N, uint32_t skip);

  // sum over nodes of exp(2 pi i sum_j (x_j Re g_j(u_m) + y_j Im g_j(u_m))),
  // u_m = r_sigma * (cos_m + i sin_m)
  std::complex<double> (*phi_quad_sum)(const double* cosn, const double* sinn, size_t m,
                                       double r_sigma, const PhiCoeffs& pc);

  // n standard normals (n even), counters base..base+n-1
  void (*boxmuller)(uint64_t seed, uint64_t base, double* out, size_t n);
};

const KernelApi& kernels_scalar();
const KernelApi* kernels_avx2();  // null when unsupported
const KernelApi& kernels();       // dispatched

}  // namespace lflab::simd

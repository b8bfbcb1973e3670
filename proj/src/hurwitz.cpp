#include "lflab/hurwitz.hpp"

#include <cmath>

#include "lflab/errors.hpp"
#include "lflab/simd/kernels.hpp"

namespace lflab {

namespace {

constexpr int K = 12;  // Bernoulli correction order 2K
const double kB2k[13] = {
    0.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};
const double kB26 = 8553103.0 / 6.0;

double factln(int n) { return std::lgamma((double)n + 1.0); }

// log of |B_{2K+2}/(2K+2)!|
const double kTailCoeffLog = std::log(kB26) - factln(2 * K + 2);

}  // namespace

HurwitzZeta::HurwitzZeta(double a) : a_(a) {
  if (!(a > 0.0 && a <= 1.0)) throw Error("hurwitz shift must be in (0,1]");
}

void HurwitzZeta::ensure(size_t n) const {
  size_t old = log_na_.size();
  if (old >= n) return;
  log_na_.resize(n);
  for (size_t i = old; i < n; ++i) log_na_[i] = std::log((double)i + a_);
}

std::complex<double> HurwitzZeta::eval(std::complex<double> s, double precision) const {
  if (s == std::complex<double>(1.0, 0.0)) throw PoleError("hurwitz zeta pole at s = 1");
  const double sig = s.real(), t = s.imag();

  // remainder bound after the 2K-th Bernoulli term:
  //   |B_{2K+2}/(2K+2)!| * |s(s+1)...(s+2K)| * (N+a)^{-sig-2K-1} * |s+2K+1|/(sig+2K+1)
  double logprod = 0.0;
  for (int j = 0; j <= 2 * K; ++j) logprod += 0.5 * std::log(std::norm(s + (double)j));
  double logfac =
      kTailCoeffLog + logprod + std::log(std::abs(s + (double)(2 * K + 1)) / (sig + 2 * K + 1));

  size_t N = (size_t)std::max(24.0, std::ceil(1.2 * std::fabs(t)));
  auto bound = [&](size_t n) {
    return std::exp(logfac - (sig + 2 * K + 1) * std::log((double)n + a_));
  };
  while (bound(N) > precision) {
    N *= 2;
    if (N > kTermCap)
      throw PrecisionUnreachable("hurwitz zeta: term cap exceeded for s = (" +
                                 std::to_string(sig) + "," + std::to_string(t) + ")");
  }

  ensure(N);
  std::complex<double> sum =
      simd::kernels().dirichlet_sum(sig, t, log_na_.data(), nullptr, nullptr, N);

  const double Na = (double)N + a_;
  const std::complex<double> lNa(std::log(Na), 0.0);
  const std::complex<double> Npow = std::exp(-s * lNa);  // (N+a)^{-s}
  sum += Npow * Na / (s - 1.0);
  sum += 0.5 * Npow;

  // Bernoulli tail: T_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (N+a)^{-s-2k+1}
  std::complex<double> rising = s;                 // s ... (s+2k-2)
  std::complex<double> powNa = Npow / Na;          // (N+a)^{-s-1}
  double fac = 2.0;                                // (2k)!
  for (int k = 1; k <= K; ++k) {
    sum += kB2k[k] / fac * rising * powNa;
    if (k < K) {
      rising *= (s + (double)(2 * k - 1)) * (s + (double)(2 * k));
      powNa /= Na * Na;
      fac *= (double)(2 * k + 1) * (double)(2 * k + 2);
    }
  }
  return sum;
}

}  // namespace lflab

#pragma once

#include <complex>
#include <vector>

namespace lflab {

// Hurwitz zeta(s, a) for 0 < a <= 1, Re(s) > 0 (s != 1), by Euler-Maclaurin:
//   sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s/2 + Bernoulli correction.
// N starts at max(24, 1.2|Im s|) and grows until the rigorous remainder bound
// meets the requested precision; throws PrecisionUnreachable past the cap.
//
// Instances cache the log(n+a) table and are not thread-safe; eval.cpp keeps
// one per thread.
class HurwitzZeta {
 public:
  explicit HurwitzZeta(double a);

  std::complex<double> eval(std::complex<double> s, double precision) const;

  double shift() const { return a_; }
  static constexpr size_t kTermCap = 1'000'000;

 private:
  double a_;
  mutable std::vector<double> log_na_;  // log(n + a), grown on demand
  void ensure(size_t n) const;
};

}  // namespace lflab

#pragma once

#include <functional>

#include "lflab/lfunc.hpp"

namespace lflab {

using AnalyticFn = std::function<Cplx(Cplx)>;

// Pointwise L(s) through the Hurwitz decomposition
//   L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q),
// absolute error <= precision.  Throws PoleError at s = 1 for zeta and
// principal characters, PrecisionUnreachable past the term cap.
Cplx eval_L(const LFunctionSpec& spec, Cplx s, double precision = 1e-12);

// log|L| + i arg L with arg continued along the horizontal ray from +infty.
// Throws ZeroOnPathError when |L| collapses on the ray; the caller may
// perturb t (sample_L_vector retries at t + 1e-9).
Cplx eval_logL(const LFunctionSpec& spec, Cplx s, double precision = 1e-12);

// Truncated Dirichlet polynomial R_{L,Y}(s) = sum_{p^n <= Y} beta(p^n) p^{-ns}
Cplx dirichlet_poly(const LFunctionSpec& spec, Cplx s, double Y);

// sum_{p <= x} beta_j(p) conj(beta_k(p)) / p
Cplx selberg_sum(const LFunctionSpec& j, const LFunctionSpec& k, double x);

// sum_{p <= cutoff} beta_j(p) conj(beta_k(p)) p^{-2 sigma}
Cplx prime_sum_2sigma(const LFunctionSpec& j, const LFunctionSpec& k, double sigma,
                      double cutoff);

// companion model for the diagonal growth: delta_jk xi_j log(1/(sigma-1/2))
// plus a constant fitted over a sigma grid at the same cutoff
struct Soc2Diagnostic {
  Cplx sum;
  double model = 0;
  double fitted_c = 0;
};
Soc2Diagnostic soc2_diagnostic(const LFunctionSpec& j, const LFunctionSpec& k, double sigma,
                               double cutoff);

// sum_{p > Y} beta_j(p) conj(beta_k(p)) p^{-a}: primes up to the shared table
// limit exactly, then the integral remainder xi_j E1((a-1) log P) on the
// diagonal (off-diagonal remainders are dropped; orthonormality makes them
// vanish in the mean)
Cplx prime_tail_sum(const LFunctionSpec& j, const LFunctionSpec& k, double a, double Y);

// sum over prime powers p^n in (Y, Y2] of |beta(p^n)|^2 p^{-2 n sigma}, exact
double tail_power_sum_exact(const LFunctionSpec& spec, double sigma, double Y, double Y2);

// full tail variance sum_{p^n > Y} |beta(p^n)|^2 p^{-2 n sigma}
double tail_variance(const LFunctionSpec& spec, double sigma, double Y);

// F(s) = sum_j b_j L_j(s), member errors add to J * precision
Cplx eval_F(const LinearCombination& comb, Cplx s, double precision = 1e-12);

AnalyticFn make_F(const LinearCombination& comb, double precision = 1e-12);

// Continuous log L along a vertical line.  The branch is anchored by a
// horizontal walk at the first point; advancing tracks it in t.  Valid while
// the swept region {Re >= sigma} stays zero-free, which holds for the
// concrete members here (any violation trips the step control and throws).
class LogLTracker {
 public:
  LogLTracker(const LFunctionSpec& spec, double sigma, double t0, double precision = 1e-11);
  Cplx value() const { return logcur_; }
  double t() const { return tcur_; }
  Cplx advance(double t);

 private:
  LFunctionSpec spec_;
  double sigma_, prec_, tcur_;
  Cplx logcur_, Lcur_;
};

}  // namespace lflab

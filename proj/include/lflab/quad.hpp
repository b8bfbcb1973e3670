#pragma once

#include <functional>
#include <vector>

namespace lflab {

using RealFn = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) to absolute tolerance tol.  Throws
// QuadratureNonconvergence past max_depth.
double integrate(const RealFn& f, double a, double b, double tol, int max_depth = 28);

// tanh-sinh rule on (a,b); tolerates integrable endpoint singularities
double tanh_sinh(const RealFn& f, double a, double b, double tol, int max_level = 12);

// Gauss-Hermite rule: sum_i w_i f(x_i) approximates int e^{-x^2} f(x) dx
struct GaussHermite {
  std::vector<double> x, w;
  explicit GaussHermite(int order);
};

// m_k(c; xi) = int_{-inf}^{c} u^k e^{-u^2/xi} du for k = 0..kmax (recursive)
void incomplete_moments(double c, double xi, int kmax, double* out);

// E1 exponential integral (wrapper so callers avoid the GSL header)
double expint_e1(double x);

}  // namespace lflab

#include "lflab/eval.hpp"

#include <gsl/gsl_sf_expint.h>
#include <gsl/gsl_sf_psi.h>

#include <cmath>
#include <map>
#include <memory>
#include <numeric>

#include "lflab/errors.hpp"
#include "lflab/hurwitz.hpp"
#include "lflab/simd/kernels.hpp"

namespace lflab {

namespace {

HurwitzZeta& hurwitz_for(uint32_t num, uint32_t den) {
  thread_local std::map<uint64_t, std::unique_ptr<HurwitzZeta>> cache;
  uint64_t key = (uint64_t)den << 32 | num;
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<HurwitzZeta>((double)num / (double)den)).first;
  return *it->second;
}

constexpr double kZeroFloor = 1e-13;

}  // namespace

Cplx eval_L(const LFunctionSpec& spec, Cplx s, double precision) {
  if (s.real() <= 0.0) throw Error("eval_L needs Re(s) > 0");
  if (spec.kind == LFunctionSpec::Kind::Zeta) {
    if (s == Cplx(1.0, 0.0)) throw PoleError("zeta pole at s = 1");
    return hurwitz_for(1, 1).eval(s, precision);
  }
  const auto& chi = spec.chi;
  const uint32_t q = chi.modulus;
  if (q == 1) {
    if (s == Cplx(1.0, 0.0)) throw PoleError("zeta pole at s = 1");
    return hurwitz_for(1, 1).eval(s, precision);
  }
  if (s == Cplx(1.0, 0.0)) {
    if (chi.is_principal()) throw PoleError("principal L pole at s = 1");
    // the Hurwitz poles cancel analytically; take the limit directly
    Cplx sum = 0;
    for (uint32_t a = 1; a < q; ++a)
      if (chi.angle_num[a % q] >= 0) sum += chi(a) * gsl_sf_psi((double)a / (double)q);
    return -sum / (double)q;
  }
  double qs = std::pow((double)q, -s.real());
  double per_term = precision / (qs * (double)q + 1e-300);
  Cplx sum = 0;
  for (uint32_t a = 1; a <= q; ++a) {
    if (chi.angle_num[a % q] < 0) continue;  // chi(a) = 0
    sum += chi(a) * hurwitz_for(a, q).eval(s, per_term);
  }
  return std::exp(-s * std::log((double)q)) * sum;
}

namespace {

// principal log at the anchor abscissa: |log L| < 0.1 for sigma >= 4
constexpr double kAnchorSigma = 4.0;

Cplx anchor_log(const LFunctionSpec& spec, double t, double prec) {
  Cplx L = eval_L(spec, Cplx(kAnchorSigma, t), prec);
  return std::log(L);
}

// walk log L from (sigma_from, t) to (sigma_to, t), branch-tracked
Cplx walk_horizontal(const LFunctionSpec& spec, double t, double sigma_from, double sigma_to,
                     Cplx log_from, double prec) {
  double cur = sigma_from;
  Cplx logcur = log_from;
  Cplx Lcur = std::exp(log_from);
  double h = 0.5;
  const double hmin = 1e-9;
  while (cur > sigma_to) {
    double next = std::max(sigma_to, cur - h);
    Cplx Lnext = eval_L(spec, Cplx(next, t), prec);
    if (std::abs(Lnext) < kZeroFloor)
      throw ZeroOnPathError("log L: function collapses on the ray at sigma = " +
                                std::to_string(next),
                            t);
    Cplx delta = std::log(Lnext / Lcur);
    if (std::abs(delta.imag()) > 1.2) {
      h *= 0.5;
      if (h < hmin)
        throw ZeroOnPathError("log L: cannot resolve branch near sigma = " + std::to_string(cur),
                              t);
      continue;
    }
    logcur += delta;
    Lcur = Lnext;
    cur = next;
    if (std::abs(delta.imag()) < 0.25) h = std::min(h * 1.7, 0.5);
  }
  return logcur;
}

}  // namespace

Cplx eval_logL(const LFunctionSpec& spec, Cplx s, double precision) {
  if (s.real() <= 0.5) throw Error("eval_logL needs Re(s) > 1/2");
  double iprec = std::min(1e-13, precision * 1e-2);
  // |log L| < 0.1 right of the anchor abscissa, so the principal branch is
  // already the continued one there
  if (s.real() >= kAnchorSigma) return std::log(eval_L(spec, s, iprec));
  Cplx lg = anchor_log(spec, s.imag(), iprec);
  return walk_horizontal(spec, s.imag(), kAnchorSigma, s.real(), lg, iprec);
}

Cplx dirichlet_poly(const LFunctionSpec& spec, Cplx s, double Y) {
  if (Y < 2.0) throw ConfigError("dirichlet_poly needs Y >= 2");
  const double logY = std::log(Y) + 1e-12;
  auto data = SpecPrimeData::get(spec, (uint64_t)Y);
  const PrimeTable& pt = *data->table;
  size_t n1 = pt.count_below((uint64_t)Y);

  Cplx total = simd::kernels().dirichlet_sum(s.real(), s.imag(), pt.logp.data(),
                                             data->bre.data(),
                                             data->real_coeffs ? nullptr : data->bim.data(), n1);

  // prime powers p^n <= Y, n >= 2
  std::vector<double> cre, cim;
  for (int n = 2; std::pow(2.0, n) <= Y + 1e-9; ++n) {
    size_t cnt = 0;
    while (cnt < pt.primes.size() && n * pt.logp[cnt] <= logY) ++cnt;
    if (cnt == 0) break;
    cre.resize(cnt);
    cim.resize(cnt);
    for (size_t i = 0; i < cnt; ++i) {
      Cplx b = spec.euler_log_coeff(pt.primes[i], n);
      cre[i] = b.real();
      cim[i] = b.imag();
    }
    total += simd::kernels().dirichlet_sum(n * s.real(), n * s.imag(), pt.logp.data(), cre.data(),
                                           cim.data(), cnt);
  }
  return total;
}

namespace {

// coefficient products w = beta_j(p) conj(beta_k(p)) against a shared table
void pair_products(const LFunctionSpec& j, const LFunctionSpec& k, uint64_t limit,
                   std::vector<double>& wre, std::vector<double>& wim, size_t n) {
  auto dj = SpecPrimeData::get(j, limit);
  auto dk = SpecPrimeData::get(k, limit);
  wre.resize(n);
  wim.resize(n);
  for (size_t i = 0; i < n; ++i) {
    double a = dj->bre[i], b = dj->bim[i], c = dk->bre[i], d = dk->bim[i];
    wre[i] = a * c + b * d;
    wim[i] = b * c - a * d;
  }
}

}  // namespace

Cplx selberg_sum(const LFunctionSpec& j, const LFunctionSpec& k, double x) {
  if (x < 2.0) throw ConfigError("selberg_sum needs x >= 2");
  const PrimeTable& pt = PrimeTable::shared((uint64_t)x);
  size_t n = pt.count_below((uint64_t)x);
  std::vector<double> wre, wim;
  pair_products(j, k, (uint64_t)x, wre, wim, n);
  return simd::kernels().dirichlet_sum(1.0, 0.0, pt.logp.data(), wre.data(), wim.data(), n);
}

Cplx prime_sum_2sigma(const LFunctionSpec& j, const LFunctionSpec& k, double sigma,
                      double cutoff) {
  if (!(sigma > 0.5 && sigma <= 1.0)) throw ConfigError("prime_sum_2sigma needs 1/2 < sigma <= 1");
  const PrimeTable& pt = PrimeTable::shared((uint64_t)cutoff);
  size_t n = pt.count_below((uint64_t)cutoff);
  std::vector<double> wre, wim;
  pair_products(j, k, (uint64_t)cutoff, wre, wim, n);
  return simd::kernels().dirichlet_sum(2.0 * sigma, 0.0, pt.logp.data(), wre.data(), wim.data(),
                                       n);
}

Soc2Diagnostic soc2_diagnostic(const LFunctionSpec& j, const LFunctionSpec& k, double sigma,
                               double cutoff) {
  Soc2Diagnostic d;
  d.sum = prime_sum_2sigma(j, k, sigma, cutoff);
  bool diag = j.same_as(k);
  double xi = diag ? j.xi : 0.0;
  double acc = 0;
  int m = 0;
  for (double sg = 0.51; sg <= 0.601; sg += 0.01) {
    double v = prime_sum_2sigma(j, k, sg, cutoff).real();
    acc += v - xi * std::log(1.0 / (sg - 0.5));
    ++m;
  }
  d.fitted_c = acc / m;
  d.model = xi * std::log(1.0 / (sigma - 0.5)) + d.fitted_c;
  return d;
}

Cplx prime_tail_sum(const LFunctionSpec& j, const LFunctionSpec& k, double a, double Y) {
  if (a <= 1.0) throw Error("prime_tail_sum needs exponent > 1");
  uint64_t P = std::max<uint64_t>((uint64_t)Y, 10'000'000ull);
  const PrimeTable& pt = PrimeTable::shared(P);
  P = pt.limit;
  size_t lo = pt.count_below((uint64_t)Y);
  size_t hi = pt.primes.size();
  std::vector<double> wre, wim;
  pair_products(j, k, P, wre, wim, hi);
  Cplx head = simd::kernels().dirichlet_sum(a, 0.0, pt.logp.data() + lo, wre.data() + lo,
                                            wim.data() + lo, hi - lo);
  if (j.same_as(k)) head += j.xi * gsl_sf_expint_E1((a - 1.0) * std::log((double)P));
  return head;
}

double tail_power_sum_exact(const LFunctionSpec& spec, double sigma, double Y, double Y2) {
  if (Y2 <= Y) return 0.0;
  const PrimeTable& pt = PrimeTable::shared((uint64_t)Y2);
  double total = 0;
  const double lY = std::log(Y), lY2 = std::log(Y2) + 1e-12;
  for (int n = 1; n * std::log(2.0) <= lY2; ++n) {
    // p^n in (Y, Y2]
    size_t i0 = 0, i1 = 0;
    while (i1 < pt.primes.size() && n * pt.logp[i1] <= lY2) ++i1;
    while (i0 < i1 && n * pt.logp[i0] <= lY + 1e-12) ++i0;
    for (size_t i = i0; i < i1; ++i) {
      double b = std::norm(spec.euler_log_coeff(pt.primes[i], n));
      total += b * std::exp(-2.0 * n * sigma * pt.logp[i]);
    }
  }
  return total;
}

double tail_variance(const LFunctionSpec& spec, double sigma, double Y) {
  if (sigma <= 0.5) throw Error("tail_variance needs sigma > 1/2");
  uint64_t P = 10'000'000ull;
  if ((uint64_t)Y > P) P = (uint64_t)Y;
  const PrimeTable& pt = PrimeTable::shared(P);
  double head = prime_tail_sum(spec, spec, 2.0 * sigma, Y).real();
  // prime powers n >= 2 with p^n > Y (k=1 part handled above)
  double extra = 0;
  for (int n = 2; n <= 64; ++n) {
    double minlog = std::log(Y) / n;
    size_t i0 = 0;
    while (i0 < pt.primes.size() && pt.logp[i0] <= minlog) ++i0;
    bool any = false;
    for (size_t i = i0; i < pt.primes.size(); ++i) {
      double term = std::norm(spec.euler_log_coeff(pt.primes[i], n)) *
                    std::exp(-2.0 * n * sigma * pt.logp[i]);
      extra += term;
      any = true;
      if (term < 1e-30) break;
    }
    if (!any && std::exp2((double)n) > Y) break;
  }
  return head + extra;
}

Cplx eval_F(const LinearCombination& comb, Cplx s, double precision) {
  Cplx sum = 0;
  for (size_t j = 0; j < comb.members.size(); ++j)
    sum += comb.weights[j] * eval_L(comb.members[j], s, precision);
  return sum;
}

AnalyticFn make_F(const LinearCombination& comb, double precision) {
  return [comb, precision](Cplx s) { return eval_F(comb, s, precision); };
}

LogLTracker::LogLTracker(const LFunctionSpec& spec, double sigma, double t0, double precision)
    : spec_(spec), sigma_(sigma), prec_(std::min(1e-13, precision * 1e-2)), tcur_(t0) {
  logcur_ = eval_logL(spec, Cplx(sigma, t0), precision);
  Lcur_ = std::exp(logcur_);
}

Cplx LogLTracker::advance(double t) {
  double h = std::max(1e-4, std::min(0.5, std::fabs(t - tcur_)));
  const double hmin = 1e-10;
  while (tcur_ != t) {
    double dir = t > tcur_ ? 1.0 : -1.0;
    double next = tcur_ + dir * std::min(h, std::fabs(t - tcur_));
    Cplx Lnext = eval_L(spec_, Cplx(sigma_, next), prec_);
    if (std::abs(Lnext) < kZeroFloor)
      throw ZeroOnPathError("tracker: |L| collapse at t = " + std::to_string(next), next);
    Cplx delta = std::log(Lnext / Lcur_);
    if (std::abs(delta.imag()) > 1.2) {
      h *= 0.5;
      if (h < hmin)
        throw ZeroOnPathError("tracker: cannot resolve branch at t = " + std::to_string(tcur_),
                              tcur_);
      continue;
    }
    logcur_ += delta;
    Lcur_ = Lnext;
    tcur_ = next;
    if (std::abs(delta.imag()) < 0.25) h = std::min(h * 1.7, 1.0);
  }
  return logcur_;
}

}  // namespace lflab

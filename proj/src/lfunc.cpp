#include "lflab/lfunc.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "lflab/errors.hpp"

namespace lflab {

LFunctionSpec LFunctionSpec::zeta() { return LFunctionSpec{}; }

LFunctionSpec LFunctionSpec::dirichlet(const DirichletCharacter& chi) {
  LFunctionSpec s;
  s.kind = Kind::Dirichlet;
  s.chi = chi;
  s.label = "L_" + chi.label();
  // xi = 1 for zeta and primitive characters (|chi(p)| = 1 off q)
  s.xi = 1.0;
  return s;
}

Cplx LFunctionSpec::euler_log_coeff(uint64_t p, int k) const {
  if (kind == Kind::Zeta) return 1.0 / (double)k;
  // chi(p^k) computed through the exact angle so powers stay on the lattice
  uint64_t pk = 1;
  uint64_t q = chi.modulus;
  for (int i = 0; i < k; ++i) pk = pk * (p % q) % q;
  return chi(pk) / (double)k;
}

Cplx euler_log_coeff(const LFunctionSpec& spec, uint64_t p, int k) {
  return spec.euler_log_coeff(p, k);
}

bool LFunctionSpec::same_as(const LFunctionSpec& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Zeta) return xi == o.xi;
  return chi.modulus == o.chi.modulus && chi.index == o.chi.index && xi == o.xi;
}

std::shared_ptr<const SpecPrimeData> SpecPrimeData::get(const LFunctionSpec& spec,
                                                        uint64_t limit) {
  static std::mutex mu;
  static std::map<std::pair<std::string, uint64_t>, std::shared_ptr<const SpecPrimeData>> cache;
  const PrimeTable& pt = PrimeTable::shared(limit);
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(spec.label, pt.limit);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto d = std::make_shared<SpecPrimeData>();
  d->table = &pt;
  size_t n = pt.primes.size();
  d->bre.resize(n);
  d->bim.resize(n);
  bool real = true;
  for (size_t i = 0; i < n; ++i) {
    Cplx b = spec.euler_log_coeff(pt.primes[i], 1);
    d->bre[i] = b.real();
    d->bim[i] = b.imag();
    if (b.imag() != 0.0) real = false;
  }
  d->real_coeffs = real;
  cache.emplace(key, d);
  return d;
}

LinearCombination::LinearCombination(std::vector<LFunctionSpec> specs,
                                     std::vector<double> raw_weights) {
  if (specs.empty() || specs.size() != raw_weights.size())
    throw ConfigError("combination needs matching nonempty member and weight lists");
  double ssq = 0;
  for (double b : raw_weights) {
    if (b == 0.0) throw ConfigError("zero weight in linear combination");
    ssq += b * b;
  }
  weight_scale = 1.0 / std::sqrt(ssq);
  members = std::move(specs);
  weights = std::move(raw_weights);
  for (double& b : weights) b *= weight_scale;

  // n0 = least n with alpha_F(n) != 0, scanned by multiplicativity
  double tol = 1e-12;
  n0 = 0;
  for (uint64_t n = 1; n <= 10000; ++n) {
    if (std::abs(coeff(n)) > tol) {
      n0 = n;
      break;
    }
  }
  if (n0 == 0) throw ConfigError("no nonzero Dirichlet coefficient found for n <= 1e4");
}

Cplx LinearCombination::coeff(uint64_t n) const {
  Cplx s = 0;
  for (size_t j = 0; j < members.size(); ++j) s += weights[j] * members[j].dirichlet_coeff(n);
  return s;
}

std::string LinearCombination::label() const {
  std::string s;
  for (size_t j = 0; j < members.size(); ++j) {
    if (j) s += "+";
    s += members[j].label;
  }
  return s;
}

}  // namespace lflab

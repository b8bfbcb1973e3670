#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lflab/chars.hpp"
#include "lflab/primes.hpp"

namespace lflab {

using Cplx = std::complex<double>;

// Degree-1 member of the family: the zeta function or a Dirichlet L-function.
// xi is stored rather than hardcoded so synthetic orthonormality constants can
// be used in the density/K0 experiments.
struct LFunctionSpec {
  enum class Kind { Zeta, Dirichlet };
  Kind kind = Kind::Zeta;
  DirichletCharacter chi;  // only for Dirichlet
  int degree = 1;
  double theta = 0.0;
  double xi = 1.0;
  std::string label = "zeta";

  static LFunctionSpec zeta();
  static LFunctionSpec dirichlet(const DirichletCharacter& chi);

  uint32_t modulus() const { return kind == Kind::Zeta ? 1 : chi.modulus; }
  bool has_pole() const {
    return kind == Kind::Zeta || (kind == Kind::Dirichlet && chi.is_principal());
  }

  // alpha(p): Euler factor root
  Cplx alpha_p(uint64_t p) const { return kind == Kind::Zeta ? Cplx(1.0) : chi(p); }
  // Dirichlet series coefficient alpha_L(n)
  Cplx dirichlet_coeff(uint64_t n) const { return kind == Kind::Zeta ? Cplx(1.0) : chi(n); }
  // beta_L(p^k) = alpha(p)^k / k
  Cplx euler_log_coeff(uint64_t p, int k) const;

  bool same_as(const LFunctionSpec& o) const;
};

Cplx euler_log_coeff(const LFunctionSpec& spec, uint64_t p, int k);

// Per-prime beta(p) coefficients of one spec against a shared prime table;
// built once, read by the kernels.
struct SpecPrimeData {
  const PrimeTable* table = nullptr;
  bool real_coeffs = false;    // all beta(p) real (zeta, quadratic chi)
  std::vector<double> bre, bim;

  static std::shared_ptr<const SpecPrimeData> get(const LFunctionSpec& spec, uint64_t limit);
};

// F(s) = sum_j b_j L_j(s), weights renormalized to sum b_j^2 = 1.
struct LinearCombination {
  std::vector<LFunctionSpec> members;
  std::vector<double> weights;
  double weight_scale = 1.0;  // factor applied during renormalization
  uint64_t n0 = 1;            // least n with alpha_F(n) != 0

  LinearCombination() = default;
  LinearCombination(std::vector<LFunctionSpec> specs, std::vector<double> raw_weights);

  int J() const { return (int)members.size(); }
  Cplx coeff(uint64_t n) const;  // alpha_F(n)
  std::string label() const;
};

}  // namespace lflab

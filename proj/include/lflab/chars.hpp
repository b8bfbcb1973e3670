#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lflab {

// A Dirichlet character mod q.  Values are stored as exact rational angles
// k/M (chi(n) = e^{2 pi i k/M}, k = -1 marking chi(n) = 0), so completely
// multiplicative identities hold exactly and primitivity checks are integer
// arithmetic; the complex table is derived from the angles.
struct DirichletCharacter {
  uint32_t modulus = 1;
  uint32_t index = 0;       // position in the canonical group enumeration
  uint32_t order = 1;       // multiplicative order of chi
  uint32_t conductor = 1;
  bool is_primitive = true;
  bool even = true;         // chi(-1) = +1
  uint32_t angle_den = 1;                // M
  std::vector<int64_t> angle_num;        // k per residue, -1 when chi = 0
  std::vector<std::complex<double>> values;  // per residue

  std::complex<double> operator()(uint64_t n) const { return values[n % modulus]; }
  bool is_principal() const { return order == 1; }
  std::string label() const;

  DirichletCharacter conj() const;
};

// All phi(q) characters mod q, canonical order (index 0 = principal).
const std::vector<DirichletCharacter>& character_group(uint32_t q);

const DirichletCharacter& character(uint32_t q, uint32_t index);

// All primitive characters mod q.
std::vector<DirichletCharacter> primitive_characters(uint32_t q);

}  // namespace lflab

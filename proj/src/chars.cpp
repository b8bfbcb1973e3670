#include "lflab/chars.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>

#include "lflab/errors.hpp"
#include "lflab/primes.hpp"

namespace lflab {

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// one cyclic factor of (Z/q)^* restricted to a prime-power component
struct Component {
  uint64_t order;                  // m_c
  std::vector<uint32_t> dlog;      // residue mod q -> exponent (units only)
};

struct GroupData {
  uint32_t q;
  uint64_t M;  // lcm of component orders
  std::vector<Component> comps;
};

uint64_t find_primitive_root(uint64_t pk, uint64_t p) {
  uint64_t n = pk;
  uint64_t full = pk / p * (p - 1);  // phi(p^k)
  std::vector<uint64_t> primefac;
  uint64_t f = full;
  for (uint64_t d = 2; d * d <= f; ++d)
    if (f % d == 0) {
      primefac.push_back(d);
      while (f % d == 0) f /= d;
    }
  if (f > 1) primefac.push_back(f);
  for (uint64_t g = 2; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    bool ok = true;
    for (uint64_t d : primefac)
      if (powmod(g, full / d, n) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root mod " + std::to_string(pk));
}

// CRT lift: value x mod pk, 1 mod q/pk
uint64_t crt_lift(uint64_t x, uint64_t pk, uint64_t q) {
  uint64_t rest = q / pk;
  for (uint64_t c = 0;; ++c) {
    uint64_t cand = 1 + c * rest;
    if (cand % pk == x % pk) return cand % q;
    if (c > q) throw Error("crt failure");
  }
}

GroupData build_group(uint32_t q) {
  GroupData gd;
  gd.q = q;
  gd.M = 1;
  if (q == 1) return gd;

  // factor q
  std::vector<std::pair<uint64_t, uint32_t>> fac;
  uint64_t r = q;
  for (uint64_t d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      uint32_t k = 0;
      while (r % d == 0) {
        r /= d;
        ++k;
      }
      fac.push_back({d, k});
    }
  if (r > 1) fac.push_back({r, 1});

  // gather generators (lifted to mod q) and orders
  std::vector<uint64_t> gens;
  std::vector<uint64_t> orders;
  for (auto [p, k] : fac) {
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) pk *= p;
    if (p == 2) {
      if (k == 1) continue;  // trivial
      if (k == 2) {
        gens.push_back(crt_lift(3, pk, q));
        orders.push_back(2);
      } else {
        gens.push_back(crt_lift(pk - 1, pk, q));  // -1
        orders.push_back(2);
        gens.push_back(crt_lift(5, pk, q));
        orders.push_back(pk / 4);
      }
    } else {
      uint64_t g = find_primitive_root(pk, p);
      gens.push_back(crt_lift(g, pk, q));
      orders.push_back(pk / p * (p - 1));
    }
  }

  for (size_t i = 0; i < gens.size(); ++i) {
    Component c;
    c.order = orders[i];
    c.dlog.assign(q, 0);
    gd.comps.push_back(std::move(c));
  }

  // joint enumeration of all units as products of generator powers
  size_t nc = gens.size();
  std::vector<uint64_t> e(nc, 0);
  uint64_t total = 1;
  for (auto o : orders) total *= o;
  uint64_t val = 1;
  for (uint64_t it = 0; it < total; ++it) {
    for (size_t c = 0; c < nc; ++c) gd.comps[c].dlog[val] = (uint32_t)e[c];
    // increment mixed-radix counter, updating val incrementally
    size_t c = 0;
    for (; c < nc; ++c) {
      e[c]++;
      val = val * gens[c] % q;
      if (e[c] < orders[c]) break;
      // wrapped: val now multiplied by g^order = 1, reset exponent
      e[c] = 0;
    }
  }

  gd.M = 1;
  for (auto o : orders) gd.M = std::lcm(gd.M, o);
  return gd;
}

DirichletCharacter make_char(const GroupData& gd, uint32_t index) {
  DirichletCharacter ch;
  ch.modulus = gd.q;
  ch.index = index;
  uint64_t M = gd.M;
  ch.angle_den = (uint32_t)M;
  ch.angle_num.assign(gd.q == 1 ? 1 : gd.q, -1);
  ch.values.assign(gd.q == 1 ? 1 : gd.q, 0.0);

  // exponent tuple from mixed radix
  std::vector<uint64_t> e(gd.comps.size());
  uint64_t rest = index;
  for (size_t c = 0; c < gd.comps.size(); ++c) {
    e[c] = rest % gd.comps[c].order;
    rest /= gd.comps[c].order;
  }

  if (gd.q == 1) {
    ch.angle_num[0] = 0;
    ch.values[0] = 1.0;
    ch.order = 1;
    ch.conductor = 1;
    ch.is_primitive = true;
    ch.even = true;
    return ch;
  }

  for (uint32_t n = 0; n < gd.q; ++n) {
    if (std::gcd<uint64_t>(n, gd.q) != 1) continue;
    uint64_t k = 0;
    for (size_t c = 0; c < gd.comps.size(); ++c)
      k = (k + e[c] * gd.comps[c].dlog[n] % M * (M / gd.comps[c].order)) % M;
    ch.angle_num[n] = (int64_t)k;
    double ang = 2.0 * M_PI * (double)k / (double)M;
    ch.values[n] = {std::cos(ang), std::sin(ang)};
    // snap exact lattice points
    if (k == 0) ch.values[n] = 1.0;
    if (4 * k == M) ch.values[n] = {0.0, 1.0};
    if (2 * k == M) ch.values[n] = -1.0;
    if (4 * k == 3 * M) ch.values[n] = {0.0, -1.0};
  }

  // order of chi = lcm of M / gcd(angles)
  uint64_t g = M;
  for (uint32_t n = 0; n < gd.q; ++n)
    if (ch.angle_num[n] > 0) g = std::gcd(g, (uint64_t)ch.angle_num[n]);
  ch.order = (uint32_t)(M / g);

  // conductor: least divisor d of q with chi trivial on units = 1 mod d
  for (uint32_t d = 1; d <= gd.q; ++d) {
    if (gd.q % d != 0) continue;
    bool trivial = true;
    for (uint32_t n = 1; n < gd.q && trivial; ++n)
      if (ch.angle_num[n] >= 0 && n % d == 1 && ch.angle_num[n] != 0) trivial = false;
    if (trivial) {
      ch.conductor = d;
      break;
    }
  }
  ch.is_primitive = ch.conductor == gd.q;
  ch.even = ch.angle_num[(gd.q - 1) % gd.q] == 0;
  if (gd.q <= 2) ch.even = true;
  return ch;
}

}  // namespace

std::string DirichletCharacter::label() const {
  return "chi_" + std::to_string(modulus) + "_" + std::to_string(index);
}

DirichletCharacter DirichletCharacter::conj() const {
  DirichletCharacter c = *this;
  for (size_t n = 0; n < values.size(); ++n) {
    c.values[n] = std::conj(values[n]);
    if (angle_num[n] > 0) c.angle_num[n] = (int64_t)angle_den - angle_num[n];
  }
  // find the matching index in the group
  for (const auto& other : character_group(modulus))
    if (other.angle_num == c.angle_num) {
      c.index = other.index;
      break;
    }
  return c;
}

const std::vector<DirichletCharacter>& character_group(uint32_t q) {
  static std::mutex mu;
  static std::map<uint32_t, std::vector<DirichletCharacter>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  GroupData gd = build_group(q);
  uint64_t count = 1;
  for (auto& c : gd.comps) count *= c.order;
  std::vector<DirichletCharacter> group;
  for (uint64_t i = 0; i < count; ++i) group.push_back(make_char(gd, (uint32_t)i));
  return cache.emplace(q, std::move(group)).first->second;
}

const DirichletCharacter& character(uint32_t q, uint32_t index) {
  const auto& g = character_group(q);
  if (index >= g.size())
    throw ConfigError("character index " + std::to_string(index) + " out of range mod " +
                      std::to_string(q) + " (phi = " + std::to_string(g.size()) + ")");
  return g[index];
}

std::vector<DirichletCharacter> primitive_characters(uint32_t q) {
  std::vector<DirichletCharacter> out;
  for (const auto& ch : character_group(q))
    if (ch.is_primitive) out.push_back(ch);
  return out;
}

}  // namespace lflab

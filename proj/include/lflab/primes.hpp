#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lflab {

// Cache directory for prime/character tables.  LFLAB_CACHE_DIR overrides;
// default is $HOME/.cache/lflab, falling back to ./.lflab-cache.
std::string cache_dir();

// Ascending primes up to limit, with the derived per-prime data the kernels
// want (log p and the premixed hash key).  Immutable once built.
struct PrimeTable {
  uint64_t limit = 0;
  std::vector<uint32_t> primes;
  std::vector<double> logp;
  std::vector<uint64_t> premixed;

  size_t count_below(uint64_t x) const;  // primes p <= x

  static PrimeTable build(uint64_t limit);            // sieve + fill derived columns
  static const PrimeTable& shared(uint64_t limit);    // process-wide, disk-cached
};

}  // namespace lflab

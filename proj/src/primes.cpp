#include "lflab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <mutex>

#include "lflab/errors.hpp"
#include "lflab/simd/rng.hpp"

namespace fs = std::filesystem;

namespace lflab {

std::string cache_dir() {
  if (const char* env = std::getenv("LFLAB_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/lflab";
  return ".lflab-cache";
}

size_t PrimeTable::count_below(uint64_t x) const {
  if (x > limit) throw PrimeTableTooSmall("prime table limit " + std::to_string(limit) +
                                          " below requested " + std::to_string(x));
  return (size_t)(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

PrimeTable PrimeTable::build(uint64_t limit) {
  PrimeTable t;
  t.limit = limit;
  if (limit >= 2) {
    std::vector<bool> comp(limit + 1, false);
    for (uint64_t i = 2; i * i <= limit; ++i)
      if (!comp[i])
        for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    for (uint64_t i = 2; i <= limit; ++i)
      if (!comp[i]) t.primes.push_back((uint32_t)i);
  }
  t.logp.resize(t.primes.size());
  t.premixed.resize(t.primes.size());
  for (size_t i = 0; i < t.primes.size(); ++i) {
    t.logp[i] = std::log((double)t.primes[i]);
    t.premixed[i] = rng::premix(t.primes[i]);
  }
  return t;
}

namespace {

const char kMagic[8] = {'l', 'f', 'p', 'r', 'i', 'm', 'v', '1'};

bool load_cached(const std::string& path, uint64_t limit, PrimeTable& out) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  char magic[8];
  uint64_t lim = 0, n = 0;
  bool ok = std::fread(magic, 1, 8, f) == 8 && std::memcmp(magic, kMagic, 8) == 0 &&
            std::fread(&lim, 8, 1, f) == 1 && lim == limit && std::fread(&n, 8, 1, f) == 1;
  if (ok) {
    out.primes.resize(n);
    ok = std::fread(out.primes.data(), 4, n, f) == n;
  }
  std::fclose(f);
  if (!ok) return false;
  out.limit = limit;
  out.logp.resize(n);
  out.premixed.resize(n);
  for (size_t i = 0; i < n; ++i) {
    out.logp[i] = std::log((double)out.primes[i]);
    out.premixed[i] = rng::premix(out.primes[i]);
  }
  return true;
}

void store_cached(const std::string& path, const PrimeTable& t) {
  std::error_code ec;
  fs::create_directories(fs::path(path).parent_path(), ec);
  FILE* f = std::fopen((path + ".tmp").c_str(), "wb");
  if (!f) return;  // cache is best-effort
  uint64_t n = t.primes.size();
  std::fwrite(kMagic, 1, 8, f);
  std::fwrite(&t.limit, 8, 1, f);
  std::fwrite(&n, 8, 1, f);
  std::fwrite(t.primes.data(), 4, n, f);
  std::fclose(f);
  fs::rename(path + ".tmp", path, ec);
}

}  // namespace

const PrimeTable& PrimeTable::shared(uint64_t limit) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<PrimeTable>> tables;
  if (limit > 200'000'000ull)
    throw PrimeTableTooSmall("refusing to sieve past 2e8 (requested " + std::to_string(limit) + ")");

  std::lock_guard<std::mutex> lock(mu);
  for (auto& t : tables)
    if (t->limit >= limit) return *t;

  // round up so repeated slightly-larger requests reuse one table
  uint64_t lim = 1024;
  while (lim < limit) lim *= 4;

  auto t = std::make_unique<PrimeTable>();
  std::string path = cache_dir() + "/primes-v1-" + std::to_string(lim) + ".bin";
  if (!load_cached(path, lim, *t)) {
    *t = build(lim);
    store_cached(path, *t);
  }
  tables.push_back(std::move(t));
  return *tables.back();
}

}  // namespace lflab

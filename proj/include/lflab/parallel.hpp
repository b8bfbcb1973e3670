#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lflab {

// Global worker count, set once from the CLI (--workers).  Results never
// depend on it: parallel loops write to index-addressed slots and reductions
// happen afterwards in a fixed order.
int& worker_count();

// fn(begin, end) over disjoint chunks of [0, n)
template <class Fn>
void parallel_for_chunks(size_t n, Fn&& fn, int workers = 0) {
  if (workers <= 0) workers = worker_count();
  size_t hw = std::max<size_t>(1, (size_t)workers);
  if (hw == 1 || n < 2) {
    if (n) fn(size_t{0}, n);
    return;
  }
  hw = std::min(hw, n);
  size_t chunk = (n + hw - 1) / hw;
  std::vector<std::thread> pool;
  std::exception_ptr err;
  for (size_t w = 0; w < hw; ++w) {
    size_t b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

template <class Fn>
void parallel_for(size_t n, Fn&& fn, int workers = 0) {
  parallel_for_chunks(
      n,
      [&](size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) fn(i);
      },
      workers);
}

// Deterministic pairwise sum over an index range of any random-access
// accessor; the reduction tree depends only on (size).
template <class Acc>
double pairwise_sum(const Acc& a, size_t begin, size_t end) {
  size_t n = end - begin;
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = a(begin);
    for (size_t i = begin + 1; i < end; ++i) s += a(i);
    return s;
  }
  size_t mid = begin + n / 2;
  return pairwise_sum(a, begin, mid) + pairwise_sum(a, mid, end);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum([&](size_t i) { return v[i]; }, 0, v.size());
}

}  // namespace lflab

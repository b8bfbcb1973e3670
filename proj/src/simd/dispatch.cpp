#include <cstdlib>
#include <cstring>

#include "lflab/simd/kernels.hpp"

namespace lflab::simd {

const KernelApi* kernels_avx2_impl();

const KernelApi* kernels_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return kernels_avx2_impl();
#endif
  return nullptr;
}

const KernelApi& kernels() {
  static const KernelApi* chosen = [] {
    const char* env = std::getenv("LFLAB_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &kernels_scalar();
    const KernelApi* wide = kernels_avx2();
    if (env && std::strcmp(env, "avx2") == 0 && wide) return wide;
    if (env && std::strcmp(env, "auto") != 0 && !wide) return &kernels_scalar();
    return wide ? wide : &kernels_scalar();
  }();
  return *chosen;
}

}  // namespace lflab::simd

// Compiled with -mavx2 -mfma (see src/CMakeLists.txt); only reached at
// runtime after a cpuid check in kernels().

#if defined(__x86_64__) || defined(_M_X64)
#define LFLAB_AVX2_TU 1
#endif

#include "lflab/simd/kernels.hpp"

#ifdef LFLAB_AVX2_TU
#include "lflab/simd/kernels_impl.hpp"
#endif

namespace lflab::simd {

const KernelApi* kernels_avx2_impl() {
#ifdef LFLAB_AVX2_TU
  static const KernelApi api = KernelImpl<Avx2Pack, Avx2U64>::api("avx2");
  return &api;
#else
  return nullptr;
#endif
}

}  // namespace lflab::simd

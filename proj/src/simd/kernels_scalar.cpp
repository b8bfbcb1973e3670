#include "lflab/simd/kernels_impl.hpp"

namespace lflab::simd {

const KernelApi& kernels_scalar() {
  static const KernelApi api = KernelImpl<ScalarPack, ScalarU64>::api("scalar");
  return api;
}

}  // namespace lflab::simd

#include "lflab/parallel.hpp"

namespace lflab {

int& worker_count() {
  static int n = (int)std::max(1u, std::thread::hardware_concurrency());
  return n;
}

}  // namespace lflab

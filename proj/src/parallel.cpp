#include "sgt/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgt {

namespace {
std::atomic<int> g_threads{0};
}

void set_num_threads(int n) {
  g_threads.store(n < 0 ? 0 : n);
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int num_threads() { return g_threads.load(); }

bool parallel_enabled() {
#ifdef _OPENMP
  int n = g_threads.load();
  return n != 1 && (n == 0 ? omp_get_max_threads() > 1 : n > 1);
#else
  return false;
#endif
}

}  // namespace sgt

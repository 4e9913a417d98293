#include "wiltonlab/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace wiltonlab {

namespace {
std::atomic<int> g_thread_override{0};
}

void set_thread_override(int n) { g_thread_override.store(n > 0 ? n : 0); }

int configured_threads() {
  const int forced = g_thread_override.load();
  if (forced > 0) return forced;
  if (const char* env = std::getenv("WILTON_LAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

}  // namespace wiltonlab

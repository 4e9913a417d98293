#pragma once

#include <cstddef>
#include <vector>

namespace wiltonlab {

// Worker-count policy: explicit set_thread_override() (CLI --threads) wins,
// then the WILTON_LAB_THREADS environment variable, then the OpenMP default.
int configured_threads();
void set_thread_override(int n);  // n <= 0 clears the override

// Deterministic block map: [0, n) is cut into fixed-size blocks, each block
// is processed serially by block_fn(block_index, begin, end) -> Acc, and the
// per-block results come back indexed by block. Whoever folds them does so in
// block order, so the final result is bit-identical for any worker count.
// The serial reference path (parallel = false) runs the very same code with
// the OpenMP loop disabled; the benchmark target compares the two.
template <class Acc, class BlockFn>
std::vector<Acc> blocked_map(std::size_t n, std::size_t block_size,
                             BlockFn&& block_fn, bool parallel = true) {
  const std::size_t n_blocks = n == 0 ? 0 : (n + block_size - 1) / block_size;
  std::vector<Acc> out(n_blocks);
  const bool use_omp = parallel && configured_threads() > 1 && n_blocks > 1;
  if (use_omp) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
    for (long long b = 0; b < (long long)n_blocks; ++b) {
      const std::size_t lo = (std::size_t)b * block_size;
      const std::size_t hi = lo + block_size < n ? lo + block_size : n;
      out[(std::size_t)b] = block_fn((std::size_t)b, lo, hi);
    }
  } else {
    for (std::size_t b = 0; b < n_blocks; ++b) {
      const std::size_t lo = b * block_size;
      const std::size_t hi = lo + block_size < n ? lo + block_size : n;
      out[b] = block_fn(b, lo, hi);
    }
  }
  return out;
}

}  // namespace wiltonlab

// Benchmark: the OpenMP blocked_map kernels against the serial reference
// path (same code, loop not parallelized). Results must match bitwise —
// the fold is ordered by block — so this doubles as a determinism check.
//
//   wilton-bench [--threads N] [--g-samples N] [--phi2-samples N]

#include "CLI11.hpp"

#include "wiltonlab/gfun.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/phi_tables.hpp"
#include "wiltonlab/realspec.hpp"
#include "wiltonlab/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace wiltonlab;

namespace {

using clock_type = std::chrono::steady_clock;

struct bench_result {
  double value = 0.0;
  double seconds = 0.0;
};

bench_result time_run(const std::function<double(bool)>& kernel,
                      bool parallel) {
  const auto t0 = clock_type::now();
  const double value = kernel(parallel);
  return {value,
          std::chrono::duration<double>(clock_type::now() - t0).count()};
}

void run_bench(const std::string& name, std::int64_t n,
               const std::function<double(bool)>& kernel) {
  const bench_result serial = time_run(kernel, false);
  const bench_result parallel = time_run(kernel, true);
  const bool match = serial.value == parallel.value;
  std::printf("%-28s n=%-9lld serial %8.3f s   parallel %8.3f s   "
              "speedup %.2fx   bitwise match: %s\n",
              name.c_str(), static_cast<long long>(n), serial.seconds,
              parallel.seconds, serial.seconds / parallel.seconds,
              match ? "yes" : "NO");
  if (!match) {
    std::printf("  serial %.17g vs parallel %.17g\n", serial.value,
                parallel.value);
  }
}

double sum_blocks(const std::vector<double>& blocks) {
  double total = 0.0;
  for (double b : blocks) total += b;  // ordered fold
  return total;
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t g_samples = 20000;
  std::int64_t phi2_samples = 2000000;
  int threads = 0;

  CLI::App app{"wilton-bench: OpenMP kernels vs the serial reference"};
  app.add_option("--threads", threads, "worker cap (default: OpenMP/env)");
  app.add_option("--g-samples", g_samples, "points for the g kernel");
  app.add_option("--phi2-samples", phi2_samples,
                 "points for the phi2 table kernel");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) set_thread_override(threads);
  warm_tables();
  std::printf("threads: %d\n", configured_threads());

  run_bench("g_fast over random dyadics", g_samples, [&](bool parallel) {
    const auto blocks = blocked_map<double>(
        static_cast<std::size_t>(g_samples), 1024,
        [](std::size_t, std::size_t lo, std::size_t hi) {
          double acc = 0.0;
          for (std::size_t i = lo; i < hi; ++i) {
            sample_rng rng(2030, i, 0x424e4348u);  // "BNCH"
            const real_spec x = make_dyadic(bigint(rng.next_dyadic_bits(64)), 64);
            // 4e-4 is the moment pipeline's tolerance: every F evaluation
            // stays on the interpolation-table fast path.
            acc += std::abs(g_fast(x, 4e-4).value);
          }
          return acc;
        },
        parallel);
    return sum_blocks(blocks);
  });

  run_bench("phi2 table evaluation", phi2_samples, [&](bool parallel) {
    const double step = 1.0 / static_cast<double>(phi2_samples);
    const auto blocks = blocked_map<double>(
        static_cast<std::size_t>(phi2_samples), 65536,
        [step](std::size_t, std::size_t lo, std::size_t hi) {
          double acc = 0.0;
          for (std::size_t i = lo; i < hi; ++i) {
            acc += phi2_fast((static_cast<double>(i) + 0.5) * step).value;
          }
          return acc;
        },
        parallel);
    return sum_blocks(blocks);
  });

  return 0;
}

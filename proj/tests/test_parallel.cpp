#include <doctest.h>

#include "wiltonlab/parallel.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

using namespace wiltonlab;

namespace {

// contrived but order-sensitive per-block work
std::vector<double> run_sum(std::size_t n, std::size_t bs, bool parallel) {
  return blocked_map<double>(
      n, bs,
      [](std::size_t, std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
          acc += 1.0 / double(i + 1) - 1.0 / double(i + 2);
        return acc;
      },
      parallel);
}

}  // namespace

TEST_CASE("thread override wins over environment") {
  set_thread_override(3);
  CHECK(configured_threads() == 3);
  set_thread_override(0);
  CHECK(configured_threads() >= 1);
}

TEST_CASE("blocked_map covers the range exactly once") {
  auto parts = blocked_map<std::uint64_t>(
      1000, 64,
      [](std::size_t, std::size_t lo, std::size_t hi) {
        std::uint64_t acc = 0;
        for (std::size_t i = lo; i < hi; ++i) acc += i;
        return acc;
      });
  std::uint64_t total = std::accumulate(parts.begin(), parts.end(),
                                        std::uint64_t{0});
  CHECK(total == 1000ull * 999ull / 2ull);
  CHECK(parts.size() == 16);  // ceil(1000/64)
}

TEST_CASE("parallel and serial folds are bit-identical") {
  set_thread_override(4);
  auto par = run_sum(100000, 1024, true);
  set_thread_override(1);
  auto ser = run_sum(100000, 1024, false);
  set_thread_override(0);
  REQUIRE(par.size() == ser.size());
  bool identical = true;
  for (std::size_t i = 0; i < par.size(); ++i)
    identical &= (par[i] == ser[i]);  // exact, not approximate
  CHECK(identical);

  double folded = 0.0;
  for (double v : par) folded += v;
  CHECK(folded == doctest::Approx(1.0 - 1.0 / 100001.0).epsilon(1e-12));
}

TEST_CASE("empty and single-block inputs") {
  auto none = run_sum(0, 16, true);
  CHECK(none.empty());
  auto one = run_sum(5, 16, true);
  CHECK(one.size() == 1);
}

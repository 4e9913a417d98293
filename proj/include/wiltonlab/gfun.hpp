#pragma once

#include "wiltonlab/eval.hpp"
#include "wiltonlab/realspec.hpp"

#include <cstdint>
#include <vector>

namespace wiltonlab {

// One row of a cotangent-sum scan: c0(r/b) and its b-normalised value.
struct scan_record {
  std::int64_t r = 0;
  std::int64_t b = 0;
  double value = 0.0;       // c0(r/b)
  double normalized = 0.0;  // c0(r/b) / b
};

// Direct partial summation of g(x) = sum_{l>=1} (1 - 2{lx}) / l. The series
// is conditionally convergent, so the last `averaging_window` partial sums
// are averaged (window 0 picks sqrt(n_terms)); the reported bound is the
// window spread plus 1/n_terms — an empirical proxy, not a certificate. This
// is the slow route, independent of the continued-fraction machinery.
// Fractional parts {lx} are carried exactly (modular arithmetic for
// rational-valued x, extended precision for quadratic irrationals). Rejects
// rational values whose denominator is <= n_terms: the series diverges on
// the multiples of the denominator.
eval_result g_series_oracle(const real_spec& x, std::int64_t n_terms,
                            std::int64_t averaging_window = 0);

// g(x) = W(x) + H(x): the fast route, O(orbit depth) work, with the two
// certified error bounds summed and the termination flag propagated.
eval_result g_fast(const real_spec& x, double tol);

// c0(r/b) = -sum_{m=1}^{b-1} (m/b) cot(pi m r / b) for 1 <= r < b coprime.
// Cotangents are evaluated through the reflected residue min(s, b-s), which
// makes the antisymmetry c0((b-r)/b) = -c0(r/b) hold exactly in floating
// point. O(b) time.
double cotangent_sum(std::int64_t r, std::int64_t b);

// All records for coprime r in [a0*b, a1*b], ascending in r. Requires
// 0 < a0 < a1 <= 1 and b >= 3; an empty window yields an empty list.
std::vector<scan_record> scan_cotangent(std::int64_t b, double a0, double a1);

}  // namespace wiltonlab

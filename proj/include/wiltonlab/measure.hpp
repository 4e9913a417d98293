#pragma once

#include "wiltonlab/eval.hpp"

#include <cstdint>

namespace wiltonlab {

// A subinterval of [0,1]; the measurable sets the Gauss measure is applied
// to here.
struct interval {
  double lo = 0.0;
  double hi = 1.0;
};

// Monte Carlo estimate next to the bound it probes. `informational` marks
// probes whose stated bound comes from an external proof that is reported
// but never hard-asserted.
struct mc_report {
  double estimate = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool informational = false;
  std::int64_t samples = 0;
};

// Gauss measure m(iv) = log2((1+hi)/(1+lo)), evaluated through log1p so thin
// intervals keep full relative precision.
double gauss_measure(const interval& iv);

// Measure of the Gauss-map preimage of iv, summed over the first n_branches
// branches x in (1/(n+hi), 1/(n+lo)); the remaining branches contribute a
// digamma-difference tail estimate whose residual enters the error bound.
// Numerically reproduces the invariance m(a^{-1}(iv)) = m(iv).
eval_result preimage_measure(const interval& iv, std::int64_t n_branches);

// One draw from the Gauss measure via the exact inverse CDF x = 2^U - 1.
double sample_gauss_point(std::uint64_t seed, std::uint64_t index);

// Monte Carlo estimate of (int |T^n l|^p dm) / (int |l|^p dm), reported next
// to the contraction bound g^{(n-1)p}; pass means estimate <= bound within
// three standard errors.
mc_report transfer_norm_ratio(int n, double p, std::int64_t samples,
                              std::uint64_t seed);

// Monte Carlo estimate of m({x : T^d l(x) >= u and T^{d+h} l(x) >= v}),
// reported next to the exceptional-set bound
// 2 exp(-2^{(h-2)/2} v exp(2^{(d-2)/2} u)). The bound's proof lives outside
// the paper, so the report is informational: pass is recorded, not asserted.
mc_report j_set_probe(int d, int h, double u, double v, std::int64_t samples,
                      std::uint64_t seed);

}  // namespace wiltonlab

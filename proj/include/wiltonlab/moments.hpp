#pragma once

#include <cstdint>
#include <vector>

namespace wiltonlab {

enum class moment_method {
  importance_mc,     // Gamma/uniform mixture importance sampling
  stratified_mc,     // stratified in u = log(1/x)
  oracle_quadrature  // midpoint rule on an exact dyadic grid
};

// One estimate of M_K = integral_0^1 |g(x)|^K dx, together with the
// statistical error and the ratio to the reference scale Gamma(K+1). The
// asymptotic prediction for that ratio is 2 e^{-A(1)} ~ 0.56693.
struct moment_estimate {
  int k = 0;
  double value = 0.0;
  double std_error = 0.0;
  moment_method method = moment_method::importance_mc;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double ratio_to_prediction = 0.0;  // value / Gamma(K+1)
};

// Predicted moment 2 e^{-A(1)} Gamma(K+1); evaluated in the log domain for
// K > 15 so large K cannot overflow prematurely. Requires K >= 1.
double prediction(int k);

// Engine calibration: the same importance sampler with |g|^K replaced by
// l(x)^K = log(1/x)^K, whose exact full-interval moment is Gamma(L+1).
// Deterministic (internal fixed budget and seed). Requires 1 <= L <= 20.
double calib_moment_l(int l);

// Second calibration: integral_0^1 x^alpha l(x)^L dx, exactly
// Gamma(L+1)/(1+alpha)^{L+1}. The Gamma proposal is rate-matched to 1+alpha,
// so the weights stay O(1). Requires alpha in (0,4] and 0 <= L <= 15.
double calib_weighted_moment(double alpha, int l);

// M_K by importance sampling: 2 * integral_0^{1/2} |g|^K dx with a 50/50
// mixture proposal (Gamma(K+1) in u = log(1/x), uniform on (0,1/2)). Samples
// are rounded to a width-64 dyadic grid (width 128 for K > 10) before g is
// evaluated; samples whose orbit terminates are evaluated at the natural
// finite sum. budget < 2 yields an honest infinite std_error, never a
// silently truncated run. Requires 1 <= K <= 14, budget >= 1.
moment_estimate moment_g(int k, std::int64_t budget, std::uint64_t seed);

// Same target, independent variance-reduction route: u = log(1/x) is cut
// into equal strata on (log 2, 40] and sampled uniformly within each. The
// two routes must agree within statistical error; neither replaces the
// other. Requires 1 <= K <= 14, budget >= 1.
moment_estimate moment_g_stratified(int k, std::int64_t budget,
                                    std::uint64_t seed);

// Deterministic cross-check for M_1: midpoint rule over 2^log2_nodes exact
// dyadic nodes (2i+1)/2^{log2_nodes+1}, so every orbit is evaluated exactly
// where it is sampled. std_error is an empirical proxy: the change from the
// half-resolution grid plus the g evaluation tolerance. Requires
// 8 <= log2_nodes <= 24.
moment_estimate moment_m1_oracle(int log2_nodes = 18);

// moment_g for each K in k_list with a shared budget and seed.
std::vector<moment_estimate> moment_table(const std::vector<int>& k_list,
                                          std::int64_t budget,
                                          std::uint64_t seed);

}  // namespace wiltonlab

#pragma once

#include "wiltonlab/realspec.hpp"

#include <cstdint>
#include <vector>

namespace wiltonlab {

enum class stop_reason { terminated, tolerance, q_limit, max_terms };

// Gauss-map orbit of x: partial quotients a_k, convergents p_k/q_k, and the
// derived reals alpha_k = a^k(x), beta_k = alpha_0...alpha_k (beta_{-1} = 1),
// gamma_k = beta_{k-1} * log(1/alpha_k).
//
// Shape: a/p/q/gamma all have size n = truncated_at; alpha and beta have size
// n+1 (one lookahead entry; alpha[n] = 0 exactly when the expansion
// terminated). gamma[k] is the k-th Wilton term; tail_bound is a rigorous
// majorant for the sum of all omitted |gamma_j|, j >= n.
struct cf_orbit {
  std::vector<bigint> a;
  std::vector<bigint> p, q;
  std::vector<bigint> r;   // exact remainders r[k] (rational-valued inputs);
                           // alpha_k = r[k]/r[k-1] with r[-1] = den
  bigint den{0};
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;
  int truncated_at = 0;
  stop_reason reason = stop_reason::terminated;
  bool terminated = false;
  double tail_bound = 0.0;

  int depth() const { return truncated_at; }
};

struct cf_options {
  // Stop once the rigorous gamma-tail majorant drops below tol (0 = off).
  double tol = 0.0;
  int max_terms = 10000;
  // Stop before any convergent with q_k > q_limit (0 = off). Dyadic inputs
  // additionally stop once q_k^2 would exceed 2^width: deeper coefficients
  // are artifacts of the grid, not of the represented point.
  bigint q_limit{0};
};

cf_orbit cf_expand(const real_spec& x, const cf_options& opts = {});

const char* stop_reason_name(stop_reason r);

}  // namespace wiltonlab

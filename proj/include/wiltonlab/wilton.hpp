#pragma once

#include "wiltonlab/cf.hpp"
#include "wiltonlab/eval.hpp"
#include "wiltonlab/realspec.hpp"

#include <cstdint>

namespace wiltonlab {

// Result of summing the alternating series W(x) = sum_k (-1)^k gamma_k(x)
// over the Gauss-map orbit of x.
struct wilton_eval {
  double value = 0.0;
  double abs_error_bound = 0.0;  // rigorous bound on |value - W(x)|
  std::int64_t depth = 0;        // orbit terms actually summed
  bool terminated = false;       // orbit ended exactly (rational-valued input)
};

// Evaluate W(x) to absolute tolerance tol. For rational-valued inputs the
// orbit ends after finitely many steps and the returned value is the complete
// finite sum, flagged terminated = true (the bound then covers rounding
// only). Dyadic inputs additionally stop at the grid resolution; the bound
// stays honest in that case but may exceed tol.
wilton_eval wilton(const real_spec& x, double tol);

// W from an already-expanded orbit: the alternating gamma sum with the
// orbit's own tail bound. Lets g_fast share one expansion between W and H.
wilton_eval wilton(const cf_orbit& orbit);

// L(x, n) = sum_{v=0}^{n} (-1)^v gamma_v(x), the n-th partial sum of W
// (n inclusive, so L(x, 0) = log(1/x)). If the orbit ends before depth n the
// complete finite sum L(x, last) is returned instead.
double partial_sum_l(const real_spec& x, int n);

// (T^n l)(x) = beta_{n-1}(x) * log(1/alpha_n(x)) = gamma_n(x): the n-th
// transfer-operator iterate of l(x) = log(1/x), evaluated at x. Throws
// domain_error if the orbit ends at depth <= n.
double transfer_apply_l(const real_spec& x, int n);

// G(x) = sum_{j>=0} (-1)^j beta_{j-1}(x) F(alpha_j(x)) with beta_{-1} = 1.
// Each F factor is evaluated with a certified bound; the truncation tail is
// majorised through |F| <= k_f_max and the two-step halving of beta. Rational
// inputs yield the natural finite sum over the terminated orbit.
eval_result g_big(const real_spec& x, double tol);

// G from an orbit of x that was already expanded with cf tolerance
// <= 0.25 * tol (so the F-series tail majorant meets the budget).
eval_result g_big(const real_spec& x, const cf_orbit& orbit, double tol);

// H(x) = -2 G(x), with the error bound doubled accordingly.
eval_result h_func(const real_spec& x, double tol);

}  // namespace wiltonlab

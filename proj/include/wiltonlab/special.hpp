#pragma once

#include <cstdint>

#include "wiltonlab/eval.hpp"
#include "wiltonlab/realspec.hpp"

namespace wiltonlab {

// A(1) = 1 + sum_n [1 + n/(n+1) - 2n log(1+1/n)], summed with an analytic
// tail correction; cached after the first call. Bound well below 1e-10.
// Cross-checked in tests against the closed form log(2 pi) - gamma.
eval_result a_one();

// A(lambda) for lambda in (0,1]:
//   (lambda/2) log(1/lambda) + ((1+A(1))/2) lambda
//   + (lambda^2/2) phi2({1/lambda}) - int_{1/lambda}^inf phi2(t)/t^3 dt.
// Rational arguments take the exact phi2 route when the shifted denominator
// is modest; otherwise the certified series is used at a tolerance split so
// the total stays within tol (clamped at the series floor, ~8e-11).
eval_result a_lambda(const real_spec& lam, double tol);

// F(x) = (A(1) - x)/2 - (x^2/2) phi2({1/x}) + int_{1/x}^inf phi2(t)/t^3 dt
// on (0,1], certified. For x <= 1e-4 the curvature term is bounded outright:
// |F - (A(1)-x)/2| <= 0.2742 x^2.
eval_result f_certified(const real_spec& x, double tol);

// Table route for F (phi2 Fourier table + fast tail integral); bound ~1e-5.
eval_result f_fast(double x);

// Frozen upper bound for sup_(0,1] |F|: 1e6-point grid maximum (~A(1)/2,
// approached as x -> 0) plus a 10% margin. Tests pin both sides.
inline constexpr double k_f_max = 0.6934;

// Independent slow oracle for A(p/q): the defining integral
// int_0^T {t}{lambda t} dt/t^2 accumulated piecewise-exactly between
// breakpoints (all of the form n/p), plus the exact period-mean correction,
// so the residual is below 2q/T^2.
eval_result direct_a_oracle(std::int64_t p, std::int64_t q, double t_max);

}  // namespace wiltonlab

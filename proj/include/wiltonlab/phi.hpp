#pragma once

#include <cstdint>

#include "wiltonlab/eval.hpp"

namespace wiltonlab {

// Theta(z) = int_z^inf B2({s}) / s^3 ds for z > 0.
// Evaluated from exact per-interval antiderivatives up to z = 10 and an
// Euler-Maclaurin expansion beyond; the result is certified, with
// |Theta(z)| <= 0.0388 / z^3 available as an a-priori envelope.
eval_result theta_integral(double z);

// tailint(y) = int_y^inf phi2(t) / t^3 dt = sum_{n>=1} Theta(n y), y >= 1.
// Truncation is chosen so the omitted tail is below tol/2; the returned
// bound also carries the per-term certificates.
eval_result tailint_certified(double y, double tol);

// phi2(u) = sum_{n>=1} B2({n u}) / n^2, certified termwise summation.
// The cutoff ceil(1.01 / (6 tol)) is capped at 2^31 - 1 terms, so requested
// tolerances below ~7.8e-11 are clamped; the returned bound is always the
// honest one. Deterministic under any thread count (anchored blocks).
eval_result phi2_certified(double u, double tol);

// Exact-rational route: phi2(num/den) = (1/den^2) sum_{j=1}^{den}
// B2({j num/den}) zeta(2, j/den), O(den) work, near machine precision.
// Requires 0 < den <= 200000.
eval_result phi2_rational(std::int64_t num, std::int64_t den);

}  // namespace wiltonlab

#pragma once

namespace wiltonlab {

// First and second Bernoulli functions on the unit period.
double bernoulli_b1(double t);  // {t} - 1/2
double bernoulli_b2(double t);  // {t}^2 - {t} + 1/6

// Periodic Bernoulli function B_k({t}) for 2 <= k <= 16, used by the
// Euler-Maclaurin tails. Coefficients come from exact Bernoulli numbers.
double periodic_bernoulli(int k, double t);

// Rigorous sup bound: max_u |B_k({u})| <= 2 k! zeta(k) / (2 pi)^k
// (Fourier expansion of B_k, absolute convergence for k >= 2).
double max_bern_bound(int k);

// Hurwitz zeta(2, a) = sum_{n>=0} (n+a)^-2 for a in (0,1].
// Euler-Maclaurin with 16 explicit terms; absolute error < 1e-13.
double hurwitz_zeta2(double a);

}  // namespace wiltonlab

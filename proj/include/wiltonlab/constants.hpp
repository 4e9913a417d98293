#pragma once

// High-precision mathematical constants used by the library proper.
// Every literal carries >= 30 significant decimal digits (mpmath, dps=60);
// the compiler rounds them to the nearest double. Test-only reference values
// live in tests/oracle_constants.hpp instead.

namespace wiltonlab::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884197;

// Euler-Mascheroni constant (OEIS A001620)
inline constexpr double euler_gamma = 0.5772156649015328606065120900824024310422;

// log(2*pi) (mpmath: log(2*pi))
inline constexpr double log_two_pi = 1.837877066409345483560659472811235279723;

// A(1) = log(2*pi) - gamma; cross-checked against the interval series in tests
inline constexpr double a_one_closed_form = 1.260661401507812622954147382728832848681;

// pi^2/36 = phi2 at integer arguments; also the sup of |phi2|
inline constexpr double pi_sq_over_36 = 0.2741556778080377394120691944410041982032;

// pi^2/72: tail-integral coefficient, |int_T^inf phi2(t)/t^3 dt| <= (pi^2/72) T^-2
inline constexpr double pi_sq_over_72 = 0.1370778389040188697060345972205020991016;

// zeta(2)^2 = pi^4/36: total Fourier mass sum_N d(N)/N^2 of phi2 (up to 1/pi^2)
inline constexpr double zeta2_squared = 2.705808084277845478790009241352919756937;

inline constexpr double ln2 = 0.6931471805599453094172321214581765680755;

// golden section (sqrt(5)-1)/2, the Gauss-map fixed point
inline constexpr double golden_frac = 0.6180339887498948482045868343656381177203;

// zeta(k) for k = 2..17 (mpmath mp.zeta; index [k], slots 0/1 unused).
// Used by the rigorous bounds max|B_k({u})| <= 2 k! zeta(k) / (2 pi)^k and by
// the Fourier-tail estimates of the interpolation tables.
inline constexpr double zeta_int[18] = {
    0.0, 0.0,
    1.644934066848226436472415166646025189219,   // zeta(2)
    1.202056903159594285399738161511449990765,   // zeta(3)
    1.082323233711138191516003696541167902775,   // zeta(4)
    1.036927755143369926331365486457034168057,   // zeta(5)
    1.017343061984449139714517929790920527902,   // zeta(6)
    1.008349277381922826839797549849796759600,   // zeta(7)
    1.004077356197944339378685238508652465259,   // zeta(8)
    1.002008392826082214417852769232412060486,   // zeta(9)
    1.000994575127818085337145958900319017006,   // zeta(10)
    1.000494188604119464558702282526469936469,   // zeta(11)
    1.000246086553308048298637998047739670960,   // zeta(12)
    1.000122713347578489146751836526357395714,   // zeta(13)
    1.000061248135058704829258545105135333747,   // zeta(14)
    1.000030588236307020493551728510645062588,   // zeta(15)
    1.000015282259408651871732571487636722023,   // zeta(16)
    1.000007637197637899762273600293563029213,   // zeta(17)
};

// Bernoulli numbers B_0..B_16 as exact rationals rounded to double
// (odd indices > 1 are zero): 1, -1/2, 1/6, 0, -1/30, 0, 1/42, 0, -1/30,
// 0, 5/66, 0, -691/2730, 0, 7/6, 0, -3617/510.
inline constexpr double bernoulli_number[17] = {
    1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0,
    -1.0 / 30.0, 0.0, 5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0,
    0.0, -3617.0 / 510.0,
};

}  // namespace wiltonlab::constants

#include "wiltonlab/bernoulli.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "wiltonlab/constants.hpp"

namespace wiltonlab {

namespace {

constexpr int k_max_order = 16;

// coeff[k][j] = C(k,j) * B_{k-j}, so B_k(u) = sum_j coeff[k][j] u^j.
using coeff_table = std::array<std::array<double, k_max_order + 1>, k_max_order + 1>;

coeff_table build_coeffs() {
    std::array<std::array<double, k_max_order + 1>, k_max_order + 1> binom{};
    for (int n = 0; n <= k_max_order; ++n) {
        binom[n][0] = 1.0;
        for (int j = 1; j <= n; ++j)
            binom[n][j] = binom[n - 1][j - 1] + (j <= n - 1 ? binom[n - 1][j] : 0.0);
    }
    coeff_table c{};
    for (int k = 0; k <= k_max_order; ++k)
        for (int j = 0; j <= k; ++j)
            c[k][j] = binom[k][j] * constants::bernoulli_number[k - j];
    return c;
}

const coeff_table& coeffs() {
    static const coeff_table table = build_coeffs();
    return table;
}

double fract(double t) {
    double u = t - std::floor(t);
    if (u >= 1.0) u = 0.0;  // guards floor(t) rounding at large negative t
    return u;
}

}  // namespace

double bernoulli_b1(double t) { return fract(t) - 0.5; }

double bernoulli_b2(double t) {
    const double u = fract(t);
    return u * (u - 1.0) + 1.0 / 6.0;
}

double periodic_bernoulli(int k, double t) {
    if (k < 2 || k > k_max_order)
        throw std::invalid_argument("periodic_bernoulli: order must be in [2,16]");
    const double u = fract(t);
    const auto& c = coeffs()[static_cast<std::size_t>(k)];
    double acc = c[static_cast<std::size_t>(k)];
    for (int j = k - 1; j >= 0; --j) acc = acc * u + c[static_cast<std::size_t>(j)];
    return acc;
}

double max_bern_bound(int k) {
    if (k < 2 || k > k_max_order)
        throw std::invalid_argument("max_bern_bound: order must be in [2,16]");
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    const double two_pi = 2.0 * constants::pi;
    return 2.0 * fact * constants::zeta_int[k] / std::pow(two_pi, k);
}

double hurwitz_zeta2(double a) {
    if (!(a > 0.0) || a > 1.0)
        throw std::invalid_argument("hurwitz_zeta2: argument must be in (0,1]");
    constexpr int n_explicit = 16;
    double s = 0.0;
    for (int n = n_explicit - 1; n >= 0; --n) {
        const double d = static_cast<double>(n) + a;
        s += 1.0 / (d * d);
    }
    // Euler-Maclaurin continuation at z = n_explicit + a for f(x) = x^-2:
    //   integral 1/z + boundary 1/(2 z^2) + sum_j B_{2j} z^-(2j+1),
    // remainder below |B_10| z^-11 < 5e-15.
    const double z = static_cast<double>(n_explicit) + a;
    const double iz = 1.0 / z, iz2 = iz * iz;
    double tail = iz + 0.5 * iz2;
    double p = iz * iz2;  // z^-3
    tail += constants::bernoulli_number[2] * p;
    p *= iz2;
    tail += constants::bernoulli_number[4] * p;
    p *= iz2;
    tail += constants::bernoulli_number[6] * p;
    p *= iz2;
    tail += constants::bernoulli_number[8] * p;
    return s + tail;
}

}  // namespace wiltonlab

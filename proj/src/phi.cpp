#include "wiltonlab/phi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wiltonlab/bernoulli.hpp"
#include "wiltonlab/constants.hpp"
#include "wiltonlab/parallel.hpp"

namespace wiltonlab {

namespace {

using float50 = boost::multiprecision::cpp_bin_float_50;

// Euler-Maclaurin expansion of Theta applies from here on; below it we
// integrate interval by interval with exact antiderivatives.
constexpr double k_theta_em_from = 10.0;
constexpr int k_theta_em_order = 14;

// Envelope constant: |Theta(z)| <= (2/3) max|B3| / z^3, max|B3| = 12 zeta(3)/(2pi)^3.
// Rounded up in the last digit so the inequality stays valid.
constexpr double k_theta_envelope = 0.038773;

// -sum_{k=3}^{14} B_k({z}) / (k z^k); remainder below theta_em_remainder(z).
double theta_em_series(double z) {
    const double u = z - std::floor(z);
    const double inv_z = 1.0 / z;
    double zpow = inv_z * inv_z * inv_z;
    double acc = 0.0;
    for (int k = 3; k <= k_theta_em_order; ++k) {
        acc -= periodic_bernoulli(k, u) * zpow / static_cast<double>(k);
        zpow *= inv_z;
    }
    return acc;
}

double theta_em_remainder(double z) {
    return max_bern_bound(k_theta_em_order) /
           (k_theta_em_order * std::pow(z, k_theta_em_order));
}

// int_a^b B2({s})/s^3 ds on [a,b] inside [m, m+1):
// B2({s}) = s^2 - (2m+1) s + (m^2+m+1/6) there.
double theta_piece(double a, double b, double m) {
    const double c1 = 2.0 * m + 1.0;
    const double c2 = 0.5 * (m * m + m + 1.0 / 6.0);
    return std::log1p((b - a) / a) + c1 * (1.0 / b - 1.0 / a) -
           c2 * (1.0 / (b * b) - 1.0 / (a * a));
}

struct sum_bound {
    double sum = 0.0;
    double comp = 0.0;   // Kahan compensation
    double bound = 0.0;  // accumulated per-term certificates
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

eval_result theta_integral(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("theta_integral: z must be positive");
    eval_result r;
    if (z >= k_theta_em_from) {
        r.value = theta_em_series(z);
        r.abs_error_bound = theta_em_remainder(z) + 1e-17;
        r.terms_used = k_theta_em_order - 2;
        return r;
    }
    double acc = 0.0;
    double s = z;
    double m = std::floor(z);
    std::int64_t n_pieces = 0;
    while (s < k_theta_em_from) {
        const double b = std::min(m + 1.0, k_theta_em_from);
        if (b > s) {
            acc += theta_piece(s, b, m);
            ++n_pieces;
        }
        s = b;
        m += 1.0;
    }
    r.value = acc + theta_em_series(k_theta_em_from);
    const double fp_scale = std::max(1.0, 1.0 / (z * z));
    r.abs_error_bound =
        theta_em_remainder(k_theta_em_from) + 2e-15 * static_cast<double>(n_pieces + 1) * fp_scale;
    r.terms_used = n_pieces + 1;
    return r;
}

eval_result tailint_certified(double y, double tol) {
    if (!(y >= 1.0)) throw std::invalid_argument("tailint_certified: y must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tailint_certified: tol must be positive");
    const double tol_eff = std::max(tol, 1e-13);
    // Omitted tail: sum_{n>N} |Theta(ny)| <= envelope/(2 N^2 y^3) <= tol_eff/2.
    const double y3 = y * y * y;
    const double n_real = std::sqrt(k_theta_envelope / (tol_eff * y3));
    const std::int64_t n_terms =
        std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(n_real)), 1,
                                 std::int64_t{1} << 26);

    const std::size_t block = 4096;
    auto parts = blocked_map<sum_bound>(
        static_cast<std::size_t>(n_terms), block,
        [y](std::size_t, std::size_t lo, std::size_t hi) {
            sum_bound acc;
            for (std::size_t i = lo; i < hi; ++i) {
                const eval_result t = theta_integral(static_cast<double>(i + 1) * y);
                acc.add(t.value);
                acc.bound += t.abs_error_bound;
            }
            return acc;
        });
    eval_result r;
    double per_term_bounds = 0.0;
    for (const sum_bound& p : parts) {
        r.value += p.sum;
        per_term_bounds += p.bound;
    }
    const double truncation =
        k_theta_envelope / (2.0 * static_cast<double>(n_terms) * static_cast<double>(n_terms) * y3);
    r.abs_error_bound = truncation + per_term_bounds + 4e-16;
    r.terms_used = n_terms;
    return r;
}

eval_result phi2_certified(double u, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("phi2_certified: tol must be positive");
    u -= std::floor(u);
    if (u == 0.0) {
        // phi2 at integers: B2(0) zeta(2) = pi^2/36 exactly.
        return {constants::pi_sq_over_36, 1e-16, 1};
    }
    const double tol_eff = std::max(tol, 1e-12);
    const double n_real = std::ceil(1.01 / (6.0 * tol_eff));
    const std::int64_t n_cap = (std::int64_t{1} << 31) - 1;
    const std::int64_t n_terms =
        n_real >= static_cast<double>(n_cap) ? n_cap : std::max<std::int64_t>(1, static_cast<std::int64_t>(n_real));

    const std::size_t block = std::size_t{1} << 16;
    auto parts = blocked_map<sum_bound>(
        static_cast<std::size_t>(n_terms), block,
        [u](std::size_t, std::size_t lo, std::size_t hi) {
            // Anchor {n u} exactly at the block head, then walk by adding u
            // (itself exact) and renormalizing; drift is ~eps per step and is
            // accounted for in the returned bound.
            float50 anchor = float50(u) * static_cast<double>(lo + 1);
            anchor -= floor(anchor);
            double x = anchor.convert_to<double>();
            sum_bound acc;
            for (std::size_t i = lo; i < hi; ++i) {
                const double n = static_cast<double>(i + 1);
                acc.add((x * (x - 1.0) + 1.0 / 6.0) / (n * n));
                x += u;
                if (x >= 1.0) x -= 1.0;
            }
            return acc;
        });
    eval_result r;
    for (const sum_bound& p : parts) r.value += p.sum;
    // Tail 1/(6N) plus in-block drift (eps * (H_block + pi^2/12)) and fold slack.
    r.abs_error_bound = 1.0 / (6.0 * static_cast<double>(n_terms)) + 2e-14;
    r.terms_used = n_terms;
    return r;
}

eval_result phi2_rational(std::int64_t num, std::int64_t den) {
    if (den <= 0 || den > 200000)
        throw std::invalid_argument("phi2_rational: denominator must be in [1, 200000]");
    num %= den;
    if (num < 0) num += den;
    if (num == 0) return {constants::pi_sq_over_36, 1e-16, 1};
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    const std::int64_t q = den / g;
    const double inv_q = 1.0 / static_cast<double>(q);
    sum_bound acc;
    std::int64_t res = 0;  // (j * num) mod q
    for (std::int64_t j = 1; j <= q; ++j) {
        res += num;
        if (res >= q) res -= q;
        const double frac_jr = static_cast<double>(res) * inv_q;
        acc.add((frac_jr * (frac_jr - 1.0) + 1.0 / 6.0) *
                hurwitz_zeta2(static_cast<double>(j) / static_cast<double>(q)));
    }
    eval_result r;
    r.value = acc.sum * inv_q * inv_q;
    r.abs_error_bound = 1e-12;  // dominated by the Hurwitz-zeta EM remainder
    r.terms_used = q;
    return r;
}

}  // namespace wiltonlab

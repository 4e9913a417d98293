#include "wiltonlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "wiltonlab/constants.hpp"
#include "wiltonlab/phi.hpp"
#include "wiltonlab/phi_tables.hpp"

namespace wiltonlab {

namespace {

// |phi2^(2)... phi2 has unbounded derivative near rationals, but its modulus
// of continuity is still tame: |phi2(u)-phi2(v)| <= d (log(1/d) + 2.5) for
// d = |u-v| <= 1e-3 (split the series at n ~ 1/(3d)).
constexpr double k_phi2_modulus_slack = 5e-15;  // for d ~ machine epsilon

// curvature envelope |(x^2/2) phi2 - tailint(1/x)| <= (pi^2/36) x^2
constexpr double k_rho_envelope = 0.2742;

eval_result a_one_compute() {
    // A(1) = 1 + sum_{n>=1} s_n,  s_n = 1 + n/(n+1) - 2n log(1+1/n)
    //      = sum_k (-1)^k (k-1)/(k+1) n^-k  (k >= 2).
    constexpr int n_explicit = 10000;
    double sum = 0.0, comp = 0.0;
    for (int n = n_explicit; n >= 1; --n) {
        const double nd = static_cast<double>(n);
        const double s = 1.0 + nd / (nd + 1.0) - 2.0 * nd * std::log1p(1.0 / nd);
        const double y = s - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // Tail sum_{n>N}: (1/3) sum n^-2 - (1/2) sum n^-3 + (3/5) sum n^-4 - ...
    // expanded in 1/N; the dropped orders are below 1.5/N^4.
    const double inv_n = 1.0 / static_cast<double>(n_explicit);
    const double tail =
        inv_n / 3.0 - inv_n * inv_n * (5.0 / 12.0) + inv_n * inv_n * inv_n * (91.0 / 180.0);
    eval_result r;
    r.value = 1.0 + sum + tail;
    r.abs_error_bound = 1.5 * inv_n * inv_n * inv_n * inv_n + 5e-12;
    r.terms_used = n_explicit;
    return r;
}

// phi2({1/x}) with the shift done exactly on the spec; route by kind.
eval_result phi2_at_shift(const real_spec& x, double tol_phi) {
    if (x.is_one()) return {constants::pi_sq_over_36, 1e-16, 1};
    const real_spec shifted = gauss_map(x);
    if (shifted.is_zero()) return {constants::pi_sq_over_36, 1e-16, 1};
    if (shifted.is_rational_value() && shifted.den <= 200000)
        return phi2_rational(static_cast<std::int64_t>(shifted.num),
                             static_cast<std::int64_t>(shifted.den));
    eval_result r = phi2_certified(approx_double(shifted), tol_phi);
    r.abs_error_bound += k_phi2_modulus_slack;
    return r;
}

void require_unit_interval(const real_spec& s, const char* who) {
    if (s.is_zero()) throw domain_error(std::string(who) + ": argument must be in (0,1]");
}

}  // namespace

eval_result a_one() {
    static const eval_result r = a_one_compute();
    return r;
}

eval_result a_lambda(const real_spec& lam, double tol) {
    require_unit_interval(lam, "a_lambda");
    if (!(tol > 0.0)) throw std::invalid_argument("a_lambda: tol must be positive");
    const eval_result a1 = a_one();
    const double lam_d = approx_double(lam);

    if (lam_d < 1e-15) {
        // Both curvature terms are below 0.138 lambda^2; only the linear and
        // log pieces survive at this scale.
        eval_result r;
        if (lam_d == 0.0) return {0.0, 1e-300, 1};  // value below doubles
        const double loginv = log_inv_approx(lam);
        r.value = lam_d * (0.5 * loginv + 0.5 * (1.0 + a1.value));
        r.abs_error_bound = k_rho_envelope * lam_d * lam_d + 1e-12 * lam_d;
        r.terms_used = 1;
        return r;
    }

    const double tol_phi = std::min(0.75 * tol / (lam_d * lam_d), 1e-3);
    const eval_result phi = phi2_at_shift(lam, tol_phi);
    const eval_result tail = tailint_certified(1.0 / lam_d, tol / 4.0);
    const double loginv = log_inv_approx(lam);

    eval_result r;
    r.value = 0.5 * lam_d * loginv + 0.5 * (1.0 + a1.value) * lam_d +
              0.5 * lam_d * lam_d * phi.value - tail.value;
    r.abs_error_bound = 0.5 * lam_d * lam_d * phi.abs_error_bound + tail.abs_error_bound +
                        0.5 * lam_d * a1.abs_error_bound + 1e-14;
    r.terms_used = phi.terms_used + tail.terms_used + a1.terms_used;
    return r;
}

eval_result f_certified(const real_spec& x, double tol) {
    require_unit_interval(x, "f_certified");
    if (!(tol > 0.0)) throw std::invalid_argument("f_certified: tol must be positive");
    const eval_result a1 = a_one();
    const double x_d = approx_double(x);

    // Tiny arguments: F = (A(1) - x)/2 up to the curvature envelope.
    if (k_rho_envelope * x_d * x_d < 0.5 * tol || x_d < 1e-9) {
        eval_result r;
        r.value = 0.5 * (a1.value - x_d);
        r.abs_error_bound =
            k_rho_envelope * x_d * x_d + 0.5 * a1.abs_error_bound + 1e-16;
        r.terms_used = 1;
        return r;
    }

    // Table route when its certificate fits the budget: O(1) instead of a
    // denominator-length or 1/tol-length series. The extra 1e-10 covers the
    // spec -> double argument conversion through phi2's modulus of continuity.
    {
        eval_result ft = f_fast(x_d);
        ft.abs_error_bound += 1e-10;
        if (ft.abs_error_bound <= 0.75 * tol) return ft;
    }

    const double tol_phi = std::min(0.75 * tol / (x_d * x_d), 1e-3);
    const eval_result phi = phi2_at_shift(x, tol_phi);
    const eval_result tail = tailint_certified(1.0 / x_d, 0.5 * tol);

    eval_result r;
    r.value = 0.5 * (a1.value - x_d) - 0.5 * x_d * x_d * phi.value + tail.value;
    r.abs_error_bound = 0.5 * x_d * x_d * phi.abs_error_bound + tail.abs_error_bound +
                        0.5 * a1.abs_error_bound + 1e-14;
    r.terms_used = phi.terms_used + tail.terms_used + a1.terms_used;
    return r;
}

eval_result f_fast(double x) {
    if (!(x > 0.0) || x > 1.0)
        throw domain_error("f_fast: argument must be in (0,1]");
    const double a1 = a_one().value;
    if (x <= 1e-4) {
        return {0.5 * (a1 - x), k_rho_envelope * x * x + 1e-11, 1};
    }
    const double y = 1.0 / x;
    const eval_result phi = phi2_fast(y - std::floor(y));
    const eval_result tau = tau_fast(y);
    eval_result r;
    r.value = 0.5 * (a1 - x) - 0.5 * x * x * phi.value + tau.value;
    // the fractional part of 1/x carries an eps*|1/x| rounding; through the
    // phi2 modulus of continuity that stays below 1e-10 for x > 1e-4
    r.abs_error_bound =
        0.5 * x * x * phi.abs_error_bound + tau.abs_error_bound + 1e-10;
    r.terms_used = phi.terms_used + tau.terms_used;
    return r;
}

eval_result direct_a_oracle(std::int64_t p, std::int64_t q, double t_max) {
    if (p < 1 || q < p) throw domain_error("direct_a_oracle: need 0 < p/q <= 1");
    if (q > 1000000) throw std::invalid_argument("direct_a_oracle: q too large");
    if (!(t_max >= 10.0 * static_cast<double>(q)) || t_max > 1e7)
        throw std::invalid_argument("direct_a_oracle: t_max out of range");
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    const std::int64_t t_end = static_cast<std::int64_t>(t_max / static_cast<double>(q)) * q;
    const double lam = static_cast<double>(p) / static_cast<double>(q);
    const double p_d = static_cast<double>(p);

    // Breakpoints of {t} and {lambda t} have numerators m*p and j*q over the
    // common denominator p; walk the merged progressions exactly in int64.
    double sum = 0.0, comp = 0.0;
    const auto kahan_add = [&](double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    std::int64_t n1 = 0, next_m = p, next_j = q, cm = 0, cj = 0, m = 1, j = 1;
    const std::int64_t n_end = t_end * p;
    std::int64_t pieces = 0;
    while (n1 < n_end) {
        const std::int64_t n2 = std::min(next_m, next_j);
        // integral of (t - cm)(lambda t - cj)/t^2 over [n1/p, n2/p]
        const double delta = static_cast<double>(n2 - n1) / p_d;
        double piece = lam * delta;
        const double coef = static_cast<double>(cj) + lam * static_cast<double>(cm);
        if (coef != 0.0)
            piece -= coef * std::log1p(static_cast<double>(n2 - n1) / static_cast<double>(n1));
        if (cm != 0 && cj != 0)
            piece += static_cast<double>(cm) * static_cast<double>(cj) * p_d *
                     (static_cast<double>(n2 - n1) /
                      (static_cast<double>(n1) * static_cast<double>(n2)));
        kahan_add(piece);
        if (n2 == next_m) {
            cm = m;
            ++m;
            next_m += p;
        }
        if (n2 == next_j) {
            cj = j;
            ++j;
            next_j += q;
        }
        n1 = n2;
        ++pieces;
    }

    // Exact mean of {t}{lambda t} over one period [0, q]: same walk, cubic
    // antiderivative in the offset coordinates d1 = t - cm, d2 = lambda t - cj.
    double mean_sum = 0.0, mean_comp = 0.0;
    n1 = 0;
    next_m = p;
    next_j = q;
    cm = cj = 0;
    m = j = 1;
    const std::int64_t period_end = q * p;
    while (n1 < period_end) {
        const std::int64_t n2 = std::min(next_m, next_j);
        const double delta = static_cast<double>(n2 - n1) / p_d;
        const double d1 = static_cast<double>(n1 - cm * p) / p_d;
        const double d2 = static_cast<double>(n1 - cj * q) / static_cast<double>(q);
        const double piece =
            lam * delta * delta * delta / 3.0 +
            (d2 + lam * d1) * delta * delta / 2.0 + d1 * d2 * delta;
        const double y = piece - mean_comp;
        const double t = mean_sum + y;
        mean_comp = (t - mean_sum) - y;
        mean_sum = t;
        if (n2 == next_m) {
            cm = m;
            ++m;
            next_m += p;
        }
        if (n2 == next_j) {
            cj = j;
            ++j;
            next_j += q;
        }
        n1 = n2;
    }
    const double mean = mean_sum / static_cast<double>(q);

    eval_result r;
    const double t_end_d = static_cast<double>(t_end);
    r.value = sum + mean / t_end_d;
    r.abs_error_bound =
        2.0 * static_cast<double>(q) / (t_end_d * t_end_d) + 4e-16 * t_end_d * (1.0 + lam);
    r.terms_used = std::max<std::int64_t>(pieces, 1);
    return r;
}

}  // namespace wiltonlab

#include "wiltonlab/phi_tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

#include "wiltonlab/bernoulli.hpp"
#include "wiltonlab/constants.hpp"
#include "wiltonlab/phi.hpp"

namespace wiltonlab {

namespace {

// ---------------------------------------------------------------------------
// Main phi2 table: sieve d(N)/(pi^2 N^2) folded mod M, one real-to-complex
// transform, linear interpolation with a computed rigorous certificate.
// ---------------------------------------------------------------------------

constexpr std::size_t k_table_m = std::size_t{1} << 20;
constexpr std::int64_t k_sieve_cutoff = std::int64_t{1} << 24;

struct phi2_table {
    std::vector<double> nodes;  // k_table_m + 1, wrapped
    phi2_table_info info{};
};

// D(S) = sum_{N<=S} d(N) by the hyperbola method.
std::int64_t divisor_summatory(std::int64_t s) {
    const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(s)));
    std::int64_t r = root;
    while ((r + 1) * (r + 1) <= s) ++r;
    while (r * r > s) --r;
    std::int64_t acc = 0;
    for (std::int64_t n = 1; n <= r; ++n) acc += s / n;
    return 2 * acc - r * r;
}

// Rigorous majorant for sum_{N>S} d(N)/N^2, from the symmetric hyperbola
// split and sum_{m>Y} m^-2 <= 2/Y (Y >= 1):  4 (H(sqrt(S)) + 1) / S.
double divisor_tail_bound(double s) {
    const double root = std::sqrt(s);
    const double harmonic = std::log(root) + constants::euler_gamma + 0.5 / root;
    return 4.0 * (harmonic + 1.0) / s;
}

phi2_table build_phi2_table() {
    const std::size_t m = k_table_m;
    const std::size_t mask = m - 1;
    std::vector<double> folded(m, 0.0);
    const double inv_pi2 = 1.0 / (constants::pi * constants::pi);
    for (std::int64_t n = 1; n <= k_sieve_cutoff; ++n) {
        const std::int64_t m_max = k_sieve_cutoff / n;
        const double base = inv_pi2 / static_cast<double>(n * n);
        std::size_t s = static_cast<std::size_t>(n) & mask;
        for (std::int64_t mm = 1; mm <= m_max; ++mm) {
            folded[s] += base / static_cast<double>(mm * mm);
            s = (s + static_cast<std::size_t>(n)) & mask;
        }
    }

    // nodes[j] = sum_s folded[s] cos(2 pi s j / m) = Re DFT(folded)[j]
    std::vector<double> in = folded;
    fftw_complex* out = fftw_alloc_complex(m / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.data(), out, FFTW_ESTIMATE);
    fftw_execute(plan);
    phi2_table t;
    t.nodes.resize(m + 1);
    for (std::size_t j = 0; j <= m / 2; ++j) t.nodes[j] = out[j][0];
    for (std::size_t j = m / 2 + 1; j < m; ++j) t.nodes[j] = out[m - j][0];
    t.nodes[m] = t.nodes[0];
    fftw_destroy_plan(plan);
    fftw_free(out);

    // Certificate. Node error: Fourier tail beyond the sieve cutoff.
    const double node_err =
        inv_pi2 * divisor_tail_bound(static_cast<double>(k_sieve_cutoff)) + 1e-14;
    // Interpolation: components N <= S curve-limited, rest bounded outright;
    // optimize the split with the exact divisor summatory function.
    const double h = 1.0 / static_cast<double>(m);
    double interp = 1.0;  // minimized below
    for (std::int64_t split = 1 << 14; split <= k_sieve_cutoff; split *= 2) {
        const double smooth =
            0.5 * h * h * static_cast<double>(divisor_summatory(split));
        const double rough = 2.0 * inv_pi2 * divisor_tail_bound(static_cast<double>(split));
        interp = std::min(interp, smooth + rough);
    }
    t.info.nodes = m;
    t.info.sieve_cutoff = k_sieve_cutoff;
    t.info.node_error = node_err;
    t.info.interp_error = interp;
    t.info.eval_bound = node_err + interp + 1e-14;
    return t;
}

const phi2_table& main_table() {
    static const phi2_table t = build_phi2_table();
    return t;
}

// ---------------------------------------------------------------------------
// Small periodic tables  T_k(u) = sum_{n>=4} B_k(n u) / n^k,  k = 3..8,
// feeding the k-sum form of the tail integral.
// ---------------------------------------------------------------------------

constexpr int k_small_lo = 3;
constexpr int k_small_hi = 8;
constexpr std::size_t k_small_nodes = 4096;

struct small_table {
    std::vector<double> nodes;  // k_small_nodes + 1, wrapped
    double err = 0.0;           // truncation + interpolation + fp
};

// sum_{n>=4} n^-j  (exact up to the zeta table)
double zeta_tail_from_4(int j) {
    return constants::zeta_int[j] - 1.0 - std::pow(2.0, -j) - std::pow(3.0, -j);
}

small_table build_small_table(int k) {
    // Truncation: max|B_k| / ((k-1) N^(k-1)) <= 5e-8.
    const double target = 5e-8;
    std::int64_t n_cut = 4;
    while (max_bern_bound(k) /
               ((k - 1) * std::pow(static_cast<double>(n_cut), k - 1)) >
           target)
        ++n_cut;

    small_table t;
    t.nodes.resize(k_small_nodes + 1);
    for (std::size_t j = 0; j < k_small_nodes; ++j) {
        const double u = static_cast<double>(j) / static_cast<double>(k_small_nodes);
        double acc = 0.0;
        for (std::int64_t n = n_cut; n >= 4; --n)
            acc += periodic_bernoulli(k, static_cast<double>(n) * u) /
                   std::pow(static_cast<double>(n), k);
        t.nodes[j] = acc;
    }
    t.nodes[k_small_nodes] = t.nodes[0];

    const double h = 1.0 / static_cast<double>(k_small_nodes);
    const double trunc =
        max_bern_bound(k) / ((k - 1) * std::pow(static_cast<double>(n_cut), k - 1));
    double interp;
    if (k == 3) {
        // T_3 is only C^1 (B_2 kinks): use the modulus of continuity of T_3',
        // |T_3'(u) - T_3'(v)| <= 3 sum_{n>=4} min(1/3, n h)/n^2.
        const double n_star = std::ceil(1.0 / (3.0 * h));
        const double omega =
            3.0 * (h * (std::log(n_star / 3.0) + 0.2) + (2.0 / 3.0) / n_star);
        interp = 0.5 * h * omega;
    } else {
        // |T_k''| <= k(k-1) max|B_{k-2}| sum_{n>=4} n^(2-k)
        const double c2 = k * (k - 1) * max_bern_bound(k - 2) * zeta_tail_from_4(k - 2);
        interp = h * h * c2 / 8.0;
    }
    t.err = trunc + interp + 1e-14 * static_cast<double>(n_cut);
    return t;
}

const std::vector<small_table>& small_tables() {
    static const std::vector<small_table> tabs = [] {
        std::vector<small_table> v;
        for (int k = k_small_lo; k <= k_small_hi; ++k) v.push_back(build_small_table(k));
        return v;
    }();
    return tabs;
}

double interp_eval(const std::vector<double>& nodes, std::size_t n, double u) {
    const double x = u * static_cast<double>(n);
    std::size_t j = static_cast<std::size_t>(x);
    if (j >= n) j = n - 1;
    const double frac = x - static_cast<double>(j);
    return nodes[j] + frac * (nodes[j + 1] - nodes[j]);
}

// Dropped Euler-Maclaurin orders beyond k = 8 for the n >= 4 block:
// (max|B_8|/8) sum_{n>=4} n^-8 (an upper envelope for the whole remainder).
double em_drop_bound() {
    static const double b = max_bern_bound(k_small_hi) / k_small_hi *
                            zeta_tail_from_4(k_small_hi);
    return b;
}

}  // namespace

eval_result phi2_fast(double u) {
    const phi2_table& t = main_table();
    u -= std::floor(u);
    if (u < 0.0) u = 0.0;
    eval_result r;
    r.value = interp_eval(t.nodes, k_table_m, u);
    r.abs_error_bound = t.info.eval_bound;
    r.terms_used = 1;
    return r;
}

eval_result tau_fast(double y) {
    if (!(y >= 1.0)) throw std::invalid_argument("tau_fast: y must be >= 1");
    const auto& tabs = small_tables();
    eval_result r;
    double bound = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const eval_result th = theta_integral(static_cast<double>(n) * y);
        r.value += th.value;
        bound += th.abs_error_bound;
    }
    const double x = 1.0 / y;
    const double u = y - std::floor(y);
    double xk = x * x * x;
    for (int k = k_small_lo; k <= k_small_hi; ++k) {
        const small_table& t = tabs[static_cast<std::size_t>(k - k_small_lo)];
        const double w = xk / static_cast<double>(k);
        r.value -= w * interp_eval(t.nodes, k_small_nodes, u);
        bound += w * t.err;
        xk *= x;
    }
    // xk is now x^9; the dropped-order envelope scales like x^8.
    bound += em_drop_bound() * (xk / x);
    r.abs_error_bound = bound + 1e-15;
    r.terms_used = 3 + (k_small_hi - k_small_lo + 1);
    return r;
}

const phi2_table_info& phi2_table_diagnostics() { return main_table().info; }

void warm_tables() {
    main_table();
    small_tables();
}

}  // namespace wiltonlab

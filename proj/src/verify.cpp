#include "wiltonlab/verify.hpp"

#include "wiltonlab/cf.hpp"
#include "wiltonlab/constants.hpp"
#include "wiltonlab/gfun.hpp"
#include "wiltonlab/measure.hpp"
#include "wiltonlab/phi_tables.hpp"
#include "wiltonlab/realspec.hpp"
#include "wiltonlab/rng.hpp"
#include "wiltonlab/special.hpp"
#include "wiltonlab/wilton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiltonlab {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void add(verify_report& rep, const std::string& name, bool pass,
         const std::string& detail, bool informational = false) {
  rep.lines.push_back({name, pass, informational, detail});
}

real_spec random_dyadic(std::uint64_t seed, std::uint64_t index,
                        std::uint32_t tag) {
  sample_rng rng(seed, index, tag);
  return make_dyadic(bigint(rng.next_dyadic_bits(64)), 64);
}

// ---------------------------------------------------------------- cf suite

void suite_cf(verify_report& rep) {
  {
    // Consecutive Gauss-map iterates satisfy alpha_m alpha_{m+1} < 1/2: the
    // source of the two-step halving of beta. Full natural depth, so the
    // terminating alpha = 0 entries are included (trivially fine).
    int violations = 0;
    std::int64_t pairs = 0;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      const real_spec x = random_dyadic(2026, i, 0x414c4641u);  // "ALFA"
      const cf_orbit orb = cf_expand(x);
      for (std::size_t m = 0; m + 1 < orb.alpha.size(); ++m) {
        const double product = orb.alpha[m] * orb.alpha[m + 1];
        worst = std::max(worst, product);
        ++pairs;
        if (!(product <= 0.5)) ++violations;
      }
    }
    add(rep, "cf: alpha_m * alpha_{m+1} <= 1/2 over 10000 orbits",
        violations == 0,
        std::to_string(violations) + " violations in " +
            std::to_string(pairs) + " pairs; max product " + num(worst));
  }
  {
    // Convergents obey the exact integer recurrence and q grows at least as
    // fast as the Fibonacci numbers (q_k >= F_{k+2}).
    std::vector<bigint> fib{1, 1};
    const auto fib_at = [&fib](std::size_t n) -> const bigint& {
      while (fib.size() <= n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
      return fib[n];
    };
    int bad = 0;
    int orbits = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      sample_rng rng(2026, i, 0x434f4e56u);  // "CONV"
      const std::uint64_t den = (rng.next_u64() >> 20) + 2;
      const std::uint64_t numr = rng.next_u64() % (den - 1) + 1;
      const cf_orbit orb = cf_expand(make_rational(bigint(numr), bigint(den)));
      ++orbits;
      bool ok = !orb.p.empty() && orb.p[0] == 1 && orb.q[0] == orb.a[0];
      if (orb.a.size() >= 2) {
        ok = ok && orb.p[1] == orb.a[1] * orb.p[0] &&
             orb.q[1] == orb.a[1] * orb.q[0] + 1;
      }
      for (std::size_t k = 2; k < orb.a.size() && ok; ++k) {
        ok = orb.p[k] == orb.a[k] * orb.p[k - 1] + orb.p[k - 2] &&
             orb.q[k] == orb.a[k] * orb.q[k - 1] + orb.q[k - 2];
      }
      // q[k] is the classical q_{k+1}, so the bound is F_{k+2} (fib[k+1]
      // with fib[0] = fib[1] = 1); the base case q[0] = a[0] can equal 1.
      for (std::size_t k = 0; k < orb.q.size() && ok; ++k) {
        ok = orb.q[k] >= fib_at(k + 1);
      }
      if (!ok) ++bad;
    }
    add(rep, "cf: convergent recurrence exact, q_k grows at Fibonacci rate",
        bad == 0,
        std::to_string(bad) + " failures over " + std::to_string(orbits) +
            " random rational orbits");
  }
  {
    // Rational expansions are exact: the orbit terminates and the last
    // convergent reproduces the reduced input.
    int bad = 0;
    int orbits = 0;
    const auto check_exact = [&](const real_spec& x) {
      const cf_orbit orb = cf_expand(x);
      ++orbits;
      const bool ok = orb.terminated && orb.reason == stop_reason::terminated &&
                      !orb.p.empty() && orb.p.back() == x.num &&
                      orb.q.back() == x.den && orb.r.back() == 0;
      if (!ok) ++bad;
    };
    for (const char* txt : {"13/29", "355/452", "1/2", "999983/1000000"}) {
      check_exact(parse_real(txt));
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
      sample_rng rng(2026, i, 0x45584354u);  // "EXCT"
      const std::uint64_t den = (rng.next_u64() >> 16) + 2;
      const std::uint64_t numr = rng.next_u64() % (den - 1) + 1;
      check_exact(make_rational(bigint(numr), bigint(den)));
    }
    add(rep, "cf: rational expansion exact (last convergent == input)",
        bad == 0,
        std::to_string(bad) + " failures over " + std::to_string(orbits) +
            " expansions");
  }
  {
    // The orbit's alpha_k agree with the exact iterated Gauss map.
    double worst = 0.0;
    int bad = 0;
    int compared = 0;
    for (const char* txt :
         {"[0;(1)]", "[0;(2)]", "[0;2,(1,2)]", "[0;1,2,3,(4,5)]", "13/29"}) {
      real_spec point = parse_real(txt);
      cf_options opts;
      opts.max_terms = 12;
      const cf_orbit orb = cf_expand(parse_real(txt), opts);
      for (int k = 0; k < orb.depth(); ++k) {
        const double diff = std::abs(orb.alpha[static_cast<std::size_t>(k)] -
                                     approx_double(point));
        worst = std::max(worst, diff);
        ++compared;
        if (!(diff <= 1e-11)) ++bad;
        if (point.is_zero()) break;
        point = gauss_map(point);
        if (point.is_zero()) break;
      }
    }
    add(rep, "cf: orbit alphas match the iterated Gauss map (tol 1e-11)",
        bad == 0,
        std::to_string(bad) + " mismatches over " + std::to_string(compared) +
            " iterates; max |diff| " + num(worst));
  }
}

// ----------------------------------------------------------- special suite

void suite_special(verify_report& rep) {
  {
    const eval_result a1 = a_one();
    const double diff = std::abs(a1.value - constants::a_one_closed_form);
    add(rep, "special: A(1) series vs log(2 pi) - gamma (tol 1e-8)",
        diff <= 1e-8, "|diff| " + num(diff) + ", series bound " +
                          num(a1.abs_error_bound));
  }
  {
    // |phi2| <= pi^2/36 everywhere; the table route must respect it up to
    // its own certificate.
    int violations = 0;
    double worst = -1.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      sample_rng rng(2026, i, 0x50484932u);  // "PHI2"
      const double u = rng.next_unit();
      const eval_result r = phi2_fast(u);
      const double excess =
          std::abs(r.value) - constants::pi_sq_over_36 - r.abs_error_bound;
      worst = std::max(worst, excess);
      if (excess > 0.0) ++violations;
    }
    add(rep, "special: |phi2(u)| <= pi^2/36 over 10000 random u",
        violations == 0,
        std::to_string(violations) + " violations; max excess over bound " +
            num(worst));
  }
  {
    // A(lambda) = (lambda/2) log(1/lambda) + ((1+A(1))/2) lambda + O(lambda^2)
    // with one constant fitted at the largest lambda covering the whole
    // decade; the Lemma envelope pi^2/36 lambda^2 must hold as well.
    const double a1 = a_one().value;
    const auto remainder = [&](int k) {
      const real_spec lam = make_rational(1, std::int64_t{1} << k);
      const double lam_d = approx_double(lam);
      return a_lambda(lam, 1e-11).value - 0.5 * lam_d * std::log(1.0 / lam_d) -
             0.5 * (1.0 + a1) * lam_d;
    };
    const double c_fit = std::abs(remainder(4)) / std::pow(2.0, -8);
    bool ok = std::abs(c_fit - constants::pi_sq_over_72) < 0.01;
    double worst_ratio = 0.0;
    for (int k = 4; k <= 12; ++k) {
      const double lam = std::pow(2.0, -k);
      const double r = std::abs(remainder(k));
      worst_ratio = std::max(worst_ratio, r / (lam * lam));
      ok = ok && r <= c_fit * lam * lam * 1.002 + 1e-10 &&
           r <= constants::pi_sq_over_36 * lam * lam + 1e-10;
    }
    add(rep, "special: quadratic remainder of A, one constant per decade", ok,
        "fitted C " + num(c_fit) + " (pi^2/72 = " +
            num(constants::pi_sq_over_72) + "), max |R|/lambda^2 " +
            num(worst_ratio));
  }
  {
    bool positive = true;
    double least = std::numeric_limits<double>::infinity();
    for (auto numr : {1, 7, 137, 999, 1000}) {
      const double v = a_lambda(make_rational(numr, 1000), 1e-9).value;
      least = std::min(least, v);
      positive = positive && v > 0.0;
    }
    const eval_result f1 = f_certified(parse_real("1"), 1e-10);
    const bool f_zero = std::abs(f1.value) <= std::max(f1.abs_error_bound, 1e-9);
    add(rep, "special: A > 0 on (0,1] grid and F(1) = 0", positive && f_zero,
        "min A " + num(least) + "; |F(1)| " + num(std::abs(f1.value)));
  }
}

// ------------------------------------------------------------ wilton suite

void suite_wilton(verify_report& rep) {
  {
    const double g = constants::golden_frac;
    const wilton_eval wg = wilton(parse_real("[0;(1)]"), 1e-12);
    const double golden_diff = std::abs(wg.value - std::log(1.0 / g) / (1.0 + g));
    const double s = std::sqrt(2.0);
    const wilton_eval ws = wilton(parse_real("[0;(2)]"), 1e-12);
    const double sqrt2_diff = std::abs(ws.value - std::log(1.0 + s) / s);
    add(rep, "wilton: closed forms at the golden section and sqrt(2)-1",
        golden_diff <= 1e-10 && sqrt2_diff <= 1e-10,
        "|diff| " + num(golden_diff) + " and " + num(sqrt2_diff) +
            " (tol 1e-10)");
  }
  {
    // W(x) = log(1/x) - x W(a(x)) within the two certified bounds.
    int tested = 0;
    int violations = 0;
    double worst = -1.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const real_spec x = random_dyadic(2026, i, 0x57494c54u);  // "WILT"
      const real_spec shifted = gauss_map(x);
      if (shifted.is_zero()) continue;  // power-of-two numerator
      const wilton_eval w = wilton(x, 1e-9);
      const wilton_eval w_shift = wilton(shifted, 1e-9);
      const double xd = approx_double(x);
      const double residual =
          w.value - (log_inv_approx(x) - xd * w_shift.value);
      const double allowed =
          w.abs_error_bound + xd * w_shift.abs_error_bound + 1e-12;
      ++tested;
      worst = std::max(worst, std::abs(residual) - allowed);
      if (!(std::abs(residual) <= allowed)) ++violations;
    }
    add(rep, "wilton: functional equation residual on 1000 dyadics",
        violations == 0 && tested >= 995,
        std::to_string(violations) + " violations over " +
            std::to_string(tested) + " points; max residual minus bound " +
            num(worst));
  }
  {
    // L2(m) contraction: int (T^n l)^2 dm <= golden^{2(n-1)} int l^2 dm,
    // midpoint quadrature over 2^15 nodes (10% quadrature slack).
    constexpr int k_nodes = 1 << 15;
    constexpr int k_max_n = 8;
    std::vector<double> lhs(k_max_n + 1, 0.0);
    for (int i = 0; i < k_nodes; ++i) {
      const real_spec x = make_rational(bigint(2 * i + 1), bigint(2 * k_nodes));
      cf_options opts;
      opts.max_terms = k_max_n + 1;
      const cf_orbit orb = cf_expand(x, opts);
      const double weight =
          1.0 / (k_nodes * (1.0 + approx_double(x)) * constants::ln2);
      for (int n = 0; n <= k_max_n && n < orb.depth(); ++n) {
        lhs[static_cast<std::size_t>(n)] += weight * orb.gamma[static_cast<std::size_t>(n)] *
                                            orb.gamma[static_cast<std::size_t>(n)];
      }
    }
    bool ok = true;
    double worst_ratio = 0.0;
    for (int n = 1; n <= k_max_n; ++n) {
      const double rhs =
          std::pow(constants::golden_frac, 2 * (n - 1)) * lhs[0];
      worst_ratio = std::max(worst_ratio, lhs[static_cast<std::size_t>(n)] / rhs);
      ok = ok && lhs[static_cast<std::size_t>(n)] <= rhs * 1.1 + 1e-9;
    }
    add(rep, "wilton: L2(m) contraction of the transfer operator, n = 1..8",
        ok, "max quadrature lhs/rhs " + num(worst_ratio) + " (allowed 1.1)");
  }
  {
    // Even/odd partial sums bracketing W is empirical: it fails whenever a
    // large partial quotient makes the gamma terms non-monotone. Reported,
    // never asserted.
    int checked = 0;
    int violated = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const real_spec x = random_dyadic(7, i, 0x4252414bu);  // "BRAK"
      const wilton_eval wx = wilton(x, 1e-11);
      if (wx.depth < 8) continue;
      ++checked;
      for (int m = 0; m <= 3; ++m) {
        const double even = partial_sum_l(x, 2 * m);
        const double odd = partial_sum_l(x, 2 * m + 1);
        if (!(odd - 1e-9 <= wx.value && wx.value <= even + 1e-9)) ++violated;
      }
    }
    add(rep, "wilton: even/odd partial-sum bracketing (empirical)",
        violated == 0,
        std::to_string(violated) + " of " + std::to_string(4 * checked) +
            " checks violated; expected nonzero, no theorem claims this",
        /*informational=*/true);
  }
}

// -------------------------------------------------------------- gfun suite

void suite_gfun(verify_report& rep) {
  {
    // Fast route W + H vs the direct conditionally-convergent series. The
    // oracle bound is asymptotic, so points hugging a convergent get one
    // retry at a larger truncation.
    int fails = 0;
    int escalated = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const real_spec x = random_dyadic(2027, i, 0x524f5554u);  // "ROUT"
      const eval_result fast = g_fast(x, 1e-4);
      eval_result slow = g_series_oracle(x, 200000, 100000);
      if (std::abs(slow.value - fast.value) >
          slow.abs_error_bound + fast.abs_error_bound) {
        ++escalated;
        slow = g_series_oracle(x, 4000000, 2000000);
      }
      if (std::abs(slow.value - fast.value) >
          slow.abs_error_bound + fast.abs_error_bound) {
        ++fails;
      }
    }
    add(rep, "gfun: route equivalence g_fast vs series oracle, 100 dyadics",
        fails == 0 && escalated <= 15,
        std::to_string(fails) + " disagreements; " +
            std::to_string(escalated) + " points escalated (allowed 15)");
  }
  {
    const double tol = 1e-5;
    int bad = 0;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const real_spec x = random_dyadic(2028, i, 0x414e5449u);  // "ANTI"
      const real_spec mirrored = make_dyadic(x.den - x.num, x.width);
      const eval_result a = g_fast(x, tol);
      const eval_result b = g_fast(mirrored, tol);
      const double sum = std::abs(a.value + b.value);
      worst = std::max(worst, sum);
      if (!(sum <= a.abs_error_bound + b.abs_error_bound && sum <= 2.0 * tol))
        ++bad;
    }
    add(rep, "gfun: antisymmetry g(1-x) = -g(x), 100 mirrored pairs",
        bad == 0, std::to_string(bad) + " violations; max |g(x)+g(1-x)| " +
                      num(worst) + " (allowed " + num(2.0 * tol) + ")");
  }
  {
    // Pinned cotangent values and the exact antisymmetry of the reflected-
    // residue evaluation, sampled up to b = 10^4.
    bool ok = cotangent_sum(1, 2) == 0.0;
    const double third_diff =
        std::abs(cotangent_sum(1, 3) - 1.0 / (3.0 * std::sqrt(3.0)));
    ok = ok && third_diff <= 1e-12;
    std::int64_t pairs = 0;
    for (std::int64_t b : {5, 12, 101, 1024, 9973, 10000}) {
      const std::int64_t step = std::max<std::int64_t>(1, (b - 1) / 40);
      for (std::int64_t r = 1; r < b; r += step) {
        if (std::gcd(r, b) != 1) continue;
        ++pairs;
        ok = ok && cotangent_sum(b - r, b) == -cotangent_sum(r, b);
      }
    }
    add(rep, "gfun: cotangent pinned values and exact antisymmetry", ok,
        "c0(1/2) = 0, |c0(1/3) - 1/(3 sqrt 3)| " + num(third_diff) + ", " +
            std::to_string(pairs) + " mirrored pairs exact up to b = 10000");
  }
  {
    // Reciprocity-related pairs (r, r^{-1} mod b) are evaluated and recorded;
    // the identity itself stays outside scope.
    const std::int64_t b = 29;
    int finite = 0;
    int total = 0;
    for (std::int64_t r = 1; r < b; ++r) {
      std::int64_t r_inv = 0;
      for (std::int64_t c = 1; c < b; ++c) {
        if ((c * r) % b == 1) r_inv = c;
      }
      ++total;
      if (std::isfinite(cotangent_sum(r, b)) &&
          std::isfinite(cotangent_sum(r_inv, b)))
        ++finite;
    }
    add(rep, "gfun: cotangent reciprocity pairs recorded, not asserted",
        finite == total,
        std::to_string(finite) + "/" + std::to_string(total) +
            " inverse pairs at b = 29 evaluate finite",
        /*informational=*/true);
  }
}

// ------------------------------------------------------------ measure suite

double kolmogorov_stat(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double cdf = std::log2(1.0 + xs[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - cdf,
                             cdf - static_cast<double>(i) / n));
  }
  return d;
}

void suite_measure(verify_report& rep) {
  {
    // Invariance m(a^{-1}(I)) = m(I) through the branch decomposition.
    sample_rng rng(2026, 0, 0x4d455352u);  // "MESR"
    int checked = 0;
    int bad = 0;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      double a = rng.next_unit();
      double b = rng.next_unit();
      if (a > b) std::swap(a, b);
      if (b - a < 1e-6) continue;
      const interval iv{a, b};
      const eval_result r = preimage_measure(iv, 100000);
      const double diff = std::abs(r.value - gauss_measure(iv));
      worst = std::max(worst, diff);
      ++checked;
      if (!(diff <= 1e-9 && r.abs_error_bound < 1e-9)) ++bad;
    }
    add(rep, "measure: preimage vs gauss_measure on 100 intervals (1e-9)",
        bad == 0 && checked >= 90,
        std::to_string(bad) + " violations over " + std::to_string(checked) +
            " intervals; max |diff| " + num(worst));
  }
  {
    const std::int64_t n = 100000;
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] =
          sample_gauss_point(99, static_cast<std::uint64_t>(i));
    }
    const double stat = kolmogorov_stat(std::move(xs));
    add(rep, "measure: KS statistic of 1e5 Gauss-measure draws < 0.01",
        stat < 0.01, "KS " + num(stat) + " (5% critical value " +
                         num(1.36 / std::sqrt(static_cast<double>(n))) + ")");
  }
  {
    int bad = 0;
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      for (double p : {1.25, 1.5, 2.0}) {
        const mc_report r = transfer_norm_ratio(n, p, 20000, 4242);
        worst = std::max(worst, r.estimate / r.bound);
        if (!r.pass) ++bad;
      }
    }
    add(rep, "measure: transfer norm ratios under golden^{(n-1)p}, 18 cells",
        bad == 0, std::to_string(bad) +
                      " cells above bound + 3 sigma; max estimate/bound " +
                      num(worst));
  }
  {
    // Exceptional-set probe: the stated bound's proof lives outside the
    // paper trail implemented here, so the comparison is informational.
    const mc_report r = j_set_probe(2, 2, 0.5, 0.5, 20000, 11);
    add(rep, "measure: exceptional-set probe vs stated tail bound",
        r.pass, "estimate " + num(r.estimate) + " +- " + num(r.std_error) +
                    " vs bound " + num(r.bound) + " (recorded only)",
        /*informational=*/true);
  }
}

}  // namespace

int verify_report::hard_failures() const {
  int n = 0;
  for (const auto& line : lines) {
    if (!line.pass && !line.informational) ++n;
  }
  return n;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"cf", "special", "wilton",
                                              "gfun", "measure"};
  return names;
}

verify_report run_verify_suite(const std::string& suite) {
  verify_report rep;
  rep.suite = suite;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "cf") suite_cf(rep), known = true;
  if (all || suite == "special") suite_special(rep), known = true;
  if (all || suite == "wilton") suite_wilton(rep), known = true;
  if (all || suite == "gfun") suite_gfun(rep), known = true;
  if (all || suite == "measure") suite_measure(rep), known = true;
  if (!known) {
    throw std::invalid_argument(
        "unknown verify suite '" + suite +
        "' (expected cf, special, wilton, gfun, measure, or all)");
  }
  return rep;
}

}  // namespace wiltonlab

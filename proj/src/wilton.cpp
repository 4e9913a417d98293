#include "wiltonlab/wilton.hpp"

#include "wiltonlab/cf.hpp"
#include "wiltonlab/special.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wiltonlab {

namespace {

void require_tol(double tol, const char* who) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument(std::string(who) +
                                ": tol must be positive and finite");
  }
}

// Kahan-compensated alternating sum of gamma[0..count).
double alternating_sum(const std::vector<double>& gamma, std::size_t count) {
  double sum = 0.0;
  double comp = 0.0;
  double sign = 1.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double term = sign * gamma[k] - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    sign = -sign;
  }
  return sum;
}

}  // namespace

wilton_eval wilton(const real_spec& x, double tol) {
  require_tol(tol, "wilton");
  cf_options opts;
  opts.tol = tol;
  return wilton(cf_expand(x, opts));
}

wilton_eval wilton(const cf_orbit& orbit) {
  wilton_eval out;
  out.value = alternating_sum(orbit.gamma, orbit.gamma.size());
  out.abs_error_bound = orbit.tail_bound;
  out.depth = orbit.depth();
  out.terminated = orbit.terminated;
  return out;
}

double partial_sum_l(const real_spec& x, int n) {
  if (n < 0) throw std::invalid_argument("partial_sum_l: n must be >= 0");
  cf_options opts;
  opts.max_terms = n + 1;
  const cf_orbit orbit = cf_expand(x, opts);
  return alternating_sum(orbit.gamma, orbit.gamma.size());
}

double transfer_apply_l(const real_spec& x, int n) {
  if (n < 0) throw std::invalid_argument("transfer_apply_l: n must be >= 0");
  cf_options opts;
  opts.max_terms = n + 1;
  const cf_orbit orbit = cf_expand(x, opts);
  if (static_cast<int>(orbit.gamma.size()) <= n) {
    throw domain_error("transfer_apply_l: orbit of " + format_real(x) +
                       " ends at depth " + std::to_string(orbit.depth()) +
                       " <= n = " + std::to_string(n));
  }
  return orbit.gamma[n];
}

eval_result g_big(const real_spec& x, double tol) {
  require_tol(tol, "g_big");
  // The orbit's own stopping rule guarantees (beta_{n-1} + beta_n) <=
  // cf_tol / (2 log 2) at a tolerance stop, so the F-series tail below comes
  // out at roughly cf_tol once multiplied by 2 * k_f_max.
  cf_options opts;
  opts.tol = 0.25 * tol;
  return g_big(x, cf_expand(x, opts), tol);
}

eval_result g_big(const real_spec& x, const cf_orbit& orbit, double tol) {
  require_tol(tol, "g_big");
  const int n = orbit.depth();
  // Term j uses alpha_j; a terminated orbit has alpha[n] == 0 exactly, so its
  // series ends at j = n - 1. A tolerance-stopped orbit still has a live
  // alpha[n] > 0 and we include it as the last term.
  const int j_last = orbit.terminated ? n - 1 : n;

  const double tol_f = 0.125 * tol;
  // Rational-valued orbits never revisit a point (the Euclid remainders
  // strictly decrease), so alpha_j is built straight from the stored
  // remainders: alpha_j = r_j / r_{j-1} with r_{-1} = den, already coprime
  // once the input's common factor is divided out. Periodic orbits do repeat
  // (that is what makes them periodic), so they keep the memoised
  // gauss_map chain instead.
  const bool remainder_orbit = x.is_rational_value();
  bigint common = 1;
  if (remainder_orbit) common = boost::multiprecision::gcd(x.num, x.den);
  std::unordered_map<std::string, eval_result> f_memo;
  real_spec shifted = x;

  double sum = 0.0;
  double comp = 0.0;
  double bound = 0.0;
  double abs_acc = 0.0;
  std::int64_t terms = 0;
  for (int j = 0; j <= j_last; ++j) {
    eval_result f;
    if (remainder_orbit) {
      if (j == 0) {
        f = f_certified(x, tol_f);
      } else {
        real_spec aj;
        aj.kind = spec_kind::rational;
        aj.num = orbit.r[static_cast<std::size_t>(j)] / common;
        aj.den = orbit.r[static_cast<std::size_t>(j) - 1] / common;
        f = f_certified(aj, tol_f);
      }
    } else {
      if (j > 0) shifted = gauss_map(shifted);
      const std::string key = format_real(shifted);
      auto it = f_memo.find(key);
      if (it == f_memo.end()) {
        it = f_memo.emplace(key, f_certified(shifted, tol_f)).first;
      }
      f = it->second;
    }
    const double weight = (j == 0) ? 1.0 : orbit.beta[static_cast<std::size_t>(j) - 1];
    const double signed_term = ((j % 2 == 0) ? 1.0 : -1.0) * weight * f.value;
    const double term = signed_term - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    bound += weight * f.abs_error_bound;
    abs_acc += weight * std::abs(f.value);
    ++terms;
  }

  double tail = 0.0;
  if (!orbit.terminated) {
    // sum_{j > n} beta_{j-1} = sum_{i >= n} beta_i <= 2 (beta_n + beta_{n+1})
    // by the two-step halving beta_{k+2} < beta_k / 2, and beta_{n+1} <=
    // beta_{n-1} / 2 for the unseen entry.
    const double beta_n = orbit.alpha.size() > static_cast<std::size_t>(n)
                              ? orbit.beta[static_cast<std::size_t>(n)]
                              : 0.0;
    const double beta_nm1 =
        (n >= 1) ? orbit.beta[static_cast<std::size_t>(n) - 1] : 1.0;
    tail = k_f_max * (2.0 * beta_n + beta_nm1);
  }

  eval_result out;
  out.value = sum;
  out.abs_error_bound =
      bound + tail +
      64.0 * std::numeric_limits<double>::epsilon() * (abs_acc + 1.0);
  out.terms_used = terms > 0 ? terms : 1;
  out.terminated = orbit.terminated;
  return out;
}

eval_result h_func(const real_spec& x, double tol) {
  require_tol(tol, "h_func");
  eval_result g = g_big(x, 0.5 * tol);
  g.value *= -2.0;
  g.abs_error_bound *= 2.0;
  return g;
}

}  // namespace wiltonlab

#include "wiltonlab/cf.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace wiltonlab {

namespace {

using float50 = boost::multiprecision::cpp_bin_float_50;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Coefficient stream a_{i+1} for i = 0,1,... of a CF-form spec.
std::uint64_t cf_coeff(const real_spec& x, std::size_t i) {
  if (i < x.prefix.size()) return x.prefix[i];
  return x.cycle[(i - x.prefix.size()) % x.cycle.size()];
}

// Tail value alpha_k = [0; a_{k+1}, a_{k+2}, ...] of a CF-form spec, in
// extended precision (truncation error ~ 1/F_192^2, far below 1e-50).
float50 cf_tail_value(const real_spec& x, std::size_t k) {
  float50 v = 0;
  for (std::size_t i = k + 192; i-- > k;) v = 1 / (float50(cf_coeff(x, i)) + v);
  return v;
}

double log_of(const bigint& v) {
  if (msb(v) <= 1020) return std::log(static_cast<double>(v));
  return static_cast<double>(log(float50(v)));
}

using uint128 = unsigned __int128;

// Euclidean remainder walker. Narrow denominators (the common case, including
// width-64 dyadics) run on unsigned __int128; anything wider falls back to
// bigint, and truly huge remainders go through float50 for the float views.
struct rational_walker {
  bigint r_prev_b, r_cur_b;    // wide-path remainders
  uint128 s_prev = 0, s_cur = 0, s_den = 0;
  bool small;  // denominator fits 126 bits: use the uint128 lane
  bool wide;   // remainders may overflow double: go through float50

  rational_walker(const real_spec& x)
      : small(msb(x.den) <= 126), wide(msb(x.den) > 900) {
    if (small) {
      s_den = s_prev = static_cast<uint128>(x.den);
      s_cur = static_cast<uint128>(x.num);
    } else {
      r_prev_b = x.den;
      r_cur_b = x.num;
    }
  }

  bool done() const { return small ? s_cur == 0 : r_cur_b == 0; }
  bigint peek_a() const {
    return small ? bigint(s_prev / s_cur) : r_prev_b / r_cur_b;
  }
  bigint current_r() const { return small ? bigint(s_cur) : r_cur_b; }

  double alpha() const {
    if (small) {
      return s_cur == 0
                 ? 0.0
                 : static_cast<double>(s_cur) / static_cast<double>(s_prev);
    }
    return ratio(r_cur_b, r_prev_b);
  }
  double ratio(const bigint& num, const bigint& den) const {
    if (num == 0) return 0.0;
    if (!wide) return static_cast<double>(num) / static_cast<double>(den);
    return static_cast<double>(float50(num) / float50(den));
  }
  // beta_k = r_k / den exactly: one rounding instead of a k-fold product
  double beta(const bigint& den) const {
    if (small) {
      return s_cur == 0
                 ? 0.0
                 : static_cast<double>(s_cur) / static_cast<double>(s_den);
    }
    return ratio(r_cur_b, den);
  }
  double log_inv_alpha() const {
    if (!wide) return -std::log(alpha());
    return static_cast<double>(log(float50(r_prev_b) / float50(r_cur_b)));
  }
  // bound on log(1/alpha_j) for every later level j
  double future_log_cap() const {
    if (small) return std::max(std::log(static_cast<double>(s_cur)), 1.0);
    return std::max(log_of(r_cur_b), 1.0);
  }

  void step() {
    if (small) {
      const uint128 s_next = s_prev % s_cur;
      s_prev = s_cur;
      s_cur = s_next;
      return;
    }
    bigint r_next = r_prev_b % r_cur_b;
    r_prev_b = std::move(r_cur_b);
    r_cur_b = std::move(r_next);
  }
};

}  // namespace

const char* stop_reason_name(stop_reason r) {
  switch (r) {
    case stop_reason::terminated: return "terminated";
    case stop_reason::tolerance: return "tolerance";
    case stop_reason::q_limit: return "q-limit";
    case stop_reason::max_terms: return "max-terms";
  }
  return "?";
}

cf_orbit cf_expand(const real_spec& x, const cf_options& opts) {
  if (x.is_zero()) throw domain_error("cf_expand needs x > 0");
  cf_orbit orb;

  const bool is_cf = !x.is_rational_value();
  rational_walker walk(is_cf ? make_rational(1, 2) : x);  // unused for cf kind
  std::vector<float50> cf_alpha;  // alpha_k values for the cf kind
  double cf_future_cap = 0.0;     // sup of log(1/alpha_j) over all levels
  if (is_cf) {
    // alpha_k depends only on the tail, which is eventually periodic: compute
    // the prefix levels individually, then one value per cycle rotation.
    const std::size_t P = x.prefix.size(), L = x.cycle.size();
    for (std::size_t k = 0; k <= P + L; ++k)
      cf_alpha.push_back(cf_tail_value(x, k));
    for (std::size_t k = 0; k <= P + L; ++k)
      cf_future_cap = std::max(
          cf_future_cap, static_cast<double>(-log(cf_alpha[k])));
  }
  auto cf_alpha_at = [&](std::size_t k) -> const float50& {
    const std::size_t P = x.prefix.size(), L = x.cycle.size();
    return k < P ? cf_alpha[k] : cf_alpha[P + (k - P) % L];
  };

  if (!is_cf) orb.den = x.den;

  bigint q_prev = 0, q_cur = 1, p_prev = 1, p_cur = 0;  // (p,q)_{-1}, (p,q)_0
  const bigint* q_sq_cap = (x.kind == spec_kind::dyadic) ? &x.den : nullptr;

  float50 cf_beta = 1;  // running beta for the cf kind (extended precision)
  double beta_prev = 1.0;            // beta_{k-1}
  double beta_cur, log_inv_alpha;    // beta_k, log(1/alpha_k)

  if (is_cf) {
    beta_cur = static_cast<double>(cf_beta = cf_alpha_at(0));
    log_inv_alpha = static_cast<double>(-log(cf_alpha_at(0)));
    orb.alpha.push_back(static_cast<double>(cf_alpha_at(0)));
  } else {
    orb.r.push_back(walk.current_r());
    orb.alpha.push_back(walk.alpha());
    log_inv_alpha = walk.log_inv_alpha();
    beta_cur = orb.alpha[0];
  }
  orb.beta.push_back(beta_cur);

  double sum_abs_gamma = 0.0;
  bool grid_stop = false;  // a convergent crossed the dyadic grid resolution
  int k = 0;
  while (true) {
    // Termination: alpha_k = 0, the expansion is complete and exact.
    if (!is_cf && walk.done()) {
      orb.reason = stop_reason::terminated;
      orb.terminated = true;
      orb.tail_bound = 128.0 * kEps * sum_abs_gamma;
      break;
    }

    const bigint a_next = is_cf ? bigint(cf_coeff(x, k)) : walk.peek_a();
    // Majorant for log(1/alpha_j) over every omitted level j >= k.
    const double m_cap =
        std::max(log_inv_alpha,
                 std::max(log_of(a_next + 1),
                          is_cf ? cf_future_cap : walk.future_log_cap()));
    const double omit_from_k = 2.0 * m_cap * (beta_prev + beta_cur);

    if (grid_stop) {
      orb.reason = stop_reason::q_limit;
      orb.tail_bound = omit_from_k + 128.0 * kEps * sum_abs_gamma;
      break;
    }
    if (opts.tol > 0 &&
        omit_from_k + 128.0 * kEps * sum_abs_gamma < opts.tol) {
      orb.reason = stop_reason::tolerance;
      orb.tail_bound = omit_from_k + 128.0 * kEps * sum_abs_gamma;
      break;
    }
    if (k >= opts.max_terms) {
      orb.reason = stop_reason::max_terms;
      orb.tail_bound = omit_from_k + 128.0 * kEps * sum_abs_gamma;
      break;
    }
    bigint q_next = a_next * q_cur + q_prev;
    if (opts.q_limit > 0 && q_next > opts.q_limit) {
      orb.reason = stop_reason::q_limit;
      orb.tail_bound = omit_from_k + 128.0 * kEps * sum_abs_gamma;
      break;
    }
    // The dyadic grid resolves convergents up to q^2 ~ 2^width; the first one
    // past that line is still reported, everything beyond is a grid artifact.
    if (q_sq_cap && q_next * q_next > *q_sq_cap) grid_stop = true;

    // Accept partial quotient a_{k+1}: emit gamma_k, advance to level k+1.
    bigint p_next = a_next * p_cur + p_prev;
    orb.a.push_back(a_next);
    orb.p.push_back(p_next);
    orb.q.push_back(q_next);
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);

    const double gamma_k = beta_prev * log_inv_alpha;
    orb.gamma.push_back(gamma_k);
    sum_abs_gamma += gamma_k;

    ++k;
    beta_prev = beta_cur;
    if (is_cf) {
      const float50& al = cf_alpha_at(k);
      cf_beta *= al;
      beta_cur = static_cast<double>(cf_beta);
      log_inv_alpha = static_cast<double>(-log(al));
      orb.alpha.push_back(static_cast<double>(al));
    } else {
      walk.step();
      orb.r.push_back(walk.current_r());
      orb.alpha.push_back(walk.alpha());
      log_inv_alpha = walk.done() ? 0.0 : walk.log_inv_alpha();
      beta_cur = walk.done() ? 0.0 : walk.beta(x.den);
    }
    orb.beta.push_back(beta_cur);
  }

  orb.truncated_at = k;
  return orb;
}

}  // namespace wiltonlab

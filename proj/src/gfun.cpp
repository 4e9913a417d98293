#include "wiltonlab/gfun.hpp"

#include "wiltonlab/constants.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/wilton.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiltonlab {

namespace {

using float50 = boost::multiprecision::cpp_bin_float_50;

struct kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double term = v - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
};

// Value of a CF-form spec in extended precision (truncation at 192 levels
// past the prefix is far below 1e-50).
float50 cf_value(const real_spec& x) {
  const std::size_t P = x.prefix.size(), L = x.cycle.size();
  const std::size_t K = P + (L > 0 ? 192 : 0);
  float50 v = 0;
  for (std::size_t i = K; i-- > 0;) {
    const std::uint64_t a =
        i < P ? x.prefix[i] : x.cycle[(i - P) % L];
    v = 1 / (float50(a) + v);
  }
  return v;
}

// Per-term numerator feed: yields t_l = 1 - 2{lx} exactly enough that the
// mirrored input x -> 1-x produces the exact floating-point negation.
class term_stream {
 public:
  explicit term_stream(const real_spec& x) {
    if (x.kind == spec_kind::dyadic) {
      mode_ = mode::dyadic;
      width_ = x.width;
      step_u64_ = static_cast<std::uint64_t>(x.num);
    } else if (x.is_rational_value() && msb(x.den) <= 61) {
      mode_ = mode::small_rational;
      den_u64_ = static_cast<std::uint64_t>(x.den);
      step_u64_ = static_cast<std::uint64_t>(x.num);
    } else if (x.is_rational_value()) {
      mode_ = mode::big_rational;
      den_big_ = x.den;
      step_big_ = x.num;
    } else {
      mode_ = mode::extended;
      step_f50_ = cf_value(x);
    }
  }

  double next() {
    switch (mode_) {
      case mode::dyadic: {
        acc_u64_ += step_u64_;
        if (width_ < 64) acc_u64_ &= (std::uint64_t(1) << width_) - 1;
        // 1 - 2 acc/2^w = (2^{w-1} - acc) / 2^{w-1}, exact signed distance.
        const std::uint64_t half = std::uint64_t(1) << (width_ - 1);
        const auto num = static_cast<std::int64_t>(half - acc_u64_);
        return std::ldexp(static_cast<double>(num), 1 - width_);
      }
      case mode::small_rational: {
        acc_u64_ += step_u64_;
        if (acc_u64_ >= den_u64_) acc_u64_ -= den_u64_;
        const auto num = static_cast<std::int64_t>(den_u64_) -
                         2 * static_cast<std::int64_t>(acc_u64_);
        return static_cast<double>(num) / static_cast<double>(den_u64_);
      }
      case mode::big_rational: {
        acc_big_ += step_big_;
        if (acc_big_ >= den_big_) acc_big_ -= den_big_;
        const bigint num = den_big_ - 2 * acc_big_;
        return static_cast<double>(float50(num) / float50(den_big_));
      }
      case mode::extended: {
        acc_f50_ += step_f50_;
        if (acc_f50_ >= 1) acc_f50_ -= 1;
        return static_cast<double>(1 - 2 * acc_f50_);
      }
    }
    return 0.0;  // unreachable
  }

 private:
  enum class mode { dyadic, small_rational, big_rational, extended };
  mode mode_ = mode::dyadic;
  int width_ = 64;
  std::uint64_t step_u64_ = 0, acc_u64_ = 0, den_u64_ = 1;
  bigint step_big_{0}, acc_big_{0}, den_big_{1};
  float50 step_f50_{0}, acc_f50_{0};
};

}  // namespace

eval_result g_series_oracle(const real_spec& x, std::int64_t n_terms,
                            std::int64_t averaging_window) {
  if (n_terms < 1000) {
    throw std::invalid_argument("g_series_oracle: n_terms must be >= 1000");
  }
  if (x.is_zero()) throw domain_error("g_series_oracle needs x > 0");
  if (x.is_rational_value() && x.den <= n_terms) {
    throw domain_error(
        "g_series_oracle: series diverges at " + format_real(x) +
        " (denominator <= n_terms; terms on multiples of the denominator "
        "contribute a harmonic subseries)");
  }
  std::int64_t window = averaging_window;
  if (window == 0) {
    window = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n_terms)));
  }
  if (window < 1 || window > n_terms / 2) {
    throw std::invalid_argument(
        "g_series_oracle: averaging_window must lie in [1, n_terms/2]");
  }

  term_stream stream(x);
  kahan partial;
  const std::int64_t window_from = n_terms - window + 1;
  kahan window_mean;
  double window_min = std::numeric_limits<double>::infinity();
  double window_max = -std::numeric_limits<double>::infinity();
  for (std::int64_t l = 1; l <= n_terms; ++l) {
    partial.add(stream.next() / static_cast<double>(l));
    if (l >= window_from) {
      window_mean.add(partial.sum);
      window_min = std::min(window_min, partial.sum);
      window_max = std::max(window_max, partial.sum);
    }
  }

  eval_result out;
  out.value = window_mean.sum / static_cast<double>(window);
  out.abs_error_bound =
      (window_max - window_min) + 1.0 / static_cast<double>(n_terms);
  out.terms_used = n_terms;
  return out;
}

eval_result g_fast(const real_spec& x, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("g_fast: tol must be positive and finite");
  }
  // One orbit serves both halves: expanded at the tolerance G needs
  // (0.25 * 0.5 tol), which over-delivers for W's half of the budget.
  cf_options opts;
  opts.tol = 0.0625 * tol;
  const cf_orbit orbit = cf_expand(x, opts);
  const wilton_eval w = wilton(orbit);
  const eval_result g = g_big(x, orbit, 0.25 * tol);
  const double h_value = -2.0 * g.value;
  const double h_bound = 2.0 * g.abs_error_bound;
  eval_result out;
  out.value = w.value + h_value;
  out.abs_error_bound = w.abs_error_bound + h_bound +
                        4.0 * std::numeric_limits<double>::epsilon() *
                            (std::abs(w.value) + std::abs(h_value));
  out.terms_used = w.depth + g.terms_used;
  out.terminated = w.terminated;
  return out;
}

double cotangent_sum(std::int64_t r, std::int64_t b) {
  if (b < 2) throw domain_error("cotangent_sum: b must be >= 2");
  if (r < 1 || r >= b) {
    throw domain_error("cotangent_sum: r must satisfy 1 <= r < b");
  }
  if (std::gcd(r, b) != 1) {
    throw domain_error("cotangent_sum: r and b must be coprime");
  }
  kahan acc;
  for (std::int64_t m = 1; m < b; ++m) {
    const auto s = static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(m) * static_cast<std::uint64_t>(r)) %
        static_cast<std::uint64_t>(b));
    double cot;
    if (2 * s == b) {
      cot = 0.0;
    } else {
      // Reflect to the smaller residue so that (r, b-r) sums are exact
      // floating-point negations of one another.
      const std::int64_t sp = std::min(s, b - s);
      cot = 1.0 / std::tan(constants::pi *
                           (static_cast<double>(sp) / static_cast<double>(b)));
      if (s > b - s) cot = -cot;
    }
    acc.add(-(static_cast<double>(m) / static_cast<double>(b)) * cot);
  }
  return acc.sum;
}

std::vector<scan_record> scan_cotangent(std::int64_t b, double a0, double a1) {
  if (b < 3) throw domain_error("scan_cotangent: b must be >= 3");
  if (!(a0 > 0.0) || !(a0 < a1) || !(a1 <= 1.0)) {
    throw domain_error("scan_cotangent: need 0 < a0 < a1 <= 1");
  }
  const double bd = static_cast<double>(b);
  std::int64_t lo = static_cast<std::int64_t>(std::ceil(a0 * bd));
  std::int64_t hi = static_cast<std::int64_t>(std::floor(a1 * bd));
  lo = std::max<std::int64_t>(lo, 1);
  hi = std::min<std::int64_t>(hi, b - 1);

  std::vector<std::int64_t> rs;
  for (std::int64_t r = lo; r <= hi; ++r) {
    if (std::gcd(r, b) == 1) rs.push_back(r);
  }

  constexpr std::size_t kBlock = 16;
  auto blocks = blocked_map<std::vector<scan_record>>(
      rs.size(), kBlock, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<scan_record> part;
        part.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
          scan_record rec;
          rec.r = rs[i];
          rec.b = b;
          rec.value = cotangent_sum(rs[i], b);
          rec.normalized = rec.value / bd;
          part.push_back(rec);
        }
        return part;
      });

  std::vector<scan_record> out;
  out.reserve(rs.size());
  for (auto& part : blocks) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace wiltonlab

#include "wiltonlab/measure.hpp"

#include "wiltonlab/cf.hpp"
#include "wiltonlab/constants.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/realspec.hpp"
#include "wiltonlab/rng.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wiltonlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::uint32_t kGaussDrawTag = 0x6d736d70u;  // "msmp"
constexpr std::size_t kMcBlock = 8192;

void require_interval(const interval& iv) {
  if (!(iv.lo >= 0.0) || !(iv.hi <= 1.0) || !(iv.lo < iv.hi)) {
    throw domain_error("interval must satisfy 0 <= lo < hi <= 1");
  }
}

void require_samples(std::int64_t samples) {
  if (samples < 100) {
    throw std::invalid_argument("Monte Carlo probes need samples >= 100");
  }
}

// The sampled point as an exact width-64 dyadic spec, so orbit machinery can
// expand it without rounding questions.
real_spec to_dyadic_spec(double x) {
  const double scaled = std::ldexp(x, 64);
  auto bits = static_cast<std::uint64_t>(scaled);
  if (bits == 0) bits = 1;
  return make_dyadic(bigint(bits), 64);
}

// int_0^1 log(1/x)^p dm(x), the denominator of the contraction ratio,
// by deterministic tanh-sinh quadrature (integrable endpoint singularity).
double l_norm_p(double p) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const auto f = [p](double x) {
    return std::pow(-std::log(x), p) / ((1.0 + x) * constants::ln2);
  };
  return integrator.integrate(f, 0.0, 1.0, 1e-12);
}

struct mc_acc {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Deterministic blockwise mean/variance accumulation over per-sample values.
template <class SampleFn>
mc_acc mc_sweep(std::int64_t samples, std::uint64_t seed, SampleFn&& fn) {
  auto blocks = blocked_map<mc_acc>(
      static_cast<std::size_t>(samples), kMcBlock,
      [&](std::size_t, std::size_t lo, std::size_t hi) {
        mc_acc acc;
        for (std::size_t i = lo; i < hi; ++i) {
          const double v = fn(seed, static_cast<std::uint64_t>(i));
          acc.sum += v;
          acc.sum_sq += v * v;
        }
        return acc;
      });
  mc_acc total;
  for (const mc_acc& b : blocks) {
    total.sum += b.sum;
    total.sum_sq += b.sum_sq;
  }
  return total;
}

double std_error_of(const mc_acc& acc, std::int64_t n) {
  const double mean = acc.sum / static_cast<double>(n);
  const double var =
      std::max(0.0, acc.sum_sq / static_cast<double>(n) - mean * mean);
  return std::sqrt(var / static_cast<double>(n));
}

}  // namespace

double gauss_measure(const interval& iv) {
  require_interval(iv);
  return std::log1p((iv.hi - iv.lo) / (1.0 + iv.lo)) / constants::ln2;
}

eval_result preimage_measure(const interval& iv, std::int64_t n_branches) {
  require_interval(iv);
  if (n_branches < 1) {
    throw std::invalid_argument("preimage_measure: n_branches must be >= 1");
  }
  const double width = iv.hi - iv.lo;

  // Branch n: x in (1/(n+hi), 1/(n+lo)), of measure
  // log1p(width / ((n+lo)(n+hi+1))) / log 2. Summed smallest-first.
  double sum = 0.0, comp = 0.0;
  for (std::int64_t n = n_branches; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    const double eps_n = width / ((nd + iv.lo) * (nd + iv.hi + 1.0));
    const double term = std::log1p(eps_n) / constants::ln2 - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }

  // Tail over n > N: sum of log1p(eps_n) with eps_n = width/((n+lo)(n+hi+1)).
  // To first order this is a digamma difference via partial fractions; the
  // quadratic remainder sum eps_n^2/2 <= width^2/(3N^3) goes in the bound.
  const double nd = static_cast<double>(n_branches);
  const double psi_tail =
      boost::math::digamma(nd + 2.0 + iv.hi) -
      boost::math::digamma(nd + 1.0 + iv.lo);
  const double tail =
      width / (1.0 + iv.hi - iv.lo) * psi_tail / constants::ln2;
  const double tail_residual =
      width * width / (3.0 * nd * nd * nd) / (2.0 * constants::ln2);

  eval_result out;
  out.value = sum + tail;
  out.abs_error_bound = tail_residual + 64.0 * kEps * (out.value + 1.0);
  out.terms_used = n_branches;
  return out;
}

double sample_gauss_point(std::uint64_t seed, std::uint64_t index) {
  sample_rng rng(seed, index, kGaussDrawTag);
  return std::exp2(rng.next_unit()) - 1.0;
}

mc_report transfer_norm_ratio(int n, double p, std::int64_t samples,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("transfer_norm_ratio: n must be >= 1");
  if (!(p > 1.0) || !(p <= 2.0)) {
    throw std::invalid_argument("transfer_norm_ratio: p must lie in (1, 2]");
  }
  require_samples(samples);

  const mc_acc acc = mc_sweep(samples, seed, [n, p](std::uint64_t s,
                                                    std::uint64_t i) {
    const real_spec x = to_dyadic_spec(sample_gauss_point(s, i));
    cf_options opts;
    opts.max_terms = n + 1;
    const cf_orbit orbit = cf_expand(x, opts);
    // An orbit that ends before depth n sits on a measure-zero set of the
    // true integral; it contributes zero.
    const double gamma_n =
        orbit.depth() > n ? orbit.gamma[static_cast<std::size_t>(n)] : 0.0;
    return std::pow(gamma_n, p);
  });

  const double denom = l_norm_p(p);
  mc_report rep;
  rep.samples = samples;
  rep.estimate = acc.sum / static_cast<double>(samples) / denom;
  rep.std_error = std_error_of(acc, samples) / denom;
  rep.bound =
      std::pow(constants::golden_frac, static_cast<double>(n - 1) * p);
  rep.pass = rep.estimate <= rep.bound * (1.0 + 3.0 * rep.std_error);
  rep.informational = false;
  return rep;
}

mc_report j_set_probe(int d, int h, double u, double v, std::int64_t samples,
                      std::uint64_t seed) {
  if (d < 0) throw std::invalid_argument("j_set_probe: d must be >= 0");
  if (h < 1) throw std::invalid_argument("j_set_probe: h must be >= 1");
  if (!(u >= 0.0) || !(v >= 0.0)) {
    throw std::invalid_argument("j_set_probe: u and v must be >= 0");
  }
  require_samples(samples);

  const mc_acc acc = mc_sweep(
      samples, seed, [d, h, u, v](std::uint64_t s, std::uint64_t i) {
        const real_spec x = to_dyadic_spec(sample_gauss_point(s, i));
        cf_options opts;
        opts.max_terms = d + h + 1;
        const cf_orbit orbit = cf_expand(x, opts);
        const auto gamma_at = [&orbit](int k) {
          return orbit.depth() > k ? orbit.gamma[static_cast<std::size_t>(k)]
                                   : 0.0;
        };
        return (gamma_at(d) >= u && gamma_at(d + h) >= v) ? 1.0 : 0.0;
      });

  mc_report rep;
  rep.samples = samples;
  rep.estimate = acc.sum / static_cast<double>(samples);
  rep.std_error = std_error_of(acc, samples);
  rep.bound =
      2.0 * std::exp(-std::exp2(0.5 * (h - 2)) * v *
                     std::exp(std::exp2(0.5 * (d - 2)) * u));
  rep.pass = rep.estimate <= rep.bound + 3.0 * rep.std_error;
  rep.informational = true;
  return rep;
}

}  // namespace wiltonlab

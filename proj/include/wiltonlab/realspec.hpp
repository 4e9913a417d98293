#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiltonlab {

using bigint = boost::multiprecision::cpp_int;

// Malformed input text (unparseable). CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the admissible domain. CLI maps this to exit 3.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class spec_kind { rational, dyadic, cf_terminating, cf_periodic };

// A point of (0,1], given exactly: a reduced fraction, a dyadic fraction
// bits/2^width, or a continued fraction [0; a1, a2, ...] with an optional
// periodic tail (the latter is a quadratic irrational).
//
// num/den are always populated for rational-valued kinds, including
// cf_terminating (folded through the convergent recurrence on construction).
struct real_spec {
  spec_kind kind = spec_kind::rational;
  bigint num{0};
  bigint den{1};
  int width = 0;                      // dyadic only: den == 2^width
  std::vector<std::uint64_t> prefix;  // cf forms: a1, a2, ... (a0 = 0 implicit)
  std::vector<std::uint64_t> cycle;   // cf_periodic: repeating tail, nonempty

  bool is_rational_value() const { return kind != spec_kind::cf_periodic; }
  bool is_zero() const { return is_rational_value() && num == 0; }
  bool is_one() const { return is_rational_value() && num == den; }
};

real_spec make_rational(bigint num, bigint den);  // reduces; requires value in (0,1]
real_spec make_dyadic(bigint bits, int width);    // requires 0 < bits < 2^width
real_spec make_cf(std::vector<std::uint64_t> prefix,
                  std::vector<std::uint64_t> cycle);

// Text forms (round-trip exactly through format_real):
//   "13/29"              reduced fraction
//   "0.375"              decimal, converted to an exact fraction
//   "1"                  the right endpoint (allowed for A/F/phi2 only)
//   "0xDEADBEEF/2^64"    dyadic bits/2^width
//   "dyadic:12345"       fresh 64-bit dyadic drawn from seed 12345
//   "[0;2,4,3]"          terminating continued fraction
//   "[0;2,(1,2)]"        eventually periodic continued fraction
real_spec parse_real(const std::string& text);
std::string format_real(const real_spec& s);

double approx_double(const real_spec& s);

// log(1/x) computed in extended precision, safe even when the value itself
// underflows a double (tiny dyadics). Throws domain_error at zero.
double log_inv_approx(const real_spec& s);

// Exact Gauss map a(x) = 1/x - floor(1/x). Returns the zero spec when 1/x is
// an integer. Throws domain_error unless 0 < x < 1.
real_spec gauss_map(const real_spec& s);

}  // namespace wiltonlab

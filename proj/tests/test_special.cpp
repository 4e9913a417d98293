#include <doctest.h>

#include "wiltonlab/constants.hpp"
#include "wiltonlab/special.hpp"

#include "oracle_constants.hpp"

#include <cmath>
#include <stdexcept>

using namespace wiltonlab;

TEST_CASE("A(1) series agrees with log(2 pi) - gamma") {
  const auto r = a_one();
  CHECK(r.abs_error_bound <= 1e-10);
  CHECK(std::abs(r.value - constants::a_one_closed_form) <= 1e-8);   // spec'd duality
  CHECK(std::abs(r.value - constants::a_one_closed_form) <= r.abs_error_bound);
  CHECK(std::abs(r.value - oracle::a_one) <= r.abs_error_bound);
  CHECK(r.terms_used >= 1);
}

TEST_CASE("the first series summand is 3/2 - 2 log 2") {
  const double s1 = 1.0 + 0.5 - 2.0 * constants::ln2;
  CHECK(std::abs(s1 - oracle::a_one_first_summand) < 1e-15);
}

TEST_CASE("a_lambda at 1 reproduces A(1) through the full formula") {
  const auto via_formula = a_lambda(parse_real("1"), 1e-10);
  const auto series = a_one();
  CHECK(std::abs(via_formula.value - series.value) <=
        via_formula.abs_error_bound + series.abs_error_bound);
}

TEST_CASE("a_lambda matches the brute-force reference at 1/2") {
  const auto r = a_lambda(parse_real("1/2"), 1e-10);
  CHECK(std::abs(r.value - oracle::a_half) < 5e-8);  // oracle itself ~1e-8
  CHECK(r.abs_error_bound <= 1e-9);
}

TEST_CASE("a_lambda agrees with the independent piecewise integral oracle") {
  struct probe { std::int64_t p, q; double t; };
  for (auto [p, q, t] : {probe{1, 2, 30000.0}, {1, 1, 10000.0}, {7, 10, 30000.0},
                         {13, 29, 100000.0}}) {
    const auto slow = direct_a_oracle(p, q, t);
    const auto fast = a_lambda(make_rational(p, q), 1e-10);
    CHECK(std::abs(slow.value - fast.value) <=
          slow.abs_error_bound + fast.abs_error_bound);
    CHECK(slow.abs_error_bound < 1e-7);
  }
}

TEST_CASE("direct_a_oracle tightens as T grows") {
  const auto coarse = direct_a_oracle(1, 2, 1000.0);
  const auto fine = direct_a_oracle(1, 2, 100000.0);
  CHECK(fine.abs_error_bound < coarse.abs_error_bound);
  CHECK(std::abs(coarse.value - fine.value) <=
        coarse.abs_error_bound + fine.abs_error_bound);
}

TEST_CASE("A is positive on a spread of rationals") {
  for (auto num : {1, 7, 137, 999}) {
    const auto r = a_lambda(make_rational(num, 1000), 1e-9);
    CHECK(r.value > 0.0);
  }
}

TEST_CASE("remainder after the log and linear terms is O(lambda^2)") {
  const double a1 = a_one().value;
  // R(lambda) = A - (lambda/2) log(1/lambda) - ((1+A1)/2) lambda
  const auto remainder = [&](int k) {
    const real_spec lam = make_rational(1, std::int64_t{1} << k);
    const auto a = a_lambda(lam, 1e-11);
    const double lam_d = approx_double(lam);
    return a.value - 0.5 * lam_d * std::log(1.0 / lam_d) - 0.5 * (1.0 + a1) * lam_d;
  };
  // R/lambda^2 tends to pi^2/72 from below (the tail integral contributes
  // -O(lambda^3)), so a fit at the largest lambda needs a next-order margin.
  const double c_fit = std::abs(remainder(4)) / std::pow(2.0, -8);
  CHECK(std::abs(c_fit - constants::pi_sq_over_72) < 0.01);
  for (int k = 4; k <= 12; ++k) {
    const double lam = std::pow(2.0, -k);
    const double r = std::abs(remainder(k));
    CHECK(r <= c_fit * lam * lam * 1.002 + 1e-10);
    CHECK(r <= constants::pi_sq_over_36 * lam * lam + 1e-10);  // Lemma envelope
  }
}

TEST_CASE("F vanishes at 1, through the full computation") {
  const auto r = f_certified(parse_real("1"), 1e-10);
  CHECK(std::abs(r.value) <= r.abs_error_bound);
  CHECK(std::abs(r.value) <= 1e-9);
}

TEST_CASE("F matches the brute-force references") {
  const auto half = f_certified(parse_real("1/2"), 1e-10);
  CHECK(std::abs(half.value - oracle::f_half) < 3e-8);
  const auto three_tenths = f_certified(parse_real("3/10"), 1e-10);
  CHECK(std::abs(three_tenths.value - oracle::f_three_tenths) < 3e-8);
  const auto golden = f_certified(parse_real("[0;(1)]"), 1e-9);
  CHECK(std::abs(golden.value - oracle::f_golden) < 3e-8);
}

TEST_CASE("F approaches A(1)/2 for tiny arguments") {
  const auto r = f_certified(make_rational(1, 1000000), 1e-10);
  CHECK(std::abs(r.value - oracle::half_a_one) < 1e-6);
  CHECK(r.abs_error_bound < 1e-9);
}

TEST_CASE("fast F stays within its certificate of the certified route") {
  for (const char* text : {"999/1000", "7/10", "1/2", "3/10", "12/100", "1/20",
                           "1/3", "13/29", "355/452"}) {
    const real_spec x = parse_real(text);
    const auto fast = f_fast(approx_double(x));
    const auto cert = f_certified(x, 1e-9);
    CHECK(fast.abs_error_bound < 2e-5);
    CHECK(std::abs(fast.value - cert.value) <=
          fast.abs_error_bound + cert.abs_error_bound);
  }
  CHECK(std::abs(f_fast(constants::golden_frac).value - oracle::f_golden) < 2e-5);
}

TEST_CASE("fast and certified F agree across the tiny-x switch") {
  const real_spec x = make_rational(1, 200000);
  const auto fast = f_fast(approx_double(x));
  const auto cert = f_certified(x, 1e-8);
  CHECK(std::abs(fast.value - cert.value) <=
        fast.abs_error_bound + cert.abs_error_bound);
}

TEST_CASE("frozen F ceiling brackets the observed grid maximum") {
  double grid_max = 0.0;
  for (int i = 1; i <= 1000000; ++i)
    grid_max = std::max(grid_max, std::abs(f_fast(i / 1e6).value));
  CHECK(grid_max * 1.1 <= k_f_max * 1.0001);  // at least 10% of headroom
  CHECK(k_f_max <= grid_max * 1.15);          // but not inflated
}

TEST_CASE("special-function domain errors") {
  CHECK_THROWS_AS(a_lambda(gauss_map(parse_real("1/2")), 1e-9), domain_error);
  CHECK_THROWS_AS(f_fast(0.0), domain_error);
  CHECK_THROWS_AS(f_fast(1.5), domain_error);
  CHECK_THROWS_AS(direct_a_oracle(3, 2, 1000.0), domain_error);
  CHECK_THROWS_AS(direct_a_oracle(1, 2, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(a_lambda(parse_real("1/2"), 0.0), std::invalid_argument);
}

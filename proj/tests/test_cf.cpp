#include <doctest.h>

#include "wiltonlab/cf.hpp"

#include "oracle_constants.hpp"

#include <cmath>

using namespace wiltonlab;

TEST_CASE("orbit of 13/29 terminates with the textbook expansion") {
  auto orb = cf_expand(parse_real("13/29"));
  CHECK(orb.terminated);
  CHECK(orb.reason == stop_reason::terminated);
  REQUIRE(orb.a.size() == 3);
  CHECK(orb.a[0] == 2);
  CHECK(orb.a[1] == 4);
  CHECK(orb.a[2] == 3);

  // convergents 1/2, 4/9, 13/29
  CHECK(orb.p[0] == 1);
  CHECK(orb.q[0] == 2);
  CHECK(orb.p[1] == 4);
  CHECK(orb.q[1] == 9);
  CHECK(orb.p[2] == 13);
  CHECK(orb.q[2] == 29);

  // gamma_0 = log(29/13)
  REQUIRE(orb.gamma.size() == 3);
  CHECK(orb.gamma[0] == doctest::Approx(oracle::log_29_over_13).epsilon(1e-15));

  // alpha chain 13/29 -> 3/13 -> 1/3 -> 0
  REQUIRE(orb.alpha.size() == 4);
  CHECK(orb.alpha[1] == doctest::Approx(3.0 / 13.0).epsilon(1e-15));
  CHECK(orb.alpha[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(orb.alpha[3] == 0.0);
  CHECK(orb.beta[3] == 0.0);
  CHECK(orb.tail_bound < 1e-12);

  // exact remainders expose alpha_k as rationals
  REQUIRE(orb.r.size() == 4);
  CHECK(orb.den == 29);
  CHECK(orb.r[0] == 13);
  CHECK(orb.r[1] == 3);
  CHECK(orb.r[2] == 1);
  CHECK(orb.r[3] == 0);
}

TEST_CASE("convergent recurrence and approximation quality") {
  auto x = parse_real("355/452");
  auto orb = cf_expand(x);
  REQUIRE(orb.a.size() >= 3);
  for (std::size_t k = 2; k < orb.a.size(); ++k) {
    CHECK(orb.p[k] == orb.a[k] * orb.p[k - 1] + orb.p[k - 2]);
    CHECK(orb.q[k] == orb.a[k] * orb.q[k - 1] + orb.q[k - 2]);
  }
  // |x - p_k/q_k| <= 1/(q_k q_{k+1}), checked in exact integer arithmetic:
  // |x*q_k - p_k| * q_k q_{k+1} <= q_k  <=>  |num q_k - p_k den| q_{k+1} <= den
  for (std::size_t k = 0; k + 1 < orb.a.size(); ++k) {
    bigint err = x.num * orb.q[k] - orb.p[k] * x.den;
    if (err < 0) err = -err;
    CHECK(err * orb.q[k + 1] <= x.den);
  }
  // q strictly increasing
  for (std::size_t k = 1; k < orb.q.size(); ++k) CHECK(orb.q[k] > orb.q[k - 1]);
}

TEST_CASE("golden-section orbit is the geometric fixed point") {
  auto orb = cf_expand(parse_real("[0;(1)]"), {.tol = 1e-12});
  CHECK(orb.reason == stop_reason::tolerance);
  CHECK_FALSE(orb.terminated);
  CHECK(orb.tail_bound < 1e-12);
  REQUIRE(orb.truncated_at >= 20);

  const double g = oracle::golden_frac;
  const double log_inv_g = std::log(1.0 / g);
  double beta_expect = 1.0;
  for (int k = 0; k < orb.truncated_at; ++k) {
    CHECK(orb.a[k] == 1);
    CHECK(orb.alpha[k] == doctest::Approx(g).epsilon(1e-13));
    // beta_k = g^{k+1}, gamma_k = g^k log(1/g)
    CHECK(orb.gamma[k] == doctest::Approx(beta_expect * log_inv_g).epsilon(1e-12));
    beta_expect *= g;
    CHECK(orb.beta[k] == doctest::Approx(beta_expect).epsilon(1e-12));
  }
}

TEST_CASE("beta halves every two steps") {
  for (const char* txt : {"13/29", "355/452", "dyadic:7", "[0;2,(1,2)]"}) {
    auto orb = cf_expand(parse_real(txt), {.tol = 1e-9});
    for (int k = 1; k < orb.truncated_at; ++k) {
      // beta_{k+1} <= beta_{k-1}/2 with slack for rounding
      CHECK(orb.beta[k + 1] <= 0.5 * orb.beta[k - 1] * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("alpha product collapse: beta_k equals r_k/den") {
  auto orb = cf_expand(parse_real("dyadic:99"));
  for (std::size_t k = 0; k + 1 < orb.r.size(); ++k) {
    double expect = static_cast<double>(
        boost::multiprecision::cpp_rational(orb.r[k]) /
        boost::multiprecision::cpp_rational(orb.den));
    CHECK(orb.beta[k] == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("dyadic expansion stops at the grid's q-limit") {
  auto x = parse_real("dyadic:4242");
  auto orb = cf_expand(x);
  CHECK(orb.reason == stop_reason::q_limit);
  // all convergents up to the stopping one satisfy q_k^2 <= 2^64; the first
  // crossing is reported and nothing follows it
  REQUIRE(orb.q.size() >= 2);
  for (std::size_t k = 0; k + 1 < orb.q.size(); ++k)
    CHECK(orb.q[k] * orb.q[k] <= x.den);
  CHECK(orb.q.back() * orb.q.back() > x.den);
  // ... and the orbit is deep enough to matter
  CHECK(orb.truncated_at >= 10);
  CHECK(orb.tail_bound > 0.0);
  CHECK(orb.tail_bound < 1e-4);
}

TEST_CASE("the dyadic 1/2 expands as [0;2]") {
  auto orb = cf_expand(parse_real("0x1/2^1"));
  CHECK(orb.terminated);
  REQUIRE(orb.a.size() == 1);
  CHECK(orb.a[0] == 2);
  CHECK(orb.gamma[0] == doctest::Approx(oracle::ln2).epsilon(1e-15));
}

TEST_CASE("explicit q_limit option truncates rationals") {
  auto orb = cf_expand(parse_real("355/452"), {.q_limit = bigint(10)});
  CHECK(orb.reason == stop_reason::q_limit);
  for (const auto& q : orb.q) CHECK(q <= 10);
  CHECK_FALSE(orb.terminated);
}

TEST_CASE("max_terms cap reports its own reason") {
  auto orb = cf_expand(parse_real("[0;(1)]"), {.max_terms = 5});
  CHECK(orb.reason == stop_reason::max_terms);
  CHECK(orb.truncated_at == 5);
}

TEST_CASE("tolerance tail bound is honest for the golden section") {
  // W(g) is known in closed form; check the partial sums against it
  const double w_exact = oracle::wilton_golden;
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    auto orb = cf_expand(parse_real("[0;(1)]"), {.tol = tol});
    double s = 0.0, sign = 1.0;
    for (double gterm : orb.gamma) {
      s += sign * gterm;
      sign = -sign;
    }
    CHECK(std::abs(s - w_exact) <= orb.tail_bound);
    CHECK(orb.tail_bound <= tol);
  }
}

#include "wiltonlab/moments.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracle_constants.hpp"

using namespace wiltonlab;

TEST_CASE("prediction matches the closed form") {
    // 2 e^{-A(1)} Gamma(2) = 2 e^{-A(1)}
    CHECK(prediction(1) == doctest::Approx(oracle::two_exp_neg_a_one).epsilon(1e-12));

    // the ratio to Gamma(K+1) is the same constant for every K
    for (int k = 2; k <= 14; ++k) {
        CHECK(prediction(k) / std::tgamma(k + 1.0) ==
              doctest::Approx(oracle::two_exp_neg_a_one).epsilon(1e-12));
    }

    // log-domain identity and the switchover at K > 15
    CHECK(std::log(prediction(10)) ==
          doctest::Approx(std::log(2.0) - oracle::a_one + std::lgamma(11.0))
              .epsilon(1e-12));
    CHECK(prediction(16) / prediction(15) == doctest::Approx(16.0).epsilon(1e-10));

    CHECK_THROWS_AS(prediction(0), std::invalid_argument);
    CHECK_THROWS_AS(prediction(-3), std::invalid_argument);
}

TEST_CASE("engine calibration recovers factorial moments") {
    // integral_0^1 log(1/x)^L dx = Gamma(L+1); the importance engine must
    // reproduce it within 0.1% at its internal fixed budget and seed.
    for (int l : {1, 5, 10}) {
        const double got = calib_moment_l(l);
        const double exact = std::tgamma(l + 1.0);
        CHECK(std::fabs(got / exact - 1.0) < 1e-3);
    }

    CHECK_THROWS_AS(calib_moment_l(0), std::invalid_argument);
    CHECK_THROWS_AS(calib_moment_l(21), std::invalid_argument);
}

TEST_CASE("weighted calibration matches the closed form") {
    // integral_0^1 x^alpha log(1/x)^L dx = Gamma(L+1) / (1+alpha)^{L+1}
    const struct {
        double alpha;
        int l;
    } grid[] = {{0.5, 1}, {1.0, 0}, {1.0, 2}, {2.0, 5}, {4.0, 10}};
    for (const auto& p : grid) {
        const double got = calib_weighted_moment(p.alpha, p.l);
        const double exact =
            std::tgamma(p.l + 1.0) / std::pow(1.0 + p.alpha, p.l + 1);
        CHECK(std::fabs(got / exact - 1.0) < 5e-3);
    }
    // the two textbook values
    CHECK(calib_weighted_moment(1.0, 0) == doctest::Approx(0.5).epsilon(5e-3));
    CHECK(calib_weighted_moment(1.0, 2) == doctest::Approx(0.25).epsilon(5e-3));

    SUBCASE("half-interval tail obeys the exponential decay bound") {
        // integral_0^{1/2} x log(1/x)^10 dx <= Gamma(11) e^{-0.5*10}: the
        // full-interval estimate minus the (1/2,1) piece, the latter by
        // direct quadrature.
        const double alpha = 1.0;
        const int l = 10;
        boost::math::quadrature::tanh_sinh<double> integrator;
        const double upper_piece = integrator.integrate(
            [&](double x) {
                return std::pow(x, alpha) * std::pow(-std::log(x), l);
            },
            0.5, 1.0, 1e-12);
        const double half = calib_weighted_moment(alpha, l) - upper_piece;
        CHECK(half > 0.0);
        CHECK(half <= std::tgamma(l + 1.0) * std::exp(-0.5 * l));
    }

    CHECK_THROWS_AS(calib_weighted_moment(0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(calib_weighted_moment(5.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(calib_weighted_moment(1.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(calib_weighted_moment(1.0, 16), std::invalid_argument);
}

TEST_CASE("importance sampling reproduces the factorial scale") {
    const moment_estimate e = moment_g(8, 60000, 2026);
    CHECK(e.k == 8);
    CHECK(e.method == moment_method::importance_mc);
    CHECK(e.samples == 60000);
    CHECK(e.seed == 2026);
    CHECK(e.value > 0.0);
    CHECK(e.std_error > 0.0);
    CHECK(e.std_error / e.value < 0.02);
    // M_8 / 8! sits near the asymptotic constant 0.56693
    CHECK(e.ratio_to_prediction > 0.45);
    CHECK(e.ratio_to_prediction < 0.70);
    CHECK(e.ratio_to_prediction == e.value / std::tgamma(9.0));
}

TEST_CASE("K=1 moment agrees with the dyadic-grid oracle") {
    const moment_estimate imp = moment_g(1, 60000, 2026);
    const moment_estimate orc = moment_m1_oracle(15);
    CHECK(orc.method == moment_method::oracle_quadrature);
    CHECK(orc.k == 1);
    CHECK(orc.seed == 0);
    CHECK(orc.samples == (1 << 15) + (1 << 14));
    CHECK(orc.value > 0.7);
    CHECK(orc.value < 0.9);
    CHECK(orc.std_error > 0.0);
    const double sigma = std::hypot(imp.std_error, orc.std_error);
    CHECK(std::fabs(imp.value - orc.value) <= 3.0 * sigma);

    CHECK_THROWS_AS(moment_m1_oracle(7), std::invalid_argument);
    CHECK_THROWS_AS(moment_m1_oracle(25), std::invalid_argument);
}

TEST_CASE("stratified and importance routes agree") {
    for (int k : {2, 4}) {
        const moment_estimate st = moment_g_stratified(k, 50000, 17);
        const moment_estimate im = moment_g(k, 50000, 618);
        CHECK(st.method == moment_method::stratified_mc);
        CHECK(st.samples == 50000);
        CHECK(st.std_error > 0.0);
        const double sigma = std::hypot(st.std_error, im.std_error);
        CHECK(std::fabs(st.value - im.value) <= 3.0 * sigma);
    }
}

TEST_CASE("determinism, seed sensitivity, budget scaling") {
    const moment_estimate a = moment_g(5, 30000, 99);
    const moment_estimate b = moment_g(5, 30000, 99);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(a.ratio_to_prediction == b.ratio_to_prediction);

    const moment_estimate c = moment_g(5, 30000, 100);
    CHECK(c.value != a.value);

    // doubling the budget shrinks the standard error by about 1/sqrt(2)
    const moment_estimate n1 = moment_g(2, 20000, 7);
    const moment_estimate n2 = moment_g(2, 40000, 7);
    CHECK(n2.std_error / n1.std_error > 0.6);
    CHECK(n2.std_error / n1.std_error < 0.8);

    const moment_estimate s1 = moment_g_stratified(3, 20000, 4);
    const moment_estimate s2 = moment_g_stratified(3, 20000, 4);
    CHECK(s1.value == s2.value);
    CHECK(s1.std_error == s2.std_error);
}

TEST_CASE("moment table, growth, and argument guards") {
    const std::vector<int> ks = {2, 4, 5, 6};
    const auto table = moment_table(ks, 20000, 5);
    REQUIRE(table.size() == 4);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        CHECK(table[i].k == ks[i]);
        // the table rows are the same estimates moment_g would produce
        const moment_estimate direct = moment_g(ks[i], 20000, 5);
        CHECK(table[i].value == direct.value);
        CHECK(table[i].std_error == direct.std_error);
    }
    // ratio bands: early moments sit above the limit and drift toward it
    CHECK(table[0].ratio_to_prediction > 0.60);   // K = 2
    CHECK(table[0].ratio_to_prediction < 0.76);
    for (std::size_t i = 1; i < table.size(); ++i) {
        CHECK(table[i].ratio_to_prediction > 0.2);  // K >= 4
        CHECK(table[i].ratio_to_prediction < 2.0);
    }
    // factorial growth: value(K+1)/value(K) within a factor two of K+1
    for (std::size_t i = 1; i + 1 < table.size(); ++i) {
        const double growth = table[i + 1].value / table[i].value;
        const double expected = table[i + 1].k;
        CHECK(growth > 0.5 * expected);
        CHECK(growth < 2.0 * expected);
    }

    // a budget too small for a variance estimate reports an infinite error
    const moment_estimate tiny = moment_g(3, 1, 12);
    CHECK(tiny.samples == 1);
    CHECK(std::isinf(tiny.std_error));

    CHECK_THROWS_AS(moment_g(0, 1000, 1), std::invalid_argument);
    CHECK_THROWS_AS(moment_g(15, 1000, 1), std::invalid_argument);
    CHECK_THROWS_AS(moment_g(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(moment_g_stratified(15, 1000, 1), std::invalid_argument);
    CHECK_THROWS_AS(moment_g_stratified(2, -1, 1), std::invalid_argument);
}

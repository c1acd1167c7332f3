#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <cmath>
#include <random>

#include "leachate/analytical.hpp"
#include "leachate/error.hpp"
#include "leachate/transport.hpp"

using namespace leachate;

namespace {

// 256-bit MPFR evaluation, independent of the library's series and
// continued fraction.
double erfc_oracle(double x) {
    mpfr_t a;
    mpfr_init2(a, 256);
    mpfr_set_d(a, x, MPFR_RNDN);
    mpfr_erfc(a, a, MPFR_RNDN);
    const double r = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clear(a);
    return r;
}

double log_erfc_oracle(double x) {
    mpfr_t a;
    mpfr_init2(a, 256);
    mpfr_set_d(a, x, MPFR_RNDN);
    mpfr_erfc(a, a, MPFR_RNDN);
    mpfr_log(a, a, MPFR_RNDN);
    const double r = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clear(a);
    return r;
}

TransportParams landfill_cl() { return load_scenario("landfill-cl").params; }

}  // namespace

TEST_CASE("erfc fixed points") {
    CHECK(leachate::erfc(0.0) == 1.0);
    // mpmath, 50 digits: erfc(1) = 0.15729920705028513065877936491739...
    CHECK(std::abs(leachate::erfc(1.0) - 0.15729920705028513) < 1e-15);
    // erfc(10) = 2.0884875837625447570e-45
    const double e10 = leachate::erfc(10.0);
    CHECK(e10 >= 0.0);
    CHECK(e10 < 1e-44);
    CHECK(e10 == doctest::Approx(2.0884875837625447e-45).epsilon(1e-12));
    CHECK(leachate::erfc(40.0) == 0.0);
    CHECK(leachate::erfc(-40.0) == 2.0);
    CHECK_THROWS_AS(leachate::erfc(NAN), ParameterError);
    CHECK_THROWS_AS(leachate::erfc(INFINITY), ParameterError);
}

TEST_CASE("erfc matches the arbitrary-precision oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    double worst = 0.0;
    for (int n = 0; n < 5000; ++n) {
        const double x = u(rng);
        worst = std::max(worst, std::abs(leachate::erfc(x) - erfc_oracle(x)));
    }
    CHECK(worst <= 1e-12);
    // Around the series / continued-fraction switch.
    for (double x = 2.3; x <= 2.7; x += 1e-3) CHECK(std::abs(leachate::erfc(x) - erfc_oracle(x)) <= 1e-15);
}

TEST_CASE("erfc reflection identity") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 8.0);
    for (int n = 0; n < 2000; ++n) {
        const double x = u(rng);
        CHECK(std::abs(leachate::erfc(-x) + leachate::erfc(x) - 2.0) <= 1e-13);
    }
}

TEST_CASE("log_erfc stays finite past underflow") {
    for (double x : {-3.0, 0.0, 0.5, 2.0, 3.0, 5.0, 8.0, 30.0, 200.0}) {
        CHECK(leachate::log_erfc(x) == doctest::Approx(log_erfc_oracle(x)).epsilon(1e-13));
    }
    // erfc(30) ~ 2.6e-393 is below the double range.
    CHECK(leachate::erfc(30.0) == 0.0);
    CHECK(std::isfinite(leachate::log_erfc(30.0)));
}

TEST_CASE("analytical 1-D profile") {
    const TransportParams p = landfill_cl();
    SUBCASE("surface equals C0") {
        for (double t : {1.0, 50.0, 100.0}) CHECK(ogata_profile_1d(0.0, t, p) == doctest::Approx(675.0).epsilon(1e-14));
    }
    SUBCASE("t = 0 returns background") {
        CHECK(ogata_profile_1d(3.0, 0.0, p) == p.background);
        TransportParams q = p;
        q.background = 5.0;
        CHECK(ogata_profile_1d(3.0, 0.0, q) == 5.0);
    }
    SUBCASE("front has not arrived") {
        CHECK(ogata_profile_1d(50.0, 0.01, p) <= p.background + 1e-9 * p.C0);
    }
    SUBCASE("golden values (mpmath, 50 digits)") {
        // D = 200/365 cm2/day, v = 0.01 cm/day, C0 = 675 mg/L
        CHECK(ogata_profile_1d(5.0, 100.0, p, 1.0) == doctest::Approx(446.53290916581081).epsilon(1e-12));
        CHECK(ogata_profile_1d(5.0, 100.0, p, 4.0) == doctest::Approx(239.68675494505128).epsilon(1e-12));
    }
    SUBCASE("deep and early: no overflow") {
        TransportParams q = p;
        q.v = 50.0;
        q.D = 0.01;
        const auto s = evaluate_profile_1d(400.0, 0.001, q, 1.0);
        CHECK(std::isfinite(s.concentration));
        CHECK_FALSE(s.numerical_limit);
        CHECK(s.concentration == doctest::Approx(0.0));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(ogata_profile_1d(-1.0, 1.0, p), ParameterError);
        CHECK_THROWS_AS(ogata_profile_1d(1.0, -1.0, p), ParameterError);
        CHECK_THROWS_AS(ogata_profile_1d(1.0, 1.0, p, 0.5), ParameterError);
    }
}

TEST_CASE("analytical 1-D properties") {
    TransportParams p = landfill_cl();
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> vel(0.0, 0.5), dif(0.05, 2.0), ret(1.0, 6.0);
    for (int trial = 0; trial < 40; ++trial) {
        p.v = vel(rng);
        p.D = dif(rng);
        const double R = ret(rng);

        double prev = p.C0 + 1e-9;
        for (double z = 0.0; z <= 40.0; z += 0.25) {
            const double c = ogata_profile_1d(z, 30.0, p, R);
            CHECK(c >= p.background);
            CHECK(c <= p.C0);
            CHECK(c <= prev + 1e-9);
            prev = c;
        }
        prev = p.background - 1e-9;
        for (double t = 0.0; t <= 200.0; t += 2.5) {
            const double c = ogata_profile_1d(4.0, t, p, R);
            CHECK(c >= prev - 1e-9);
            prev = c;
        }
        for (double z : {0.5, 2.0, 7.0}) {
            CHECK(ogata_profile_1d(z, 50.0, p, R + 0.5) <= ogata_profile_1d(z, 50.0, p, R) + 1e-9);
        }
        TransportParams doubled = p;
        doubled.C0 = 2.0 * p.C0;
        for (double z : {0.0, 1.0, 3.0, 9.0}) {
            const double single = ogata_profile_1d(z, 70.0, p, R);
            const double twice = ogata_profile_1d(z, 70.0, doubled, R);
            CHECK(std::abs(twice - 2.0 * single) <= 1e-12 * std::max(twice, 1e-300));
        }
    }
}

TEST_CASE("literal 2-D superposition") {
    const TransportParams p = landfill_cl();
    const auto origin = ogata_paper_2d(0.0, 0.0, 1e6, p, 1.0);
    CHECK(origin.paper_literal);
    CHECK(origin.concentration == doctest::Approx(2.0 * p.C0).epsilon(1e-9));
    CHECK(ogata_paper_2d(1e4, 0.0, 10.0, p, 1.0).concentration == doctest::Approx(p.C0).epsilon(1e-12));
    // mpmath: sum of both brackets at x = z = 3 cm, t = 100 day
    CHECK(ogata_paper_2d(3.0, 3.0, 100.0, p, 1.0).concentration == doctest::Approx(1073.5214472874856).epsilon(1e-12));
    CHECK_THROWS_AS(ogata_paper_2d(-1.0, 0.0, 1.0, p, 1.0), ParameterError);
}

#include <catch_amalgamated.hpp>

#include <cmath>

#include "rps/asymptotics.hpp"
#include "rps/rational.hpp"
#include "rps/recurrence.hpp"

using rps::Rational;

TEST_CASE("bounds evaluate the explicit formulas") {
    CHECK(rps::bounds(2) == std::pair{Rational(3, 4), Rational(6)});
    CHECK(rps::bounds(4) == std::pair{Rational(27, 16), Rational(108)});
    CHECK(rps::bounds(10) ==
          std::pair{Rational(1, 3) * Rational(3, 2).pow(10),
                    Rational(1000, 3) * Rational(3, 2).pow(10)});
    CHECK_THROWS_AS(rps::bounds(1), std::invalid_argument);
}

TEST_CASE("remainder_exact golden values") {
    CHECK(rps::remainder_exact(2) == Rational(3, 4));
    CHECK(rps::remainder_exact(3) == Rational(9, 8));
    CHECK(rps::remainder_exact(4) == Rational(171, 112));
    CHECK_THROWS_AS(rps::remainder_exact(1), std::invalid_argument);
}

TEST_CASE("remainder identity reassembles the mean") {
    for (long n = 2; n <= 60; ++n)
        CHECK(rps::remainder_exact(n) + Rational(1, 3) * Rational(3, 2).pow(n) ==
              rps::mean_by_recurrence(n));
}

TEST_CASE("sandwich holds exactly up to n = 60") {
    for (long n = 2; n <= 60; ++n) {
        const auto [lower, upper] = rps::bounds(n);
        const Rational mean = rps::mean_by_recurrence(n);
        CHECK(lower <= mean);
        CHECK(mean <= upper);
    }
}

TEST_CASE("log2 fractional part") {
    CHECK(rps::log2_fractional(1) == 0.0);
    CHECK(rps::log2_fractional(2) == 0.0);
    for (int m = 0; m <= 40; ++m) CHECK(rps::log2_fractional(1ULL << m) == 0.0);
    CHECK(rps::log2_fractional(3) == Catch::Approx(0.5849625007).epsilon(1e-9));
    for (std::uint64_t l = 1; l <= 100000; ++l) {
        const double d = rps::log2_fractional(l);
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
    CHECK_THROWS_AS(rps::log2_fractional(0), std::invalid_argument);
}

TEST_CASE("remainder series approximates the exact remainder within its bound") {
    for (long n = 2; n <= 10; ++n) {
        const auto [approx, bound] = rps::remainder_series(n, 100000);
        const double exact = rps::remainder_exact(n).to_double();
        CHECK(std::abs(approx - exact) <= bound + 1e-9);
        CHECK(bound > 0.0);
    }
    // a finer truncation shrinks the bound and stays inside it
    const auto [approx, bound] = rps::remainder_series(4, 1000000);
    CHECK(std::abs(approx - rps::remainder_exact(4).to_double()) <= bound + 1e-9);
    CHECK(bound < 2e-5);
}

TEST_CASE("asymptotic report") {
    const auto r2 = rps::asymptotic_report(2);
    CHECK(r2.ratio == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(r2.mean == Rational(3, 2));
    CHECK(r2.remainder_exact == Rational(3, 4));

    const auto r4 = rps::asymptotic_report(4);
    CHECK(r4.ratio == Catch::Approx(40.0 / 21.0).epsilon(1e-12));
    CHECK(r4.lower == Rational(27, 16));
    CHECK(r4.upper == Rational(108));

    CHECK(rps::asymptotic_report(60).ratio < rps::asymptotic_report(10).ratio);
}

TEST_CASE("mean-to-lower-bound ratio decays along n = 10..60") {
    double prev = rps::asymptotic_report(10).ratio;
    for (long n = 20; n <= 60; n += 10) {
        const double ratio = rps::asymptotic_report(n).ratio;
        CHECK(ratio < prev);
        prev = ratio;
    }
}

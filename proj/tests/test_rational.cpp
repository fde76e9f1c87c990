#include <catch_amalgamated.hpp>

#include <cmath>

#include "rps/rational.hpp"
#include "rps/simulate.hpp"

using rps::BigInt;
using rps::Rational;

namespace {

// small random rationals for property checks
Rational random_rational(rps::SplitMix64& rng, bool nonzero = false) {
    long long num = static_cast<long long>(rng.next() % 41) - 20;
    if (nonzero && num == 0) num = 7;
    const long long den = 1 + static_cast<long long>(rng.next() % 19);
    return Rational(num, den);
}

bool is_canonical(const Rational& r) {
    return r.denominator() > 0 &&
           boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                      r.denominator()) == 1;
}

}  // namespace

TEST_CASE("rationals reduce to canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational pow") {
    CHECK(Rational(3, 2).pow(0) == Rational(1));
    CHECK(Rational(3, 2).pow(4) == Rational(81, 16));
    CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("canonical form survives random operation chains") {
    rps::SplitMix64 rng(20240811);
    for (int iter = 0; iter < 500; ++iter) {
        Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng, true);
        a += b;
        a *= c;
        a -= b;
        a /= c;
        CHECK(is_canonical(a));
        const Rational sum = a + b;
        CHECK(sum - b == a);
        CHECK((a * c) / c == a);
    }
}

TEST_CASE("to_double") {
    CHECK(Rational(3, 2).to_double() == 1.5);
    CHECK(Rational(-3, 2).to_double() == -1.5);
    CHECK(Rational(0).to_double() == 0.0);
    CHECK(Rational(45, 14).to_double() == Catch::Approx(45.0 / 14.0).epsilon(1e-15));
    CHECK(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3.0).epsilon(1e-15));

    // numerator and denominator individually overflow double range
    const BigInt huge = rps::int_pow(BigInt(10), 400);
    CHECK(Rational(huge * 3, huge * 2).to_double() == Catch::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("decimal rendering at 15 significant digits") {
    CHECK(Rational(3, 2).to_decimal_string() == "1.5");
    CHECK(Rational(45, 14).to_decimal_string() == "3.21428571428571");
    CHECK(Rational(2, 27).to_decimal_string() == "0.0740740740740741");
    CHECK(Rational(-45, 14).to_decimal_string() == "-3.21428571428571");
    CHECK(Rational(0).to_decimal_string() == "0");
    CHECK(Rational(1).to_decimal_string() == "1");
    CHECK(Rational(rps::int_pow(BigInt(10), 20)).to_decimal_string() == "1e+20");
    CHECK(Rational(1, rps::int_pow(BigInt(10), 7)).to_decimal_string() == "1e-7");
    CHECK(Rational(1, 10000).to_decimal_string() == "0.0001");
    CHECK(Rational(9999999999999999LL, 10).to_decimal_string() == "1e+15");  // carry on rounding
    CHECK(Rational(157, 35).to_decimal_string(4) == "4.486");
    CHECK(Rational(45, 14).str() == "45/14");
}

TEST_CASE("binomial matches the Pascal recurrence") {
    CHECK(rps::binomial(0, 0) == 1);
    CHECK(rps::binomial(4, 2) == 6);
    CHECK(rps::binomial(10, 3) == 120);
    CHECK(rps::binomial(5, 9) == 0);
    for (unsigned long n = 1; n <= 40; ++n)
        for (unsigned long k = 1; k <= n; ++k)
            CHECK(rps::binomial(n, k) == rps::binomial(n - 1, k - 1) + rps::binomial(n - 1, k));
}

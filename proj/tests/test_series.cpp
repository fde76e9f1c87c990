#include <catch_amalgamated.hpp>

#include "rps/rational.hpp"
#include "rps/series.hpp"
#include "rps/simulate.hpp"

using rps::Rational;
using rps::SeriesCoefficients;

namespace {

SeriesCoefficients random_poly(rps::SplitMix64& rng, std::size_t order, bool unit_constant) {
    SeriesCoefficients p(order);
    for (std::size_t k = 0; k <= order; ++k) {
        const long long num = static_cast<long long>(rng.next() % 13) - 6;
        p.coeffs[k] = Rational(num, 1 + static_cast<long long>(rng.next() % 5));
    }
    if (unit_constant && p.coeffs[0].is_zero()) p.coeffs[0] = Rational(2);
    return p;
}

// (1/3)(e^{3x} - 1 - 3x) and e^{2x} - 1, to the given order
SeriesCoefficients h_numerator(std::size_t order) {
    SeriesCoefficients num = rps::exp_series(Rational(3), order);
    num.coeffs[0] -= Rational(1);
    num.coeffs[1] -= Rational(3);
    return rps::series_scale(num, Rational(1, 3));
}

SeriesCoefficients h_denominator(std::size_t order) {
    SeriesCoefficients den = rps::exp_series(Rational(2), order);
    den.coeffs[0] -= Rational(1);
    return den;
}

}  // namespace

TEST_CASE("exp_series coefficients c^k/k!") {
    CHECK(rps::exp_series(Rational(0), 2).coeffs ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(rps::exp_series(Rational(3), 2).coeffs ==
          std::vector<Rational>{Rational(1), Rational(3), Rational(9, 2)});
    CHECK(rps::exp_series(Rational(2), 3).coeffs ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(2), Rational(4, 3)});
}

TEST_CASE("series_divide cancels the common x factor") {
    SeriesCoefficients x(1);
    x.coeffs[1] = Rational(1);
    const auto q = rps::series_divide(x, x, 3);
    CHECK(q.coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("series_divide produces the h(x) ordinary coefficients") {
    const auto q = rps::series_divide(h_numerator(7), h_denominator(7), 6);
    // ordinary coefficient k is h_k / k!
    CHECK(q.coeffs[0] == Rational(0));
    CHECK(q.coeffs[1] == Rational(3, 4));
    CHECK(q.coeffs[2] == Rational(0));
    CHECK(q.coeffs[3] == Rational(3, 8) / Rational(6));
    CHECK(q.coeffs[6] == Rational(-3, 7) / Rational(720));

    const auto egf = rps::egf_from_ordinary(q);
    CHECK(egf[1] == Rational(3, 4));
    CHECK(egf[2] == Rational(0));
    CHECK(egf[3] == Rational(3, 8));
    CHECK(egf[4] == Rational(3, 5));
    CHECK(egf[5] == Rational(1, 4));
    CHECK(egf[6] == Rational(-3, 7));
}

TEST_CASE("series_divide error paths") {
    SeriesCoefficients zero(4);
    SeriesCoefficients one(4);
    one.coeffs[0] = Rational(1);
    CHECK_THROWS_AS(rps::series_divide(one, zero, 3), std::domain_error);

    SeriesCoefficients x(4);
    x.coeffs[1] = Rational(1);
    // (1 + x)/x has no power-series expansion
    SeriesCoefficients one_plus_x(4);
    one_plus_x.coeffs[0] = Rational(1);
    one_plus_x.coeffs[1] = Rational(1);
    CHECK_THROWS_AS(rps::series_divide(one_plus_x, x, 3), std::domain_error);

    // zero numerator is fine at any valuation
    CHECK(rps::series_divide(zero, x, 2).coeffs ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("series_divide(q*d, d) recovers q") {
    rps::SplitMix64 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t qo = 1 + rng.next() % 10;
        const std::size_t do_ = 1 + rng.next() % 10;
        const auto q = random_poly(rng, qo, false);
        const auto d = random_poly(rng, do_, true);
        const auto product = rps::series_multiply(q, d, qo + do_);
        CHECK(rps::series_divide(product, d, qo) == q);
    }
}

TEST_CASE("series helpers") {
    SeriesCoefficients a(2);
    a.coeffs = {Rational(1), Rational(2), Rational(3)};
    const auto scaled = rps::series_scale_argument(a, Rational(2));
    CHECK(scaled.coeffs == std::vector<Rational>{Rational(1), Rational(4), Rational(12)});

    const auto sum = rps::series_add(a, scaled);
    CHECK(sum.coeffs == std::vector<Rational>{Rational(2), Rational(6), Rational(15)});
    CHECK(rps::series_sub(sum, a) == scaled);

    const auto product = rps::series_multiply(a, a, 2);
    CHECK(product.coeffs == std::vector<Rational>{Rational(1), Rational(4), Rational(10)});
}

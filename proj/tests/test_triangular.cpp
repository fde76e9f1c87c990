#include <catch_amalgamated.hpp>

#include "rps/rational.hpp"
#include "rps/simulate.hpp"
#include "rps/triangular.hpp"

using rps::LowerTriangularMatrix;
using rps::Rational;

namespace {

// Test oracle: the inverse as the nilpotent expansion
// A^{-1} = sum_{k=0}^{m-1} (-D^{-1}R)^k D^{-1}, with D the diagonal part of A.
// Must agree bit-for-bit with the forward-substitution production path.
LowerTriangularMatrix invert_by_nilpotent_expansion(const LowerTriangularMatrix& a) {
    const std::size_t m = a.dim();
    LowerTriangularMatrix d_inv(m);
    LowerTriangularMatrix neg_dinv_r(m);
    for (std::size_t i = 0; i < m; ++i) {
        d_inv.set(i, i, Rational(1) / a(i, i));
        for (std::size_t j = 0; j < i; ++j) neg_dinv_r.set(i, j, -a(i, j) / a(i, i));
    }
    LowerTriangularMatrix sum = d_inv;
    LowerTriangularMatrix power = LowerTriangularMatrix::identity(m);
    for (std::size_t k = 1; k < m; ++k) {
        power = power * neg_dinv_r;
        sum = sum + power * d_inv;
    }
    return sum;
}

LowerTriangularMatrix random_lower(rps::SplitMix64& rng, std::size_t dim, bool invertible) {
    LowerTriangularMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const long long num = static_cast<long long>(rng.next() % 11) - 5;
            a.set(i, j, Rational(num, 1 + static_cast<long long>(rng.next() % 7)));
        }
        if (invertible) {
            long long num = static_cast<long long>(rng.next() % 9) - 4;
            if (num == 0) num = 3;
            a.set(i, i, Rational(num, 1 + static_cast<long long>(rng.next() % 5)));
        }
    }
    return a;
}

}  // namespace

TEST_CASE("triangular shape is enforced") {
    LowerTriangularMatrix a(3);
    CHECK_THROWS_AS(a.set(0, 1, Rational(1)), std::invalid_argument);
    CHECK(a(0, 2) == Rational(0));
    CHECK_THROWS_AS(a(3, 0), std::out_of_range);
}

TEST_CASE("inverse of the identity") {
    const auto id = LowerTriangularMatrix::identity(3);
    CHECK(rps::invert_lower_triangular(id) == id);
}

TEST_CASE("2x2 inverse against the hand-computed cofactor result") {
    // I - P_3
    LowerTriangularMatrix a(2);
    a.set(0, 0, Rational(2, 3));
    a.set(1, 0, Rational(-1, 3));
    a.set(1, 1, Rational(2, 3));

    const auto inv = rps::invert_lower_triangular(a);
    CHECK(inv(0, 0) == Rational(3, 2));
    CHECK(inv(1, 0) == Rational(3, 4));
    CHECK(inv(1, 1) == Rational(3, 2));
    CHECK(inv(0, 1) == Rational(0));

    // squared inverse = (9/4) [[1,0],[1,1]]
    const auto sq = inv * inv;
    CHECK(sq(0, 0) == Rational(9, 4));
    CHECK(sq(1, 0) == Rational(9, 4));
    CHECK(sq(1, 1) == Rational(9, 4));
}

TEST_CASE("singular matrix reports the offending index") {
    LowerTriangularMatrix a(3);
    a.set(0, 0, Rational(1));
    a.set(2, 2, Rational(1));
    a.set(1, 0, Rational(5));
    try {
        rps::invert_lower_triangular(a);
        FAIL("expected SingularMatrixError");
    } catch (const rps::SingularMatrixError& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("matrix_power_apply") {
    LowerTriangularMatrix p2(1);
    p2.set(0, 0, Rational(1, 3));
    const std::vector<Rational> psi2{Rational(2, 3)};

    SECTION("k = 0 leaves the vector unchanged") {
        CHECK(rps::matrix_power_apply(p2, 0, psi2) == psi2);
    }
    SECTION("scalar chain, k = 2") {
        const auto v = rps::matrix_power_apply(p2, 2, psi2);
        CHECK(v == std::vector<Rational>{Rational(2, 27)});
    }
    SECTION("2x2 chain, k = 1") {
        LowerTriangularMatrix p3(2);
        p3.set(0, 0, Rational(1, 3));
        p3.set(1, 0, Rational(1, 3));
        p3.set(1, 1, Rational(1, 3));
        const auto v = rps::matrix_power_apply(p3, 1, {Rational(2, 3), Rational(1, 3)});
        CHECK(v == std::vector<Rational>{Rational(2, 9), Rational(3, 9)});
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(rps::matrix_power_apply(p2, 1, {Rational(1), Rational(1)}),
                        std::invalid_argument);
    }
}

TEST_CASE("random inverses are exact and match the nilpotent expansion") {
    rps::SplitMix64 rng(77001);
    for (std::size_t dim = 1; dim <= 12; ++dim) {
        const auto a = random_lower(rng, dim, true);
        const auto inv = rps::invert_lower_triangular(a);
        const auto id = LowerTriangularMatrix::identity(dim);
        CHECK(a * inv == id);
        CHECK(inv * a == id);
        CHECK(inv == invert_by_nilpotent_expansion(a));
    }
}

TEST_CASE("D^-1 R is nilpotent of order dim") {
    rps::SplitMix64 rng(77002);
    for (std::size_t dim = 1; dim <= 8; ++dim) {
        const auto a = random_lower(rng, dim, true);
        LowerTriangularMatrix dinv_r(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < i; ++j) dinv_r.set(i, j, a(i, j) / a(i, i));
        auto power = LowerTriangularMatrix::identity(dim);
        for (std::size_t k = 0; k < dim; ++k) power = power * dinv_r;
        CHECK(power == LowerTriangularMatrix(dim));
    }
}

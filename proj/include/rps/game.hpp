#pragma once

#include <stdexcept>
#include <vector>

#include "rps/rational.hpp"
#include "rps/triangular.hpp"

namespace rps {

// Round rule: every player shows one of three gestures uniformly at random.
// A round is decisive iff exactly two distinct gestures appear; the players
// showing the beating gesture survive. With one or three distinct gestures
// nobody is eliminated.

/// Probability that j players survive one round of an i-player game:
/// C(i,j)/3^{i-1} for j < i, 1 - 2(2/3)^{i-1}(1 - 2^{-(i-1)}) for j = i,
/// 0 for j > i. p(1,1) = 1.
inline Rational survival_probability(long i, long j) {
    if (i < 1 || j < 1) throw std::invalid_argument("survival_probability: arguments must be >= 1");
    if (j > i) return Rational(0);
    const auto e = static_cast<unsigned long>(i - 1);
    if (j == i)
        return Rational(1) -
               Rational(2) * Rational(2, 3).pow(static_cast<long>(e)) *
                   (Rational(1) - Rational(1, 2).pow(static_cast<long>(e)));
    return Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j)),
                    int_pow(BigInt(3), e));
}

/// [p(i,1), ..., p(i,i)]; sums to exactly 1.
inline std::vector<Rational> transition_row(long i) {
    if (i < 1) throw std::invalid_argument("transition_row: i must be >= 1");
    std::vector<Rational> row(static_cast<std::size_t>(i));
    for (long j = 1; j <= i; ++j) row[static_cast<std::size_t>(j - 1)] = survival_probability(i, j);
    return row;
}

/// The one-round chain restricted to the transient states 2..n: the
/// sub-stochastic (n-1)x(n-1) matrix of survival probabilities together with
/// the one-step absorption vector psi(j) = p(j,1). Immutable once built.
class TruncatedChain {
public:
    explicit TruncatedChain(long n)
        : n_(n), matrix_(n >= 2 ? static_cast<std::size_t>(n - 1) : 1),
          psi_(n >= 2 ? static_cast<std::size_t>(n - 1) : 0) {
        if (n < 2) throw std::invalid_argument("TruncatedChain: n must be >= 2");
        for (long i = 2; i <= n; ++i) {
            for (long j = 2; j <= i; ++j)
                matrix_.set(row_of_state(i), row_of_state(j), survival_probability(i, j));
            psi_[row_of_state(i)] = survival_probability(i, 1);
        }
    }

    /// Assembles a chain from explicit parts (shape-checked only). Meant for
    /// feeding deliberately inconsistent chains through verification.
    TruncatedChain(long n, LowerTriangularMatrix matrix, std::vector<Rational> psi)
        : n_(n), matrix_(std::move(matrix)), psi_(std::move(psi)) {
        if (n < 2) throw std::invalid_argument("TruncatedChain: n must be >= 2");
        if (matrix_.dim() != static_cast<std::size_t>(n - 1) || psi_.size() != matrix_.dim())
            throw std::invalid_argument("TruncatedChain: shape mismatch");
    }

    long players() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(n_ - 1); }
    const LowerTriangularMatrix& matrix() const { return matrix_; }
    const std::vector<Rational>& psi() const { return psi_; }

    /// p(n,n), the probability of staying in the initial state for a round.
    const Rational& stay_probability() const { return matrix_(size() - 1, size() - 1); }

    // The only place the off-by-one between player counts (2..n) and matrix
    // indices (0..n-2) lives.
    static std::size_t row_of_state(long state) { return static_cast<std::size_t>(state - 2); }
    static long state_of_row(std::size_t row) { return static_cast<long>(row) + 2; }

private:
    long n_;
    LowerTriangularMatrix matrix_;
    std::vector<Rational> psi_;
};

inline TruncatedChain build_truncated_chain(long n) { return TruncatedChain(n); }

}  // namespace rps

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rps/game.hpp"
#include "rps/rational.hpp"
#include "rps/triangular.hpp"

namespace rps {

/// Exact head of the stopping-time law: probs[k-1] = P(tau_n = k) for
/// k = 1..K and the exact leftover mass P(tau_n > K).
struct StoppingTimePMF {
    long n = 0;
    std::vector<Rational> probs;
    Rational tail_mass;
};

/// First exit time from the initial state: geometric with success
/// probability 1 - stay_prob, so mean = 1/(1 - stay_prob).
struct ExitTimeLaw {
    long n = 0;
    Rational stay_prob;
    Rational mean;
};

/// P(tau_n = k), the state-n entry of P_n^{k-1} psi_n.
inline Rational stopping_time_pmf(long n, long k) {
    if (n < 2) throw std::invalid_argument("stopping_time_pmf: n must be >= 2");
    if (k < 1) throw std::invalid_argument("stopping_time_pmf: k must be >= 1");
    const TruncatedChain chain(n);
    const std::vector<Rational> v =
        matrix_power_apply(chain.matrix(), static_cast<unsigned long>(k - 1), chain.psi());
    return v[chain.size() - 1];
}

/// The pmf for k = 1..k_max by iterated vector application, with the exact
/// tail mass 1 - sum probs.
inline StoppingTimePMF pmf_table(long n, long k_max) {
    if (n < 2) throw std::invalid_argument("pmf_table: n must be >= 2");
    if (k_max < 1) throw std::invalid_argument("pmf_table: k_max must be >= 1");
    const TruncatedChain chain(n);
    StoppingTimePMF out;
    out.n = n;
    out.probs.reserve(static_cast<std::size_t>(k_max));
    Rational total;
    std::vector<Rational> v = chain.psi();
    for (long k = 1; k <= k_max; ++k) {
        out.probs.push_back(v[chain.size() - 1]);
        total += out.probs.back();
        if (k < k_max) v = chain.matrix().apply(v);
    }
    out.tail_mass = Rational(1) - total;
    return out;
}

/// Smallest k_max whose exact tail mass drops below `tail_threshold`
/// (compared after conversion to double), capped at `cap`.
inline StoppingTimePMF pmf_table_to_tail(long n, double tail_threshold, long cap = 10000) {
    if (n < 2) throw std::invalid_argument("pmf_table_to_tail: n must be >= 2");
    if (!(tail_threshold > 0)) throw std::invalid_argument("pmf_table_to_tail: threshold must be positive");
    const TruncatedChain chain(n);
    StoppingTimePMF out;
    out.n = n;
    Rational total;
    std::vector<Rational> v = chain.psi();
    for (long k = 1; k <= cap; ++k) {
        out.probs.push_back(v[chain.size() - 1]);
        total += out.probs.back();
        out.tail_mass = Rational(1) - total;
        if (out.tail_mass.to_double() < tail_threshold) break;
        if (k < cap) v = chain.matrix().apply(v);
    }
    return out;
}

/// E_n as the state-n entry of (I - P_n)^{-2} psi_n.
inline Rational mean_by_matrix(long n) {
    if (n < 2) throw std::invalid_argument("mean_by_matrix: n must be >= 2");
    const TruncatedChain chain(n);
    const LowerTriangularMatrix inv =
        invert_lower_triangular(LowerTriangularMatrix::identity(chain.size()) - chain.matrix());
    const std::vector<Rational> v = inv.apply(inv.apply(chain.psi()));
    return v[chain.size() - 1];
}

/// Var(tau_n) = state-n entry of (I + P_n)(I - P_n)^{-3} psi_n minus the
/// squared mean, all in exact arithmetic.
inline Rational variance(long n) {
    if (n < 2) throw std::invalid_argument("variance: n must be >= 2");
    const TruncatedChain chain(n);
    const LowerTriangularMatrix inv =
        invert_lower_triangular(LowerTriangularMatrix::identity(chain.size()) - chain.matrix());
    const std::vector<Rational> v2 = inv.apply(inv.apply(chain.psi()));
    const std::vector<Rational> v3 = inv.apply(v2);
    const std::vector<Rational> pv3 = chain.matrix().apply(v3);
    const Rational mean = v2[chain.size() - 1];
    const Rational second_moment = v3[chain.size() - 1] + pv3[chain.size() - 1];
    return second_moment - mean * mean;
}

/// Moment generating function E(e^{t tau_n}), evaluated in floating point:
/// the state-n entry of e^t (I - e^t P_n)^{-1} psi_n. This is the module's
/// only floating-point surface. Defined for e^t p(n,n) < 1.
inline double mgf(long n, double t) {
    if (n < 2) throw std::invalid_argument("mgf: n must be >= 2");
    const TruncatedChain chain(n);
    const double rho = chain.stay_probability().to_double();
    const double et = std::exp(t);
    if (!(et * rho < 1.0))
        throw std::domain_error("mgf: undefined for t >= " + std::to_string(-std::log(rho)));

    // Forward substitution on (I - e^t P_n) y = psi_n. All diagonals of the
    // system are positive because p(i,i) <= p(n,n) for i <= n.
    const std::size_t m = chain.size();
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) {
        double acc = chain.psi()[i].to_double();
        for (std::size_t j = 0; j < i; ++j) acc += et * chain.matrix()(i, j).to_double() * y[j];
        y[i] = acc / (1.0 - et * chain.matrix()(i, i).to_double());
    }
    return et * y[m - 1];
}

/// P(T_ex = k) = p(n,n)^{k-1} - p(n,n)^k, exact.
inline Rational exit_time_pmf(long n, long k) {
    if (n < 2) throw std::invalid_argument("exit_time_pmf: n must be >= 2");
    if (k < 1) throw std::invalid_argument("exit_time_pmf: k must be >= 1");
    const Rational rho = survival_probability(n, n);
    return rho.pow(k - 1) - rho.pow(k);
}

inline ExitTimeLaw exit_time_mean(long n) {
    if (n < 2) throw std::invalid_argument("exit_time_mean: n must be >= 2");
    ExitTimeLaw law;
    law.n = n;
    law.stay_prob = survival_probability(n, n);
    law.mean = Rational(1) / (Rational(1) - law.stay_prob);
    return law;
}

}  // namespace rps

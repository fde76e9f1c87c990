#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rps/asymptotics.hpp"
#include "rps/game.hpp"
#include "rps/markov.hpp"
#include "rps/recurrence.hpp"

namespace rps {

struct VerifyCheck {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string detail;  // first failure, empty when passed
};

struct VerifyReport {
    long n_max = 0;
    bool passed = true;
    std::vector<VerifyCheck> checks;
};

/// Chain provider, overridable so a deliberately corrupted chain can be fed
/// through the same checks.
using ChainSource = std::function<TruncatedChain(long)>;

/// Runs the exact self-consistency suite for 2 <= n <= n_max: row sums,
/// diagonal range, pmf normalization, cross-method means, the asymptotic
/// sandwich, and the exit-time law. Everything is exact arithmetic; any
/// failure means a broken build, not a tolerance issue.
inline VerifyReport run_verification(long n_max, const ChainSource& chains = {}) {
    if (n_max < 2) throw std::invalid_argument("run_verification: n_max must be >= 2");
    const ChainSource source =
        chains ? chains : [](long n) { return build_truncated_chain(n); };

    VerifyReport report;
    report.n_max = n_max;

    auto run = [&](const std::string& name, auto&& body) {
        VerifyCheck check;
        check.name = name;
        body(check);
        report.checks.push_back(check);
        if (!check.passed) report.passed = false;
    };
    auto fail = [](VerifyCheck& c, const std::string& detail) {
        if (c.passed) {
            c.passed = false;
            c.detail = detail;
        }
    };

    run("row_sums_one", [&](VerifyCheck& c) {
        const TruncatedChain chain = source(n_max);
        for (long state = 2; state <= n_max; ++state) {
            ++c.cases;
            Rational sum = chain.psi()[TruncatedChain::row_of_state(state)];
            for (long j = 2; j <= state; ++j)
                sum += chain.matrix()(TruncatedChain::row_of_state(state),
                                      TruncatedChain::row_of_state(j));
            if (sum != Rational(1))
                fail(c, "row for state " + std::to_string(state) + " sums to " + sum.str());
        }
    });

    run("diagonal_in_open_unit_interval", [&](VerifyCheck& c) {
        const TruncatedChain chain = source(n_max);
        for (long state = 2; state <= n_max; ++state) {
            ++c.cases;
            const std::size_t i = TruncatedChain::row_of_state(state);
            const Rational& d = chain.matrix()(i, i);
            if (!(d > Rational(0) && d < Rational(1)))
                fail(c, "p(" + std::to_string(state) + "," + std::to_string(state) + ") = " +
                            d.str() + " outside (0,1)");
        }
    });

    run("pmf_normalization", [&](VerifyCheck& c) {
        for (long n = 2; n <= n_max; ++n) {
            ++c.cases;
            const TruncatedChain chain = source(n);
            const auto inv = invert_lower_triangular(
                LowerTriangularMatrix::identity(chain.size()) - chain.matrix());
            const Rational mass = inv.apply(chain.psi())[chain.size() - 1];
            if (mass != Rational(1))
                fail(c, "total mass at n = " + std::to_string(n) + " is " + mass.str());
        }
    });

    run("cross_method_means", [&](VerifyCheck& c) {
        for (long n = 2; n <= n_max; ++n) {
            ++c.cases;
            const Rational by_recurrence = mean_by_recurrence(n);
            const Rational by_closed_form = mean_by_closed_form(n);
            const TruncatedChain chain = source(n);
            const auto inv = invert_lower_triangular(
                LowerTriangularMatrix::identity(chain.size()) - chain.matrix());
            const Rational by_matrix = inv.apply(inv.apply(chain.psi()))[chain.size() - 1];
            if (by_recurrence != by_closed_form || by_recurrence != by_matrix)
                fail(c, "n = " + std::to_string(n) + ": recurrence " + by_recurrence.str() +
                            ", closed form " + by_closed_form.str() + ", matrix " +
                            by_matrix.str());
        }
    });

    run("mean_growth_sandwich", [&](VerifyCheck& c) {
        for (long n = 2; n <= n_max; ++n) {
            ++c.cases;
            const Rational mean = mean_by_recurrence(n);
            const auto [lower, upper] = bounds(n);
            if (!(lower <= mean && mean <= upper))
                fail(c, "n = " + std::to_string(n) + ": mean " + mean.str() +
                            " escapes [" + lower.str() + ", " + upper.str() + "]");
        }
    });

    run("exit_time_law", [&](VerifyCheck& c) {
        for (long n = 2; n <= n_max; ++n) {
            ++c.cases;
            const TruncatedChain chain = source(n);
            const Rational mean = Rational(1) / (Rational(1) - chain.stay_probability());
            const Rational expected =
                Rational(int_pow(BigInt(3), static_cast<unsigned long>(n - 1)),
                         int_pow(BigInt(2), static_cast<unsigned long>(n)) - 2);
            const Rational lower = Rational(1, 3) * Rational(3, 2).pow(n);
            if (mean != expected)
                fail(c, "n = " + std::to_string(n) + ": exit mean " + mean.str() +
                            " != 3^{n-1}/(2^n-2) = " + expected.str());
            else if (mean < lower)
                fail(c, "n = " + std::to_string(n) + ": exit mean " + mean.str() +
                            " below (1/3)(3/2)^n = " + lower.str());
        }
    });

    return report;
}

}  // namespace rps

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rps/rational.hpp"
#include "rps/recurrence.hpp"

namespace rps {

/// Exact growth data for one n: the mean, the sandwich bounds
/// (1/3)(3/2)^n <= E_n <= (1/3)n^3(3/2)^n, the exact remainder
/// E_n - (1/3)(3/2)^n, and the float ratio mean/lower.
struct AsymptoticReport {
    long n = 0;
    Rational mean;
    Rational lower;
    Rational upper;
    Rational remainder_exact;
    double ratio = 0.0;
};

/// Exact pair ((1/3)(3/2)^n, (1/3)n^3(3/2)^n).
inline std::pair<Rational, Rational> bounds(long n) {
    if (n < 2) throw std::invalid_argument("bounds: n must be >= 2");
    const Rational lower = Rational(1, 3) * Rational(3, 2).pow(n);
    return {lower, Rational(static_cast<long long>(n) * n * n) * lower};
}

/// r_n = E_n - (1/3)(3/2)^n, exact.
inline Rational remainder_exact(long n) {
    if (n < 2) throw std::invalid_argument("remainder_exact: n must be >= 2");
    return mean_by_recurrence(n) - Rational(1, 3) * Rational(3, 2).pow(n);
}

/// Fractional part of log2(l). Computed against the integer bit length so
/// exact powers of two give exactly zero.
inline double log2_fractional(std::uint64_t l) {
    if (l == 0) throw std::invalid_argument("log2_fractional: l must be >= 1");
    return std::log2(static_cast<double>(l)) - static_cast<double>(std::bit_width(l) - 1);
}

/// Truncated evaluation of the remainder series
///   r_n = (1/3) 1/(2^n-1) [ (3/2)^n
///         + sum_{s=2..n} C(n,s)(3/2)^s sum_{l>=1} l^{-s} 2^{delta(l)n} ],
/// summing l up to l_max. Returns (approximation, truncation_bound) where the
/// bound covers the discarded l-tail: 2^{delta(l)n} < 2^n and
/// sum_{l>L} l^{-s} <= sum_{l>L} l^{-2} <= 1/L give
///   bound = (1/3) 1/(2^n-1) sum_{s=2..n} C(n,s)(3/2)^s 2^n / l_max.
/// Everything outsized is carried in base-2 logs; the l sums are normalized
/// by 2^n so no intermediate overflows.
inline std::pair<double, double> remainder_series(long n, std::uint64_t l_max) {
    if (n < 2) throw std::invalid_argument("remainder_series: n must be >= 2");
    if (l_max < 1) throw std::invalid_argument("remainder_series: l_max must be >= 1");

    const double nd = static_cast<double>(n);
    const double log2_3 = std::log2(3.0);
    // log2(2^n - 1) = n + log2(1 - 2^{-n})
    const double log2_2n1 = nd + std::log1p(-std::exp2(-nd)) / std::numbers::ln2;
    const double log2_scale = -log2_3 - log2_2n1;  // log2 of (1/3)/(2^n - 1)

    // log2 of C(n,s)(3/2)^s per s
    std::vector<double> log2_factor(static_cast<std::size_t>(n) + 1, 0.0);
    for (long s = 2; s <= n; ++s)
        log2_factor[static_cast<std::size_t>(s)] =
            (std::lgamma(nd + 1) - std::lgamma(static_cast<double>(s) + 1) -
             std::lgamma(nd - static_cast<double>(s) + 1)) /
                std::numbers::ln2 +
            static_cast<double>(s) * (log2_3 - 1.0);

    // inner[s] = sum_{l<=l_max} l^{-s} 2^{(delta(l)-1) n}, bounded by zeta(2)
    std::vector<double> inner(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::uint64_t l = 1; l <= l_max; ++l) {
        const double weight = std::exp2((log2_fractional(l) - 1.0) * nd);
        const double inv = 1.0 / static_cast<double>(l);
        double p = inv * inv;
        for (long s = 2; s <= n; ++s) {
            inner[static_cast<std::size_t>(s)] += p * weight;
            p *= inv;
        }
    }

    double approx = std::exp2(nd * (log2_3 - 1.0) + log2_scale);  // the (3/2)^n term
    double log2_factor_sum = -std::numeric_limits<double>::infinity();
    for (long s = 2; s <= n; ++s) {
        const double lf = log2_factor[static_cast<std::size_t>(s)];
        const double in = inner[static_cast<std::size_t>(s)];
        if (in > 0) approx += std::exp2(lf + std::log2(in) + nd + log2_scale);
        log2_factor_sum = lf > log2_factor_sum
                              ? lf + std::log2(1.0 + std::exp2(log2_factor_sum - lf))
                              : log2_factor_sum + std::log2(1.0 + std::exp2(lf - log2_factor_sum));
    }
    const double bound = std::exp2(log2_factor_sum + nd + log2_scale -
                                   std::log2(static_cast<double>(l_max)));
    return {approx, bound};
}

inline AsymptoticReport asymptotic_report(long n) {
    if (n < 2) throw std::invalid_argument("asymptotic_report: n must be >= 2");
    AsymptoticReport r;
    r.n = n;
    r.mean = mean_by_recurrence(n);
    const auto [lower, upper] = bounds(n);
    r.lower = lower;
    r.upper = upper;
    r.remainder_exact = r.mean - r.lower;
    r.ratio = (r.mean / r.lower).to_double();
    return r;
}

}  // namespace rps

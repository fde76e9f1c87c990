#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "rps/rational.hpp"
#include "rps/series.hpp"

namespace rps {

/// Mean stopping times E_1..E_max_n. E_1 = 0 by convention.
struct MeanTable {
    long max_n = 0;
    std::vector<Rational> values;  // values[k-1] = E_k
};

/// EGF coefficients h_1..h_max_k of (1/3)(e^{3x} - 1 - 3x)/(e^{2x} - 1).
struct HCoefficients {
    long max_k = 0;
    std::vector<Rational> values;  // values[k-1] = h_k
};

namespace detail {

inline std::mutex& recurrence_mutex() {
    static std::mutex m;
    return m;
}

// Extends the shared mean table up to n. Caller holds the lock.
inline const std::vector<Rational>& extend_means(long n) {
    static std::vector<Rational> table{Rational(0)};  // E_1 = 0
    while (static_cast<long>(table.size()) < n) {
        const long m = static_cast<long>(table.size()) + 1;
        // Solving the j = m term out of the recurrence leaves
        // (2^m - 2) E_m = 3^{m-1} + sum_{j<m} C(m,j) E_j, and 2^m - 2 > 0.
        Rational rhs(int_pow(BigInt(3), static_cast<unsigned long>(m - 1)));
        for (long j = 2; j < m; ++j)
            rhs += Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
                   table[static_cast<std::size_t>(j - 1)];
        table.push_back(rhs / Rational(int_pow(BigInt(2), static_cast<unsigned long>(m)) - 2));
    }
    return table;
}

// Extends the shared h_k cache up to k. Caller holds the lock.
inline const std::vector<Rational>& extend_h(long k) {
    static std::vector<Rational> values;  // values[i-1] = h_i
    if (static_cast<long>(values.size()) < k) {
        const auto target = static_cast<std::size_t>(std::max<long>(k, 8));
        // Numerator (1/3)(e^{3x} - 1 - 3x) and denominator e^{2x} - 1 share the
        // factor x; one extra input order keeps the quotient exact to `target`.
        SeriesCoefficients num = exp_series(Rational(3), target + 1);
        num.coeffs[0] -= Rational(1);
        num.coeffs[1] -= Rational(3);
        num = series_scale(num, Rational(1, 3));
        SeriesCoefficients den = exp_series(Rational(2), target + 1);
        den.coeffs[0] -= Rational(1);
        const std::vector<Rational> egf = egf_from_ordinary(series_divide(num, den, target));
        values.assign(egf.begin() + 1, egf.end());
    }
    return values;
}

}  // namespace detail

/// E_n from the bottom-up recurrence with initial condition E_1 = 0.
/// Results are memoized; the table only ever grows.
inline Rational mean_by_recurrence(long n) {
    if (n < 1) throw std::invalid_argument("mean_by_recurrence: n must be >= 1");
    std::lock_guard<std::mutex> lock(detail::recurrence_mutex());
    return detail::extend_means(n)[static_cast<std::size_t>(n - 1)];
}

inline MeanTable mean_table(long max_n) {
    if (max_n < 1) throw std::invalid_argument("mean_table: max_n must be >= 1");
    std::lock_guard<std::mutex> lock(detail::recurrence_mutex());
    const auto& table = detail::extend_means(max_n);
    return MeanTable{max_n, {table.begin(), table.begin() + max_n}};
}

inline Rational h_coefficient(long k) {
    if (k < 1) throw std::invalid_argument("h_coefficient: k must be >= 1");
    std::lock_guard<std::mutex> lock(detail::recurrence_mutex());
    return detail::extend_h(k)[static_cast<std::size_t>(k - 1)];
}

inline HCoefficients h_coefficients(long max_k) {
    if (max_k < 1) throw std::invalid_argument("h_coefficients: max_k must be >= 1");
    std::lock_guard<std::mutex> lock(detail::recurrence_mutex());
    const auto& values = detail::extend_h(max_k);
    return HCoefficients{max_k, {values.begin(), values.begin() + max_k}};
}

/// E_n = sum_{k=1}^{n-1} C(n,k) h_k / (2^k - 1), exact.
inline Rational mean_by_closed_form(long n) {
    if (n < 2) throw std::invalid_argument("mean_by_closed_form: n must be >= 2");
    const HCoefficients h = h_coefficients(n - 1);
    Rational sum;
    for (long k = 1; k <= n - 1; ++k)
        sum += Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
               h.values[static_cast<std::size_t>(k - 1)] /
               Rational(int_pow(BigInt(2), static_cast<unsigned long>(k)) - 1);
    return sum;
}

}  // namespace rps

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

/// Ordinary coefficients c_0..c_order of a truncated power series
/// sum c_k x^k. Coefficients beyond `order` are taken to be zero, i.e. the
/// object is an exact polynomial; callers working with genuine series must
/// carry enough terms for the order they need downstream.
struct SeriesCoefficients {
    std::vector<Rational> coeffs;

    SeriesCoefficients() : coeffs(1) {}
    explicit SeriesCoefficients(std::size_t order) : coeffs(order + 1) {}
    explicit SeriesCoefficients(std::vector<Rational> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.resize(1);
    }

    std::size_t order() const { return coeffs.size() - 1; }

    Rational at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }

    friend bool operator==(const SeriesCoefficients& a, const SeriesCoefficients& b) {
        const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t k = 0; k < n; ++k)
            if (a.at(k) != b.at(k)) return false;
        return true;
    }
};

/// Coefficients of e^{cx}: c^k / k! for k = 0..order.
inline SeriesCoefficients exp_series(const Rational& c, std::size_t order) {
    SeriesCoefficients s(order);
    s.coeffs[0] = Rational(1);
    for (std::size_t k = 1; k <= order; ++k)
        s.coeffs[k] = s.coeffs[k - 1] * c / Rational(static_cast<long long>(k));
    return s;
}

inline SeriesCoefficients series_add(const SeriesCoefficients& a, const SeriesCoefficients& b) {
    SeriesCoefficients r(std::max(a.order(), b.order()));
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = a.at(k) + b.at(k);
    return r;
}

inline SeriesCoefficients series_sub(const SeriesCoefficients& a, const SeriesCoefficients& b) {
    SeriesCoefficients r(std::max(a.order(), b.order()));
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] = a.at(k) - b.at(k);
    return r;
}

inline SeriesCoefficients series_scale(const SeriesCoefficients& a, const Rational& c) {
    SeriesCoefficients r = a;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

/// Truncated Cauchy product up to x^order.
inline SeriesCoefficients series_multiply(const SeriesCoefficients& a, const SeriesCoefficients& b,
                                          std::size_t order) {
    SeriesCoefficients r(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc;
        for (std::size_t i = 0; i <= k; ++i) acc += a.at(i) * b.at(k - i);
        r.coeffs[k] = std::move(acc);
    }
    return r;
}

/// Argument substitution x -> c x, i.e. coefficient k becomes c^k c_k.
inline SeriesCoefficients series_scale_argument(const SeriesCoefficients& a, const Rational& c) {
    SeriesCoefficients r = a;
    Rational p(1);
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
        r.coeffs[k] *= p;
        p *= c;
    }
    return r;
}

/// Quotient of two series that share a common factor x^m, where m is the
/// valuation of the denominator. The factor is cancelled and the remaining
/// unit-denominator division is solved coefficient by coefficient.
inline SeriesCoefficients series_divide(const SeriesCoefficients& num,
                                        const SeriesCoefficients& den, std::size_t order) {
    std::size_t m = 0;
    while (m < den.coeffs.size() && den.coeffs[m].is_zero()) ++m;
    if (m == den.coeffs.size())
        throw std::domain_error("series_divide: denominator is identically zero");
    for (std::size_t k = 0; k < m; ++k)
        if (!num.at(k).is_zero())
            throw std::domain_error(
                "series_divide: numerator valuation below denominator valuation");

    const Rational& lead = den.coeffs[m];
    SeriesCoefficients q(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = num.at(k + m);
        for (std::size_t i = 1; i <= k; ++i) acc -= den.at(m + i) * q.coeffs[k - i];
        q.coeffs[k] = acc / lead;
    }
    return q;
}

/// The one place that owns factorial bookkeeping: exponential-generating-
/// function coefficients a_k = k! c_k from ordinary coefficients c_k.
inline std::vector<Rational> egf_from_ordinary(const SeriesCoefficients& s) {
    std::vector<Rational> out(s.coeffs.size());
    Rational factorial(1);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (k > 0) factorial *= Rational(static_cast<long long>(k));
        out[k] = s.coeffs[k] * factorial;
    }
    return out;
}

}  // namespace rps

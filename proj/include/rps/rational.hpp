#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace rps {

using BigInt = boost::multiprecision::cpp_int;

/// n choose k as an exact big integer (0 when k > n).
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// Exact fraction of arbitrary-precision integers, always kept in canonical
/// form: denominator > 0 and gcd(|numerator|, denominator) = 1. Zero is 0/1.
/// Equality is plain field equality, which canonical form makes exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // implicit: lets 3 mean 3/1
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    Rational(long long num, long long den) : num_(num), den_(den) { canonicalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Integer power; negative exponents invert (zero base then rejected).
    Rational pow(long exp) const {
        if (exp >= 0)
            return Rational(int_pow(num_, static_cast<unsigned long>(exp)),
                            int_pow(den_, static_cast<unsigned long>(exp)));
        if (num_ == 0) throw std::domain_error("Rational: 0 to a negative power");
        return Rational(int_pow(den_, static_cast<unsigned long>(-exp)),
                        int_pow(num_, static_cast<unsigned long>(-exp)));
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Nearest-double approximation, valid even when numerator and denominator
    /// individually exceed double range (aligns bit lengths before dividing).
    double to_double() const {
        namespace mp = boost::multiprecision;
        if (num_ == 0) return 0.0;
        BigInt a = mp::abs(num_);
        const long shift = static_cast<long>(mp::msb(a)) - static_cast<long>(mp::msb(den_));
        const long k = 62 - shift;
        BigInt b = den_;
        if (k > 0)
            a <<= k;
        else if (k < 0)
            b <<= -k;
        const BigInt q = a / b;
        double d = std::ldexp(q.convert_to<double>(), static_cast<int>(-k));
        return num_ < 0 ? -d : d;
    }

    /// Decimal expansion rounded (half away from zero) to `digits` significant
    /// digits. Uses a fixed-point layout for moderate exponents and
    /// "d.ddd...e±X" otherwise, trailing zeros stripped.
    std::string to_decimal_string(unsigned digits = 15) const {
        if (digits == 0) throw std::invalid_argument("to_decimal_string: digits must be >= 1");
        if (num_ == 0) return "0";
        const BigInt a = boost::multiprecision::abs(num_);
        const BigInt& b = den_;
        const BigInt ten(10);

        auto ge_pow10 = [&](long exp) {
            if (exp >= 0) return a >= b * int_pow(ten, static_cast<unsigned long>(exp));
            return a * int_pow(ten, static_cast<unsigned long>(-exp)) >= b;
        };
        long e = static_cast<long>(a.str().size()) - static_cast<long>(b.str().size());
        if (ge_pow10(e + 1))
            ++e;
        else if (!ge_pow10(e))
            --e;
        // now 10^e <= a/b < 10^{e+1}

        const long s = static_cast<long>(digits) - 1 - e;
        BigInt n = a, d = b;
        if (s >= 0)
            n *= int_pow(ten, static_cast<unsigned long>(s));
        else
            d *= int_pow(ten, static_cast<unsigned long>(-s));
        BigInt scaled = (2 * n + d) / (2 * d);
        if (scaled == int_pow(ten, digits)) {
            scaled /= 10;
            ++e;
        }
        std::string ds = scaled.str();

        auto strip = [](std::string t) {
            while (!t.empty() && t.back() == '0') t.pop_back();
            return t;
        };
        std::string out;
        if (e < -4 || e >= static_cast<long>(digits)) {
            std::string frac = strip(ds.substr(1));
            out = ds.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" +
                  (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
        } else if (e >= 0) {
            std::string frac = strip(ds.substr(static_cast<std::size_t>(e) + 1));
            out = ds.substr(0, static_cast<std::size_t>(e) + 1) +
                  (frac.empty() ? "" : "." + frac);
        } else {
            std::string frac = strip(std::string(static_cast<std::size_t>(-e - 1), '0') + ds);
            out = "0." + frac;
        }
        return num_ < 0 ? "-" + out : out;
    }

    /// "num/den", always with the (positive, reduced) denominator.
    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void canonicalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace rps

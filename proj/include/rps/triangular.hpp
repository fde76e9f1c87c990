#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(std::size_t i)
        : std::domain_error("singular triangular matrix: zero diagonal entry at index " +
                            std::to_string(i)),
          index(i) {}
    std::size_t index;
};

/// Dense square matrix of Rationals whose strictly upper part is identically
/// zero. Writes above the diagonal are rejected, so the invariant holds by
/// construction.
class LowerTriangularMatrix {
public:
    explicit LowerTriangularMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("LowerTriangularMatrix: dim must be positive");
    }

    static LowerTriangularMatrix identity(std::size_t dim) {
        LowerTriangularMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.set(i, i, Rational(1));
        return m;
    }

    std::size_t dim() const { return dim_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[i * dim_ + j];
    }

    void set(std::size_t i, std::size_t j, Rational v) {
        check_index(i, j);
        if (j > i) throw std::invalid_argument("LowerTriangularMatrix: write above the diagonal");
        entries_[i * dim_ + j] = std::move(v);
    }

    friend bool operator==(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

    friend LowerTriangularMatrix operator*(const LowerTriangularMatrix& a,
                                           const LowerTriangularMatrix& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("LowerTriangularMatrix: dimension mismatch in product");
        LowerTriangularMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                Rational acc;
                for (std::size_t k = j; k <= i; ++k) acc += a(i, k) * b(k, j);
                r.set(i, j, std::move(acc));
            }
        }
        return r;
    }

    friend LowerTriangularMatrix operator+(const LowerTriangularMatrix& a,
                                           const LowerTriangularMatrix& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("LowerTriangularMatrix: dimension mismatch in sum");
        LowerTriangularMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j <= i; ++j) r.set(i, j, a(i, j) + b(i, j));
        return r;
    }

    friend LowerTriangularMatrix operator-(const LowerTriangularMatrix& a,
                                           const LowerTriangularMatrix& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("LowerTriangularMatrix: dimension mismatch in difference");
        LowerTriangularMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j <= i; ++j) r.set(i, j, a(i, j) - b(i, j));
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != dim_)
            throw std::invalid_argument("LowerTriangularMatrix: dimension mismatch in apply");
        std::vector<Rational> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            Rational acc;
            for (std::size_t j = 0; j <= i; ++j) acc += (*this)(i, j) * v[j];
            out[i] = std::move(acc);
        }
        return out;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= dim_ || j >= dim_)
            throw std::out_of_range("LowerTriangularMatrix: index out of range");
    }

    std::size_t dim_;
    std::vector<Rational> entries_;
};

/// Exact inverse of a lower-triangular matrix by forward substitution,
/// column by column. Throws SingularMatrixError naming the first zero
/// diagonal entry.
inline LowerTriangularMatrix invert_lower_triangular(const LowerTriangularMatrix& a) {
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
        if (a(i, i).is_zero()) throw SingularMatrixError(i);

    LowerTriangularMatrix x(m);
    for (std::size_t j = 0; j < m; ++j) {
        x.set(j, j, Rational(1) / a(j, j));
        for (std::size_t i = j + 1; i < m; ++i) {
            Rational acc;
            for (std::size_t k = j; k < i; ++k) acc += a(i, k) * x(k, j);
            x.set(i, j, -acc / a(i, i));
        }
    }
    return x;
}

/// A^k v by k successive exact matrix-vector products.
inline std::vector<Rational> matrix_power_apply(const LowerTriangularMatrix& a, unsigned long k,
                                                std::vector<Rational> v) {
    if (v.size() != a.dim())
        throw std::invalid_argument("matrix_power_apply: dimension mismatch");
    for (unsigned long step = 0; step < k; ++step) v = a.apply(v);
    return v;
}

}  // namespace rps

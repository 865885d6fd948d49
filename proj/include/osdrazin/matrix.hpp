#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "osdrazin/errors.hpp"
#include "osdrazin/scalar.hpp"

namespace osdrazin {

/// Dense n x n matrix over an exact scalar ring. Immutable in spirit: all
/// arithmetic returns new values. Every entry belongs to ring().
template <Scalar T>
class Matrix {
public:
    using scalar_type = T;
    using ring_type = typename T::ring_type;

    Matrix(std::size_t n, const T& fill) : n_(n), ring_(fill.ring()), data_(n * n, fill)
    {
        if (n == 0) throw DimensionMismatch("matrix dimension must be positive");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : Matrix(std::vector<std::vector<T>>(rows.begin(), rows.end()))
    {
    }

    explicit Matrix(const std::vector<std::vector<T>>& rows) : n_(rows.size())
    {
        if (n_ == 0) throw DimensionMismatch("matrix dimension must be positive");
        ring_ = rows[0].empty() ? ring_type{} : rows[0][0].ring();
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionMismatch("matrix rows must have length dim");
            for (const auto& v : row) {
                if (!(v.ring() == ring_)) throw DimensionMismatch("matrix entries from different rings");
                data_.push_back(v);
            }
        }
    }

    static Matrix zero(std::size_t n, const ring_type& ring = {}) { return Matrix(n, ring.from_int(0)); }

    static Matrix identity(std::size_t n, const ring_type& ring = {})
    {
        Matrix m = zero(n, ring);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.from_int(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& diag)
    {
        Matrix m = zero(diag.size(), diag.at(0).ring());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    std::size_t dim() const { return n_; }
    const ring_type& ring() const { return ring_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    Matrix identity_like() const { return identity(n_, ring_); }
    Matrix zero_like() const { return zero(n_, ring_); }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_identity() const { return *this == identity_like(); }

    Matrix transpose() const
    {
        Matrix t = zero_like();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_compatible(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_compatible(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& s)
    {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& v : a.data_) v = -v;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        a.check_compatible(b);
        const std::size_t n = a.n_;
        Matrix c = a.zero_like();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const T& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.n_ == b.n_ && a.ring_ == b.ring_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.n_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j).str();
            os << ']';
        }
        return os << ']';
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
            s += ']';
        }
        return s + ']';
    }

private:
    void check_compatible(const Matrix& o) const
    {
        if (n_ != o.n_)
            throw DimensionMismatch("matrix dimensions differ (" + std::to_string(n_) + " vs " +
                                    std::to_string(o.n_) + ")");
        if (!(ring_ == o.ring_))
            throw DimensionMismatch("matrix scalar rings differ (" + ring_.name() + " vs " + o.ring_.name() + ")");
    }

    std::size_t n_ = 0;
    ring_type ring_{};
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<Gaussian>;
using ModMatrix = Matrix<ModInt>;

template <Scalar T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b;
}

/// a^k by repeated squaring; a^0 is the identity.
template <Scalar T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned k)
{
    Matrix<T> result = a.identity_like();
    Matrix<T> base = a;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

/// True iff a^dim = 0. In finite dimension this is exactly quasi-nilpotency.
template <Scalar T>
bool is_nilpotent(const Matrix<T>& a)
{
    return mat_pow(a, static_cast<unsigned>(a.dim())).is_zero();
}

/// Coefficients c_0..c_n of det(tI - a), lowest degree first (c_n = 1).
/// Division-free (Samuelson-Berkowitz), so valid over any commutative ring.
template <Scalar T>
std::vector<T> charpoly_coefficients(const Matrix<T>& a)
{
    const auto& R = a.ring();
    const std::size_t n = a.dim();
    // p holds coefficients highest degree first while iterating.
    std::vector<T> p{R.from_int(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<T> col{R.from_int(1), -a(r, r)};
        std::vector<T> v(r, R.from_int(0)); // v = A_r^m C
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t m = 0; m < r; ++m) {
            T dot = R.from_int(0);
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
            col.push_back(-dot);
            std::vector<T> w(r, R.from_int(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) w[i] += a(i, j) * v[j];
            v = std::move(w);
        }
        std::vector<T> q(r + 2, R.from_int(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += col[i - j] * p[j];
        p = std::move(q);
    }
    return std::vector<T>(p.rbegin(), p.rend());
}

template <Scalar T>
T determinant(const Matrix<T>& a)
{
    auto c = charpoly_coefficients(a);
    return (a.dim() % 2 == 0) ? c[0] : -c[0];
}

} // namespace osdrazin

#pragma once

// Field linear algebra: rank, left solves, inverses, null spaces.
//
// Everything here runs Gauss-Jordan elimination on a small rectangular
// work array. Rectangular shapes only appear internally (linear systems
// in n^2 unknowns); the public algebra elements stay square.

#include <optional>
#include <string>
#include <vector>

#include "osdrazin/matrix.hpp"

namespace osdrazin {

template <class Ring>
void require_field(const Ring& ring, const char* op)
{
    if (!ring.is_field())
        throw UnsupportedRing(std::string(op) + " requires a field, got " + ring.name());
}

namespace detail {

/// Row-major rows x cols work array.
template <Scalar T>
struct Dense {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> a;

    Dense(std::size_t r, std::size_t c, const T& zero) : rows(r), cols(c), a(r * c, zero) {}
    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Reduced row echelon form in place, pivoting only among the first
/// `pivot_cols` columns. Returns the pivot column of each pivot row.
template <Scalar T>
std::vector<std::size_t> rref(Dense<T>& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        const T inv = *m.at(row, col).try_inverse();
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const T f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <Scalar T>
Dense<T> to_dense(const Matrix<T>& a)
{
    Dense<T> d(a.dim(), a.dim(), a.ring().from_int(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) d.at(i, j) = a(i, j);
    return d;
}

} // namespace detail

/// Solves M u = rhs for an unknown vector u of length M.cols. Returns the
/// solution with every free variable set to zero, or nullopt.
template <Scalar T>
std::optional<std::vector<T>> solve_linear(const detail::Dense<T>& m, const std::vector<T>& rhs)
{
    const T zero = m.a.empty() ? rhs.at(0).ring().from_int(0) : m.a[0].ring().from_int(0);
    require_field(zero.ring(), "solve_linear");
    detail::Dense<T> aug(m.rows, m.cols + 1, zero);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    const auto pivots = detail::rref(aug, m.cols);
    for (std::size_t i = pivots.size(); i < m.rows; ++i)
        if (!aug.at(i, m.cols).is_zero()) return std::nullopt;
    std::vector<T> u(m.cols, zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = aug.at(r, m.cols);
    return u;
}

/// Basis of {u : M u = 0}, one vector per free column, in column order.
template <Scalar T>
std::vector<std::vector<T>> nullspace(detail::Dense<T> m)
{
    const T zero = m.a.at(0).ring().from_int(0);
    require_field(zero.ring(), "nullspace");
    const auto pivots = detail::rref(m, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> u(m.cols, zero);
        u[f] = zero.ring().from_int(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(u));
    }
    return basis;
}

template <Scalar T>
std::size_t rank(const Matrix<T>& a)
{
    require_field(a.ring(), "rank");
    auto d = detail::to_dense(a);
    return detail::rref(d, d.cols).size();
}

/// Some X with X a = b, free parameters zeroed; nullopt when unsolvable.
template <Scalar T>
std::optional<Matrix<T>> solve_left(const Matrix<T>& a, const Matrix<T>& b)
{
    require_field(a.ring(), "solve_left");
    if (a.dim() != b.dim() || !(a.ring() == b.ring()))
        throw DimensionMismatch("solve_left: operands differ in dimension or ring");
    // X a = b  <=>  a^T X^T = b^T, solved for all columns of X^T at once.
    const std::size_t n = a.dim();
    detail::Dense<T> aug(n, 2 * n, a.ring().from_int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aug.at(i, j) = a(j, i);
            aug.at(i, n + j) = b(j, i);
        }
    const auto pivots = detail::rref(aug, n);
    for (std::size_t i = pivots.size(); i < n; ++i)
        for (std::size_t j = n; j < 2 * n; ++j)
            if (!aug.at(i, j).is_zero()) return std::nullopt;
    Matrix<T> x = a.zero_like();
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t k = 0; k < n; ++k) x(k, pivots[r]) = aug.at(r, n + k);
    return x;
}

/// Two-sided inverse, or nullopt for singular input. Fields use Gauss-Jordan;
/// Z/m with composite m uses Cayley-Hamilton with a unit determinant.
template <Scalar T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a)
{
    const std::size_t n = a.dim();
    const auto& R = a.ring();
    if (!R.is_field()) {
        const auto c = charpoly_coefficients(a);
        const auto c0_inv = c[0].try_inverse();
        if (!c0_inv) return std::nullopt;
        // a^{-1} = -(a^{n-1} + c_{n-1} a^{n-2} + ... + c_1) / c_0, by Horner.
        Matrix<T> acc = a.identity_like();
        for (std::size_t k = n - 1; k >= 1; --k) acc = acc * a + a.identity_like() * c[k];
        return acc * (-*c0_inv);
    }
    detail::Dense<T> aug(n, 2 * n, R.from_int(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a(i, j);
        aug.at(i, n + i) = R.from_int(1);
    }
    if (detail::rref(aug, n).size() < n) return std::nullopt;
    Matrix<T> inv = a.zero_like();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug.at(i, n + j);
    return inv;
}

/// Matrix of the linear map vec(Z) -> vec(sum_t L_t Z R_t) on row-major vec.
template <Scalar T>
detail::Dense<T> sandwich_operator(const std::vector<std::pair<Matrix<T>, Matrix<T>>>& terms)
{
    const std::size_t n = terms.at(0).first.dim();
    detail::Dense<T> op(n * n, n * n, terms[0].first.ring().from_int(0));
    // (L Z R)_{ij} = sum_{k,l} L_ik Z_kl R_lj
    for (const auto& [L, Rm] : terms)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (L(i, k).is_zero()) continue;
                    for (std::size_t l = 0; l < n; ++l)
                        if (!Rm(l, j).is_zero()) op.at(i * n + j, k * n + l) += L(i, k) * Rm(l, j);
                }
    return op;
}

template <Scalar T>
Matrix<T> unvec(const std::vector<T>& v, std::size_t n)
{
    Matrix<T> m = Matrix<T>::zero(n, v.at(0).ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

template <Scalar T>
std::vector<T> vec(const Matrix<T>& m)
{
    std::vector<T> v;
    v.reserve(m.dim() * m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) v.push_back(m(i, j));
    return v;
}

/// Basis of {Z : sum_t L_t Z R_t = 0}.
template <Scalar T>
std::vector<Matrix<T>> sandwich_kernel(const std::vector<std::pair<Matrix<T>, Matrix<T>>>& terms)
{
    const std::size_t n = terms.at(0).first.dim();
    std::vector<Matrix<T>> out;
    for (const auto& u : nullspace(sandwich_operator(terms))) out.push_back(unvec(u, n));
    return out;
}

} // namespace osdrazin

#pragma once

// Reference implementations for tests. They work on plain mpq grids and share
// no code with the library's elimination, charpoly or Drazin routines, so an
// agreement between the two is evidence rather than a tautology.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "osdrazin/matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

inline Grid from(const osdrazin::RationalMatrix& m)
{
    Grid g(m.dim(), std::vector<mpq_class>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) g[i][j] = m(i, j).value();
    return g;
}

inline osdrazin::RationalMatrix to_matrix(const Grid& g)
{
    auto m = osdrazin::RationalMatrix::zero(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = osdrazin::Rational(g[i][j]);
    return m;
}

inline Grid identity(std::size_t n)
{
    Grid g(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
    return g;
}

/// Rectangular product.
inline Grid mul(const Grid& a, const Grid& b)
{
    const std::size_t r = a.size(), inner = b.size(), c = b.empty() ? 0 : b[0].size();
    Grid out(r, std::vector<mpq_class>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Grid power(const Grid& a, unsigned k)
{
    Grid out = identity(a.size());
    for (unsigned i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

/// Row echelon by column sweeps with full pivot search; returns pivot columns.
inline std::vector<std::size_t> echelon(Grid& g)
{
    std::vector<std::size_t> pivots;
    if (g.empty()) return pivots;
    const std::size_t rows = g.size(), cols = g[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && g[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(g[p], g[r]);
        const mpq_class inv = 1 / g[r][c];
        for (auto& v : g[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || g[i][c] == 0) continue;
            const mpq_class f = g[i][c];
            for (std::size_t j = 0; j < cols; ++j) g[i][j] -= f * g[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Grid g)
{
    return echelon(g).size();
}

inline std::optional<Grid> inverse(const Grid& a)
{
    const std::size_t n = a.size();
    Grid aug(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    const auto piv = echelon(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Grid out(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

/// Column basis of the null space.
inline std::vector<std::vector<mpq_class>> kernel(Grid g)
{
    const std::size_t cols = g.empty() ? 0 : g[0].size();
    const auto piv = echelon(g);
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -g[i][f];
        basis.push_back(v);
    }
    return basis;
}

inline unsigned index(const Grid& a)
{
    unsigned k = 0;
    Grid p = identity(a.size());
    std::size_t prev = a.size();
    for (;; ++k) {
        p = mul(p, a);
        const std::size_t r = rank(p);
        if (r == prev) return k;
        prev = r;
    }
}

/// Drazin inverse through the core-nilpotent splitting C^n = R(A^k) + N(A^k):
/// in the basis S = [range | kernel], A = diag(C, nilpotent), X = S diag(C^{-1}, 0) S^{-1}.
inline std::pair<Grid, unsigned> drazin(const Grid& a)
{
    const std::size_t n = a.size();
    const unsigned k = index(a);
    const Grid ak = power(a, k);
    // range basis: pivot columns of A^k
    Grid tmp = ak;
    const auto piv = echelon(tmp);
    std::vector<std::vector<mpq_class>> cols;
    for (auto c : piv) {
        std::vector<mpq_class> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = ak[i][c];
        cols.push_back(v);
    }
    const std::size_t r = cols.size();
    for (auto& v : kernel(ak)) cols.push_back(v);
    Grid s(n, std::vector<mpq_class>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) s[i][j] = cols[j][i];
    const Grid s_inv = *inverse(s);
    const Grid split = mul(mul(s_inv, a), s);
    Grid core(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) core[i][j] = split[i][j];
    Grid blk(n, std::vector<mpq_class>(n, 0));
    if (r > 0) {
        const Grid ci = *inverse(core);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) blk[i][j] = ci[i][j];
    }
    return {mul(mul(s, blk), s_inv), k};
}

/// Faddeev-LeVerrier: coefficients of det(tI - A), lowest degree first.
inline std::vector<mpq_class> charpoly(const Grid& a)
{
    const std::size_t n = a.size();
    std::vector<mpq_class> c(n + 1, 0);
    c[n] = 1;
    Grid m(n, std::vector<mpq_class>(n, 0)); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        Grid next = mul(a, m);
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        m = next;
        const Grid am = mul(a, m);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

// ---- M_2(Z/m) brute force on raw integers

struct Small {
    std::int64_t e[4];
};

inline Small small_mul(const Small& x, const Small& y, std::int64_t m)
{
    return {{(x.e[0] * y.e[0] + x.e[1] * y.e[2]) % m, (x.e[0] * y.e[1] + x.e[1] * y.e[3]) % m,
             (x.e[2] * y.e[0] + x.e[3] * y.e[2]) % m, (x.e[2] * y.e[1] + x.e[3] * y.e[3]) % m}};
}

inline bool small_eq(const Small& x, const Small& y)
{
    return x.e[0] == y.e[0] && x.e[1] == y.e[1] && x.e[2] == y.e[2] && x.e[3] == y.e[3];
}

inline std::vector<Small> small_ring(std::int64_t m)
{
    std::vector<Small> out;
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
            for (std::int64_t c = 0; c < m; ++c)
                for (std::int64_t d = 0; d < m; ++d) out.push_back({{a, b, c, d}});
    return out;
}

} // namespace oracle

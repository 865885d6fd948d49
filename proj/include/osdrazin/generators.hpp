#pragma once

// Seeded instance generators. Every family plants the quantity a test wants
// to observe (an index, a rank, a commuting structure) so the checks have a
// known answer to compare against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "osdrazin/intertwine.hpp"
#include "osdrazin/transfer.hpp"

namespace osdrazin::gen {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; decorrelates per-trial streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

template <Scalar T>
T random_scalar(Rng& rng, const typename T::ring_type& ring, long lo = -3, long hi = 3)
{
    if constexpr (std::is_same_v<T, Gaussian>) {
        const long re = uniform(rng, lo, hi);
        // roughly half the entries get an imaginary part
        const long im = uniform(rng, 0, 1) ? uniform(rng, lo, hi) : 0;
        return Gaussian(Rational(re), Rational(im));
    } else {
        return ring.from_int(uniform(rng, lo, hi));
    }
}

template <Scalar T>
Matrix<T> random_matrix(Rng& rng, std::size_t n, const typename T::ring_type& ring, long lo = -3, long hi = 3)
{
    auto m = Matrix<T>::zero(n, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar<T>(rng, ring, lo, hi);
    return m;
}

/// L U with unit diagonals, so the determinant is 1 over every ring.
template <Scalar T>
Matrix<T> random_invertible(Rng& rng, std::size_t n, const typename T::ring_type& ring)
{
    auto l = Matrix<T>::identity(n, ring);
    auto u = Matrix<T>::identity(n, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = random_scalar<T>(rng, ring, -2, 2);
            u(j, i) = random_scalar<T>(rng, ring, -2, 2);
        }
    return l * u;
}

/// s m s^{-1}
template <Scalar T>
Matrix<T> conjugate(const Matrix<T>& s, const Matrix<T>& m)
{
    auto inv = inverse(s);
    if (!inv) throw InvariantViolation("conjugating matrix is singular");
    return s * m * *inv;
}

/// Places `blk` on the diagonal of `m` starting at `at`.
template <Scalar T>
void place_block(Matrix<T>& m, const Matrix<T>& blk, std::size_t at)
{
    for (std::size_t i = 0; i < blk.dim(); ++i)
        for (std::size_t j = 0; j < blk.dim(); ++j) m(at + i, at + j) = blk(i, j);
}

/// Jordan block of size k at eigenvalue lambda (upper bidiagonal).
template <Scalar T>
Matrix<T> jordan_block(std::size_t k, const T& lambda)
{
    auto j = Matrix<T>::zero(k, lambda.ring());
    for (std::size_t i = 0; i < k; ++i) {
        j(i, i) = lambda;
        if (i + 1 < k) j(i, i + 1) = lambda.ring().from_int(1);
    }
    return j;
}

/// A matrix whose Drazin index is exactly k (k <= n): conjugated
/// diag(invertible core, N_k, smaller nilpotent blocks).
template <Scalar T>
Matrix<T> planted_index(Rng& rng, std::size_t n, const typename T::ring_type& ring, unsigned k)
{
    k = std::min<unsigned>(k, static_cast<unsigned>(n));
    auto j = Matrix<T>::zero(n, ring);
    std::size_t at = 0;
    if (k > 0) {
        place_block(j, jordan_block<T>(k, ring.from_int(0)), 0);
        at = k;
        // more nilpotent blocks, never longer than k
        while (at < n && uniform(rng, 0, 2) == 0) {
            const auto len = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(k, n - at))));
            place_block(j, jordan_block<T>(len, ring.from_int(0)), at);
            at += len;
        }
    }
    if (at < n) {
        // invertible core: unit upper triangular times a random nonzero diagonal
        const std::size_t m = n - at;
        auto core = random_invertible<T>(rng, m, ring);
        for (std::size_t i = 0; i < m; ++i) {
            long v = 0;
            while (v == 0) v = uniform(rng, -3, 3);
            auto scale = ring.from_int(v);
            if (!scale.try_inverse()) scale = ring.from_int(1); // composite moduli
            for (std::size_t c = 0; c < m; ++c) core(i, c) = core(i, c) * scale;
        }
        place_block(j, core, at);
    }
    return conjugate(random_invertible<T>(rng, n, ring), j);
}

/// Factors (u, v) with uv ~ [G11 G12; 0 0] and vu ~ [G11 0; G21 0] for a
/// caller-chosen r x r block G11 (r <= n), so uv and vu share the spectrum
/// of G11 away from 0.
template <Scalar T>
std::pair<Matrix<T>, Matrix<T>> factor_pair_with_core(Rng& rng, std::size_t n, const Matrix<T>& g11)
{
    const auto& ring = g11.ring();
    const std::size_t r = g11.dim();
    if (r > n) throw PreconditionViolated("factor_pair_with_core: core larger than dimension");
    auto proj = Matrix<T>::zero(n, ring);
    for (std::size_t i = 0; i < r; ++i) proj(i, i) = ring.from_int(1);
    auto g = random_matrix<T>(rng, n, ring, -2, 2);
    place_block(g, g11, 0);
    const auto s = random_invertible<T>(rng, n, ring);
    const auto t = random_invertible<T>(rng, n, ring);
    const auto s_inv = *inverse(s);
    const auto t_inv = *inverse(t);
    return {s * proj * t, t_inv * g * s_inv};
}

/// 1 - G11 of index k, hence drazin_index(1 - uv) = drazin_index(1 - vu) = k.
template <Scalar T>
std::pair<Matrix<T>, Matrix<T>> planted_factor_pair(Rng& rng, std::size_t n, const typename T::ring_type& ring,
                                                    unsigned k)
{
    k = std::min<unsigned>(k, static_cast<unsigned>(n));
    const auto r = static_cast<std::size_t>(uniform(rng, std::max<long>(1, k), static_cast<long>(n)));
    return factor_pair_with_core(rng, n, Matrix<T>(Matrix<T>::identity(r, ring) - planted_index<T>(rng, r, ring, k)));
}

// ------------------------------------------------------------- quads

/// (a, c, c, a) with planted index k for 1 - ac.
template <Scalar T>
JacobsonQuad<T> classical_quad(Rng& rng, std::size_t n, const typename T::ring_type& ring, unsigned k)
{
    auto [u, v] = planted_factor_pair<T>(rng, n, ring, k);
    return quad_from_classical(u, v);
}

/// (a, 1, 1 + z, a) with a z a = 0, so acd = dbd = dba = aca = a^2.
/// a = S diag(J_k(1), 0, D) S^{-1} gives 1 - bd = 1 - a index k.
template <Scalar T>
JacobsonQuad<T> case_two_quad(Rng& rng, std::size_t n, const typename T::ring_type& ring, unsigned k)
{
    k = std::min<unsigned>(k, static_cast<unsigned>(n > 1 ? n - 1 : n));
    auto j = Matrix<T>::zero(n, ring);
    std::size_t at = 0;
    if (k > 0) {
        place_block(j, jordan_block<T>(k, ring.from_int(1)), 0);
        at = k;
    }
    at += 1; // one zero eigenvalue so a is singular and the kernel is nontrivial
    for (; at < n; ++at) {
        long v = 1;
        while (v == 1) v = uniform(rng, -2, 3);
        j(at, at) = ring.from_int(v);
    }
    const auto a = conjugate(random_invertible<T>(rng, n, ring), j);
    auto z = Matrix<T>::zero(n, ring);
    for (const auto& basis : sandwich_kernel<T>({{a, a}})) z += basis * ring.from_int(uniform(rng, -2, 2));
    const auto I = a.identity_like();
    return JacobsonQuad<T>(a, I, I + z, a);
}

/// a = u w, d = u, b random-ish, c from quad_solve. c = w^{-1} b always
/// solves the system, so quad_solve never fails here; bd = b u is planted.
template <Scalar T>
JacobsonQuad<T> solved_quad(Rng& rng, std::size_t n, const typename T::ring_type& ring, unsigned k)
{
    auto [u, b] = planted_factor_pair<T>(rng, n, ring, k);
    const auto w = random_invertible<T>(rng, n, ring);
    auto q = quad_solve(Matrix<T>(u * w), u, b);
    if (!q) throw InvariantViolation("solved_quad: system unexpectedly unsolvable");
    return std::move(*q);
}

// ------------------------------------------------------------- pairs

/// Two idempotents with equal range: a b = b = b^2, b a = a = a^2.
template <Scalar T>
IntertwinePair<T> idempotent_pair(Rng& rng, std::size_t r, std::size_t n, const typename T::ring_type& ring,
                                  unsigned exponent = 1)
{
    if (r > n) throw PreconditionViolated("idempotent_pair: rank exceeds dimension");
    auto e = Matrix<T>::zero(n, ring);
    auto f = Matrix<T>::zero(n, ring);
    for (std::size_t i = 0; i < r; ++i) {
        e(i, i) = f(i, i) = ring.from_int(1);
        for (std::size_t j = r; j < n; ++j) f(i, j) = random_scalar<T>(rng, ring, -2, 2);
    }
    if (r == 0 || r == n) return IntertwinePair<T>(e, f, exponent);
    const auto s = random_invertible<T>(rng, n, ring);
    return IntertwinePair<T>(conjugate(s, e), conjugate(s, f), exponent);
}

/// a = b + z with z b = 0, z^2 = 0 and b = S diag(1 - N_k, 0, D) S^{-1},
/// so 1 - b has index k. Holds for every exponent n >= 1.
template <Scalar T>
IntertwinePair<T> planted_pair(Rng& rng, std::size_t n, const typename T::ring_type& ring, unsigned k,
                               unsigned exponent = 1)
{
    if (n < 2) throw PreconditionViolated("planted_pair: needs dimension >= 2");
    k = std::min<unsigned>(k, static_cast<unsigned>(n - 1));
    const auto one = ring.from_int(1);
    auto j = Matrix<T>::zero(n, ring);
    if (k > 0) place_block(j, Matrix<T>::identity(k, ring) - jordan_block<T>(k, ring.from_int(0)), 0);
    // position k stays zero; the rest gets eigenvalues away from 1
    for (std::size_t i = k + 1; i < n; ++i) {
        long v = 1;
        while (v == 1) v = uniform(rng, -2, 3);
        j(i, i) = ring.from_int(v);
    }
    // z0 = u e_k^T with u_k = 0: e_k^T j = 0, so z0 j = 0 and z0^2 = 0
    auto z0 = Matrix<T>::zero(n, ring);
    for (std::size_t i = 0; i < n; ++i)
        if (i != k) z0(i, k) = random_scalar<T>(rng, ring, -2, 2);
    if (z0.is_zero()) z0(k == 0 ? 1 : 0, k) = one;
    const auto s = random_invertible<T>(rng, n, ring);
    return IntertwinePair<T>(conjugate(s, Matrix<T>(j + z0)), conjugate(s, j), exponent);
}

// --------------------------------------------------------- witnesses

/// c_0 + c_1 m + ... + c_{deg} m^{deg}, small random coefficients.
template <Scalar T>
Matrix<T> random_polynomial_in(Rng& rng, const Matrix<T>& m, unsigned deg)
{
    auto sum = m.zero_like();
    auto term = m.identity_like();
    for (unsigned i = 0; i <= deg; ++i) {
        sum += term * random_scalar<T>(rng, m.ring(), -2, 2);
        term = term * m;
    }
    return sum;
}

/// A non-canonical strongly pi-regular witness of e at index k:
/// x = D + f(e)(1 - e D), D the Drazin inverse, k its index.
template <Scalar T>
Matrix<T> strongly_pi_witness(Rng& rng, const Matrix<T>& e, const Matrix<T>& drazin)
{
    const auto f = random_polynomial_in(rng, e, 2);
    return drazin + f * (e.identity_like() - e * drazin);
}

/// Some X with X e^{2m} = e^m (left) or e^{2m} X = e^m (right).
template <Scalar T>
std::optional<Matrix<T>> pi_regular_witness(Side side, const Matrix<T>& e, unsigned m)
{
    const auto em = mat_pow(e, m);
    const auto e2m = em * em;
    if (side == Side::right) {
        auto xt = solve_left(e2m.transpose(), em.transpose());
        if (!xt) return std::nullopt;
        return xt->transpose();
    }
    return solve_left(e2m, em);
}

} // namespace osdrazin::gen

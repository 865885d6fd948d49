#pragma once

// Indices, canonical Drazin/group inverses and the witness predicates for
// every one-sided inverse notion, together with the constructions that
// move between them (Azumaya realization, normalization, reverse order).

#include <optional>
#include <string>
#include <utility>

#include "osdrazin/linalg.hpp"
#include "osdrazin/matrix.hpp"

namespace osdrazin {

enum class Side { left, right, two_sided };

enum class WitnessKind { regular, pi_regular, strongly_pi_regular, drazin, group, generalized_drazin };

std::string to_string(Side side);
std::string to_string(WitnessKind kind);
Side parse_side(const std::string& text);
WitnessKind parse_witness_kind(const std::string& text);

/// An inverse candidate together with what it claims to be.
template <Scalar T>
struct Witness {
    Matrix<T> candidate;
    Side side = Side::left;
    WitnessKind kind = WitnessKind::drazin;
    std::optional<unsigned> index;

    Witness(Matrix<T> x, Side s, WitnessKind k, std::optional<unsigned> idx = std::nullopt)
        : candidate(std::move(x)), side(s), kind(k), index(idx)
    {
        if (kind == WitnessKind::group) {
            if (index && *index != 1) throw InvariantViolation("group witness must carry index 1");
            index = 1;
        }
    }
};

// ------------------------------------------------------------------ indices

/// Smallest k with rank(a^k) = rank(a^{k+1}); 0 iff a is invertible.
template <Scalar T>
unsigned drazin_index(const Matrix<T>& a)
{
    require_field(a.ring(), "drazin_index");
    Matrix<T> power = a.identity_like();
    std::size_t prev = a.dim();
    for (unsigned k = 0;; ++k) {
        power = power * a;
        const std::size_t next = rank(power);
        if (next == prev) return k;
        prev = next;
    }
}

namespace detail {

/// An inner inverse G of m (m G m = m) from the rank factorization m = F H,
/// where H is the nonzero part of rref(m) and F collects the pivot columns.
template <Scalar T>
Matrix<T> inner_inverse(const Matrix<T>& m)
{
    const std::size_t n = m.dim();
    auto h = to_dense(m);
    const auto pivot_cols = rref(h, n);
    const std::size_t r = pivot_cols.size();
    Matrix<T> g = m.zero_like();
    if (r == 0) return g;

    // F^T is r x n; its pivots pick r independent rows of F.
    Dense<T> ft(r, n, m.ring().from_int(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < n; ++k) ft.at(i, k) = m(k, pivot_cols[i]);
    const auto rows = rref(ft, n);

    // Invert the r x r block F[rows, :] by Gauss-Jordan.
    Dense<T> blk(r, 2 * r, m.ring().from_int(0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) blk.at(i, j) = m(rows[i], pivot_cols[j]);
        blk.at(i, r + i) = m.ring().from_int(1);
    }
    rref(blk, r);
    // G = E_p * F_l with E_p selecting pivot columns and F_l = [blk^{-1} on `rows`].
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g(pivot_cols[i], rows[j]) = blk.at(i, r + j);
    return g;
}

} // namespace detail

/// Canonical Drazin inverse a^k G a^k, G an inner inverse of a^{2k+1}.
template <Scalar T>
std::pair<Matrix<T>, unsigned> drazin_inverse(const Matrix<T>& a)
{
    const unsigned k = drazin_index(a);
    const Matrix<T> ak = mat_pow(a, k);
    const Matrix<T> g = detail::inner_inverse(mat_pow(a, 2 * k + 1));
    return {ak * g * ak, k};
}

template <Scalar T>
Matrix<T> group_inverse(const Matrix<T>& a)
{
    auto [x, k] = drazin_inverse(a);
    if (k > 1) throw IndexTooLarge("group inverse needs Drazin index <= 1, got " + std::to_string(k));
    return x;
}

// --------------------------------------------------------------- predicates

namespace detail {
template <Scalar T>
void check_same_shape(const Matrix<T>& a, const Matrix<T>& x)
{
    if (a.dim() != x.dim() || !(a.ring() == x.ring()))
        throw DimensionMismatch("witness and element differ in dimension or ring");
}
} // namespace detail

/// a x a = x a^2,  x^2 a = x,  x a^{j+1} = a^j.
template <Scalar T>
bool verify_left_drazin(const Matrix<T>& a, const Matrix<T>& x, unsigned j)
{
    detail::check_same_shape(a, x);
    const Matrix<T> xa = x * a;
    if (!(a * xa == xa * a)) return false;
    if (!(x * xa == x)) return false;
    const Matrix<T> aj = mat_pow(a, j);
    return x * (aj * a) == aj;
}

/// a y a = a^2 y,  a y^2 = y,  a^{j+1} y = a^j.
template <Scalar T>
bool verify_right_drazin(const Matrix<T>& a, const Matrix<T>& y, unsigned j)
{
    detail::check_same_shape(a, y);
    const Matrix<T> ay = a * y;
    if (!(ay * a == a * ay)) return false;
    if (!(ay * y == y)) return false;
    const Matrix<T> aj = mat_pow(a, j);
    return (a * aj) * y == aj;
}

/// a x a = x a^2,  x^2 a = x,  a x a - a nilpotent.
template <Scalar T>
bool verify_left_gdrazin(const Matrix<T>& a, const Matrix<T>& x)
{
    detail::check_same_shape(a, x);
    const Matrix<T> xa = x * a;
    const Matrix<T> axa = a * xa;
    if (!(axa == xa * a)) return false;
    if (!(x * xa == x)) return false;
    return is_nilpotent(axa - a);
}

template <Scalar T>
bool verify_right_gdrazin(const Matrix<T>& a, const Matrix<T>& y)
{
    detail::check_same_shape(a, y);
    const Matrix<T> ay = a * y;
    const Matrix<T> aya = ay * a;
    if (!(aya == a * ay)) return false;
    if (!(ay * y == y)) return false;
    return is_nilpotent(aya - a);
}

/// x a^2 = a.
template <Scalar T>
bool verify_left_regular(const Matrix<T>& a, const Matrix<T>& x)
{
    detail::check_same_shape(a, x);
    return x * a * a == a;
}

/// a^2 x = a.
template <Scalar T>
bool verify_right_regular(const Matrix<T>& a, const Matrix<T>& x)
{
    detail::check_same_shape(a, x);
    return a * a * x == a;
}

/// x a^{2n} = a^n.
template <Scalar T>
bool verify_left_pi_regular(const Matrix<T>& a, const Matrix<T>& x, unsigned n)
{
    detail::check_same_shape(a, x);
    const Matrix<T> an = mat_pow(a, n);
    return x * an * an == an;
}

template <Scalar T>
bool verify_right_pi_regular(const Matrix<T>& a, const Matrix<T>& x, unsigned n)
{
    detail::check_same_shape(a, x);
    const Matrix<T> an = mat_pow(a, n);
    return an * an * x == an;
}

/// a x a = x a^2,  x a^{p+1} = a^p.
template <Scalar T>
bool verify_left_strongly_pi(const Matrix<T>& a, const Matrix<T>& x, unsigned p)
{
    detail::check_same_shape(a, x);
    const Matrix<T> xa = x * a;
    if (!(a * xa == xa * a)) return false;
    const Matrix<T> ap = mat_pow(a, p);
    return x * (ap * a) == ap;
}

/// a y a = a^2 y,  a^{q+1} y = a^q.
template <Scalar T>
bool verify_right_strongly_pi(const Matrix<T>& a, const Matrix<T>& y, unsigned q)
{
    detail::check_same_shape(a, y);
    const Matrix<T> ay = a * y;
    if (!(ay * a == a * ay)) return false;
    const Matrix<T> aq = mat_pow(a, q);
    return (a * aq) * y == aq;
}

/// Side-dispatching helpers used by the transfer modules.
template <Scalar T>
bool verify_drazin(Side side, const Matrix<T>& a, const Matrix<T>& x, unsigned j)
{
    switch (side) {
    case Side::left: return verify_left_drazin(a, x, j);
    case Side::right: return verify_right_drazin(a, x, j);
    case Side::two_sided: break;
    }
    return verify_left_drazin(a, x, j) && verify_right_drazin(a, x, j);
}

template <Scalar T>
bool verify_gdrazin(Side side, const Matrix<T>& a, const Matrix<T>& x)
{
    switch (side) {
    case Side::left: return verify_left_gdrazin(a, x);
    case Side::right: return verify_right_gdrazin(a, x);
    case Side::two_sided: break;
    }
    return verify_left_gdrazin(a, x) && verify_right_gdrazin(a, x);
}

template <Scalar T>
bool verify_regular(Side side, const Matrix<T>& a, const Matrix<T>& x)
{
    if (side == Side::right) return verify_right_regular(a, x);
    if (side == Side::left) return verify_left_regular(a, x);
    return verify_left_regular(a, x) && verify_right_regular(a, x);
}

template <Scalar T>
bool verify_pi_regular(Side side, const Matrix<T>& a, const Matrix<T>& x, unsigned n)
{
    if (side == Side::right) return verify_right_pi_regular(a, x, n);
    if (side == Side::left) return verify_left_pi_regular(a, x, n);
    return verify_left_pi_regular(a, x, n) && verify_right_pi_regular(a, x, n);
}

template <Scalar T>
bool verify_strongly_pi(Side side, const Matrix<T>& a, const Matrix<T>& x, unsigned p)
{
    if (side == Side::right) return verify_right_strongly_pi(a, x, p);
    if (side == Side::left) return verify_left_strongly_pi(a, x, p);
    return verify_left_strongly_pi(a, x, p) && verify_right_strongly_pi(a, x, p);
}

/// Smallest j <= bound at which x is a one-sided Drazin inverse of a.
template <Scalar T>
std::optional<unsigned> minimal_drazin_index(Side side, const Matrix<T>& a, const Matrix<T>& x, unsigned bound)
{
    for (unsigned j = 0; j <= bound; ++j)
        if (verify_drazin(side, a, x, j)) return j;
    return std::nullopt;
}

// ------------------------------------------------------------ constructions

/// Left Drazin inverse x^{p+1} a^p built from a left strongly pi-regular witness.
template <Scalar T>
Witness<T> azumaya_left(const Matrix<T>& a, const Matrix<T>& x, unsigned p)
{
    if (!verify_left_strongly_pi(a, x, p))
        throw PreconditionViolated("azumaya_left: x is not a left strongly pi-regular witness at index " +
                                   std::to_string(p));
    return {mat_pow(x, p + 1) * mat_pow(a, p), Side::left, WitnessKind::drazin, p};
}

/// Right Drazin inverse a^q y^{q+1}.
template <Scalar T>
Witness<T> azumaya_right(const Matrix<T>& a, const Matrix<T>& y, unsigned q)
{
    if (!verify_right_strongly_pi(a, y, q))
        throw PreconditionViolated("azumaya_right: y is not a right strongly pi-regular witness at index " +
                                   std::to_string(q));
    return {mat_pow(a, q) * mat_pow(y, q + 1), Side::right, WitnessKind::drazin, q};
}

template <Scalar T>
Witness<T> azumaya(Side side, const Matrix<T>& a, const Matrix<T>& x, unsigned p)
{
    return side == Side::right ? azumaya_right(a, x, p) : azumaya_left(a, x, p);
}

/// b = x a x, which additionally satisfies b a b = b.
template <Scalar T>
Matrix<T> normalize_left_gdrazin(const Matrix<T>& a, const Matrix<T>& x)
{
    if (!verify_left_gdrazin(a, x))
        throw PreconditionViolated("normalize_left_gdrazin: x is not a left generalized Drazin inverse");
    return x * a * x;
}

template <Scalar T>
Matrix<T> normalize_right_gdrazin(const Matrix<T>& a, const Matrix<T>& y)
{
    if (!verify_right_gdrazin(a, y))
        throw PreconditionViolated("normalize_right_gdrazin: y is not a right generalized Drazin inverse");
    return y * a * y;
}

/// a b a = b a^2,  b a b = b,  b^2 a = b,  a b a - a nilpotent.
template <Scalar T>
bool verify_left_normalized(const Matrix<T>& a, const Matrix<T>& b)
{
    const Matrix<T> ba = b * a;
    const Matrix<T> aba = a * ba;
    return aba == ba * a && ba * b == b && b * ba == b && is_nilpotent(aba - a);
}

/// a c a = a^2 c,  c a c = c,  a c^2 = c,  a c a - a nilpotent.
template <Scalar T>
bool verify_right_normalized(const Matrix<T>& a, const Matrix<T>& c)
{
    const Matrix<T> ac = a * c;
    const Matrix<T> aca = ac * a;
    return aca == a * ac && c * ac == c && ac * c == c && is_nilpotent(aca - a);
}

/// Given a z = z b, a left generalized Drazin inverse x of a and a right one
/// y of b, reports whether x z = z y.
template <Scalar T>
bool intertwine_check(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& z, const Matrix<T>& x,
                      const Matrix<T>& y)
{
    if (!(a * z == z * b)) throw PreconditionViolated("intertwine_check: a z != z b");
    if (!verify_left_gdrazin(a, x)) throw PreconditionViolated("intertwine_check: x is not a left gD inverse of a");
    if (!verify_right_gdrazin(b, y)) throw PreconditionViolated("intertwine_check: y is not a right gD inverse of b");
    return x * z == z * y;
}

/// True iff m commutes with every matrix commuting with b. Checked on a
/// basis of the commutant, which is finite dimensional.
template <Scalar T>
bool in_double_commutant(const Matrix<T>& m, const Matrix<T>& b)
{
    const auto I = b.identity_like();
    // commutant of b: { z : b z - z b = 0 }
    for (const auto& z : sandwich_kernel<T>({{b, I}, {-I, b}}))
        if (!(m * z == z * m)) return false;
    return true;
}

/// y x as a one-sided (generalized) Drazin inverse of a b, where x is the
/// Drazin inverse of a and a lies in the double commutant of b.
template <Scalar T>
Witness<T> reverse_order(Side side, const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& x,
                         const Matrix<T>& y)
{
    if (!verify_drazin(Side::two_sided, a, x, drazin_index(a)))
        throw PreconditionViolated("reverse_order: x is not the Drazin inverse of a");
    if (!verify_gdrazin(side, b, y))
        throw PreconditionViolated("reverse_order: y is not a one-sided generalized Drazin inverse of b");
    if (!in_double_commutant(a, b)) throw PreconditionViolated("reverse_order: a is not in comm^2(b)");
    const Matrix<T> ab = a * b;
    const Matrix<T> yx = y * x;
    return {yx, side, WitnessKind::drazin, minimal_drazin_index(side, ab, yx, static_cast<unsigned>(ab.dim()))};
}

template <Scalar T>
Witness<T> reverse_order_left(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& x, const Matrix<T>& y)
{
    return reverse_order(Side::left, a, b, x, y);
}

template <Scalar T>
Witness<T> reverse_order_right(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& x, const Matrix<T>& y)
{
    return reverse_order(Side::right, a, b, x, y);
}

/// Given left Drazin x (index j) and right Drazin y (index k), both with
/// minimal index, reports whether x = y and j = k.
template <Scalar T>
bool prop_1_4_check(const Matrix<T>& a, const Matrix<T>& x, unsigned j, const Matrix<T>& y, unsigned k)
{
    if (!verify_left_drazin(a, x, j) || (j > 0 && verify_left_drazin(a, x, j - 1)))
        throw PreconditionViolated("prop_1_4_check: x is not a left Drazin inverse with minimal index j");
    if (!verify_right_drazin(a, y, k) || (k > 0 && verify_right_drazin(a, y, k - 1)))
        throw PreconditionViolated("prop_1_4_check: y is not a right Drazin inverse with minimal index k");
    return x == y && j == k;
}

} // namespace osdrazin

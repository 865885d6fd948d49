#pragma once

// Jacobson-lemma transfers for quads (a, b, c, d) with
//
//     a c d = d b d   and   d b a = a c a,
//
// between alpha = 1 - ac and beta = 1 - bd. Each forward construction
// has a reverse partner; both check their hypotheses before building.

#include <optional>
#include <string>
#include <utility>

#include "osdrazin/drazin.hpp"

namespace osdrazin {

template <Scalar T>
class JacobsonQuad {
public:
    /// Throws InvariantViolation unless a c d = d b d and d b a = a c a.
    JacobsonQuad(Matrix<T> a, Matrix<T> b, Matrix<T> c, Matrix<T> d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        if (!holds(a_, b_, c_, d_)) throw InvariantViolation("quad violates acd = dbd, dba = aca");
    }

    static bool holds(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d)
    {
        return a * c * d == d * b * d && d * b * a == a * c * a;
    }

    const Matrix<T>& a() const { return a_; }
    const Matrix<T>& b() const { return b_; }
    const Matrix<T>& c() const { return c_; }
    const Matrix<T>& d() const { return d_; }

    Matrix<T> ac() const { return a_ * c_; }
    Matrix<T> bd() const { return b_ * d_; }
    /// 1 - ac
    Matrix<T> alpha() const { return a_.identity_like() - ac(); }
    /// 1 - bd
    Matrix<T> beta() const { return a_.identity_like() - bd(); }
    std::size_t dim() const { return a_.dim(); }

private:
    Matrix<T> a_, b_, c_, d_;
};

/// The classical Jacobson setting (a, c, c, a): alpha = 1 - ac, beta = 1 - ca.
template <Scalar T>
JacobsonQuad<T> quad_from_classical(const Matrix<T>& a, const Matrix<T>& c)
{
    return {a, c, c, a};
}

/// Solves the two linear equations for c with a, d, b fixed.
template <Scalar T>
std::optional<JacobsonQuad<T>> quad_solve(const Matrix<T>& a, const Matrix<T>& d, const Matrix<T>& b)
{
    require_field(a.ring(), "quad_solve");
    const std::size_t n = a.dim();
    // Stack c -> a c d and c -> a c a into one 2n^2 x n^2 system.
    const auto top = sandwich_operator<T>({{a, d}});
    const auto bottom = sandwich_operator<T>({{a, a}});
    detail::Dense<T> sys(2 * n * n, n * n, a.ring().from_int(0));
    for (std::size_t i = 0; i < n * n; ++i)
        for (std::size_t j = 0; j < n * n; ++j) {
            sys.at(i, j) = top.at(i, j);
            sys.at(n * n + i, j) = bottom.at(i, j);
        }
    auto rhs = vec(Matrix<T>(d * b * d));
    const auto rhs2 = vec(Matrix<T>(d * b * a));
    rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
    const auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    return JacobsonQuad<T>(a, b, unvec(*sol, n), d);
}

// ------------------------------------------------------------ regularity

/// y = 1 + bd + bacxd. For left-regular x of alpha (x alpha^2 = alpha) it is
/// left regular for beta; for right-regular x it is right regular.
template <Scalar T>
Matrix<T> regular_transfer(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x)
{
    const auto alpha = q.alpha();
    if (!verify_regular(side, alpha, x))
        throw PreconditionViolated("regular_transfer: x is not a " + to_string(side) + " regular witness of 1 - ac");
    return q.a().identity_like() + q.bd() + q.b() * q.ac() * x * q.d();
}

template <Scalar T>
Matrix<T> left_regular_transfer(const JacobsonQuad<T>& q, const Matrix<T>& x)
{
    return regular_transfer(Side::left, q, x);
}

template <Scalar T>
Matrix<T> right_regular_transfer(const JacobsonQuad<T>& q, const Matrix<T>& x)
{
    return regular_transfer(Side::right, q, x);
}

/// x = 1 + ac + d y bac, from a regular witness y of beta back to alpha.
template <Scalar T>
Matrix<T> regular_transfer_back(Side side, const JacobsonQuad<T>& q, const Matrix<T>& y)
{
    if (!verify_regular(side, q.beta(), y))
        throw PreconditionViolated("regular_transfer_back: y is not a " + to_string(side) +
                                   " regular witness of 1 - bd");
    return q.a().identity_like() + q.ac() + q.d() * y * q.b() * q.ac();
}

// ------------------------------------------------------ binomial elements

/// b_n and c_n with (1 - bd)^n = 1 - b_n d and (1 - ac)^n = 1 - a c_n:
///   b_n = sum_{i=1..n} C(n,i) (-1)^{i-1} (bd)^{i-1} b
///   c_n = sum_{i=1..n} C(n,i) (-1)^{i-1} c (ac)^{i-1}
template <Scalar T>
std::pair<Matrix<T>, Matrix<T>> binomial_elements(const JacobsonQuad<T>& q, unsigned n)
{
    if (n < 1) throw PreconditionViolated("binomial_elements: n must be >= 1");
    const auto& R = q.a().ring();
    const auto bd = q.bd();
    const auto ac = q.ac();
    Matrix<T> bn = q.a().zero_like();
    Matrix<T> cn = q.a().zero_like();
    Matrix<T> bd_pow = q.a().identity_like();
    Matrix<T> ac_pow = q.a().identity_like();
    for (unsigned i = 1; i <= n; ++i) {
        const long coeff = binomial(static_cast<int>(n), static_cast<int>(i)) * ((i % 2 == 1) ? 1 : -1);
        bn += (bd_pow * q.b()) * R.from_int(coeff);
        cn += (q.c() * ac_pow) * R.from_int(coeff);
        bd_pow = bd_pow * bd;
        ac_pow = ac_pow * ac;
    }
    return {bn, cn};
}

/// Same sums with the printed sign (-1)^i. These satisfy
/// (1 - bd)^n = 1 + b_n d instead; kept for the sign-convention probe.
template <Scalar T>
std::pair<Matrix<T>, Matrix<T>> binomial_elements_printed_sign(const JacobsonQuad<T>& q, unsigned n)
{
    auto [bn, cn] = binomial_elements(q, n);
    return {-bn, -cn};
}

/// Quad (a, b_n, c_n, d): satisfies the quad equations again, with
/// alpha_n = (1 - ac)^n and beta_n = (1 - bd)^n.
template <Scalar T>
JacobsonQuad<T> binomial_quad(const JacobsonQuad<T>& q, unsigned n)
{
    auto [bn, cn] = binomial_elements(q, n);
    return {q.a(), std::move(bn), std::move(cn), q.d()};
}

/// pi-regular transfer: x alpha^{2n} = alpha^n (left) gives y beta^{2n} = beta^n,
/// by regular transfer on the binomial quad.
template <Scalar T>
Matrix<T> pi_regular_transfer(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x, unsigned n)
{
    if (!verify_pi_regular(side, q.alpha(), x, n))
        throw PreconditionViolated("pi_regular_transfer: x is not a " + to_string(side) +
                                   " pi-regular witness of 1 - ac at n = " + std::to_string(n));
    return regular_transfer(side, binomial_quad(q, n), x);
}

// ------------------------------------------------ strong pi-regularity

/// y = 1 + bd + bacxd for a strongly pi-regular witness x of alpha at index p.
template <Scalar T>
Matrix<T> strong_pi_transfer(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x, unsigned p)
{
    if (!verify_strongly_pi(side, q.alpha(), x, p))
        throw PreconditionViolated("strong_pi_transfer: x is not a " + to_string(side) +
                                   " strongly pi-regular witness of 1 - ac at index " + std::to_string(p));
    return q.a().identity_like() + q.bd() + q.b() * q.ac() * x * q.d();
}

template <Scalar T>
Matrix<T> strong_pi_transfer_back(Side side, const JacobsonQuad<T>& q, const Matrix<T>& y, unsigned p)
{
    if (!verify_strongly_pi(side, q.beta(), y, p))
        throw PreconditionViolated("strong_pi_transfer_back: y is not a " + to_string(side) +
                                   " strongly pi-regular witness of 1 - bd at index " + std::to_string(p));
    return q.a().identity_like() + q.ac() + q.d() * y * q.b() * q.ac();
}

// --------------------------------------------------------- Drazin / group

namespace detail {

/// sum_{j=0}^{k-1} (1 - u^2)^j; the empty sum (k = 0) is zero.
template <Scalar T>
Matrix<T> geometric_sum(const Matrix<T>& u, unsigned k)
{
    const auto base = u.identity_like() - u * u;
    Matrix<T> sum = u.zero_like();
    Matrix<T> term = u.identity_like();
    for (unsigned j = 0; j < k; ++j) {
        sum += term;
        term = term * base;
    }
    return sum;
}

/// p = 1 - x e (left) or 1 - e x (right).
template <Scalar T>
Matrix<T> spectral_defect(Side side, const Matrix<T>& e, const Matrix<T>& x)
{
    return e.identity_like() - (side == Side::right ? e * x : x * e);
}

} // namespace detail

/// y = (1 - bac p r d)(1 + bd) + bacxd with r = sum_{j<k} (1 - (ac)^2)^j.
template <Scalar T>
Witness<T> drazin_transfer(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x, unsigned k)
{
    const auto alpha = q.alpha();
    if (!verify_drazin(side, alpha, x, k))
        throw PreconditionViolated("drazin_transfer: x is not a " + to_string(side) +
                                   " Drazin inverse of 1 - ac at index " + std::to_string(k));
    const auto I = alpha.identity_like();
    const auto bac = q.b() * q.ac();
    const auto p = detail::spectral_defect(side, alpha, x);
    const auto r = detail::geometric_sum(q.ac(), k);
    Matrix<T> y = (I - bac * p * r * q.d()) * (I + q.bd()) + bac * x * q.d();
    return {std::move(y), side, WitnessKind::drazin, k};
}

/// x = (1 - d p' r' bac)(1 + ac) + d y bac with r' = sum_{j<k} (1 - (bd)^2)^j.
template <Scalar T>
Witness<T> drazin_transfer_back(Side side, const JacobsonQuad<T>& q, const Matrix<T>& y, unsigned k)
{
    const auto beta = q.beta();
    if (!verify_drazin(side, beta, y, k))
        throw PreconditionViolated("drazin_transfer_back: y is not a " + to_string(side) +
                                   " Drazin inverse of 1 - bd at index " + std::to_string(k));
    const auto I = beta.identity_like();
    const auto bac = q.b() * q.ac();
    const auto p = detail::spectral_defect(side, beta, y);
    const auto r = detail::geometric_sum(q.bd(), k);
    Matrix<T> x = (I - q.d() * p * r * bac) * (I + q.ac()) + q.d() * y * bac;
    return {std::move(x), side, WitnessKind::drazin, k};
}

/// The transferred witness obtained the long way: z^{k+1} beta^k (left) or
/// beta^k z^{k+1} (right) with z = 1 + bd + bacxd. Agrees with drazin_transfer.
template <Scalar T>
Matrix<T> drazin_transfer_via_azumaya(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x, unsigned k)
{
    const auto z = strong_pi_transfer(side, q, x, k);
    return azumaya(side, q.beta(), z, k).candidate;
}

/// Index-1 case: y = (1 - bac p d)(1 + bd) + bacxd.
template <Scalar T>
Witness<T> group_transfer(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x)
{
    const auto alpha = q.alpha();
    if (!verify_drazin(side, alpha, x, 1))
        throw PreconditionViolated("group_transfer: x is not a " + to_string(side) + " group inverse of 1 - ac");
    const auto I = alpha.identity_like();
    const auto bac = q.b() * q.ac();
    const auto p = detail::spectral_defect(side, alpha, x);
    Matrix<T> y = (I - bac * p * q.d()) * (I + q.bd()) + bac * x * q.d();
    return {std::move(y), side, WitnessKind::group, 1U};
}

/// x = (1 - d p' bac)(1 + ac) + d y bac.
template <Scalar T>
Witness<T> group_transfer_back(Side side, const JacobsonQuad<T>& q, const Matrix<T>& y)
{
    const auto beta = q.beta();
    if (!verify_drazin(side, beta, y, 1))
        throw PreconditionViolated("group_transfer_back: y is not a " + to_string(side) + " group inverse of 1 - bd");
    const auto I = beta.identity_like();
    const auto bac = q.b() * q.ac();
    const auto p = detail::spectral_defect(side, beta, y);
    Matrix<T> x = (I - q.d() * p * bac) * (I + q.ac()) + q.d() * y * bac;
    return {std::move(x), side, WitnessKind::group, 1U};
}

// ------------------------------------------------- generalized Drazin

/// Result of a generalized Drazin transfer, with the resolvent used.
template <Scalar T>
struct GDrazinTransfer {
    Witness<T> witness;
    Matrix<T> bracket;         ///< 1 - p alpha (1 + ac)
    Matrix<T> bracket_inverse;
};

/// y = (1 - bac p [1 - p alpha (1 + ac)]^{-1} d)(1 + bd) + bacxd.
template <Scalar T>
GDrazinTransfer<T> gdrazin_transfer(Side side, const JacobsonQuad<T>& q, const Matrix<T>& x)
{
    const auto alpha = q.alpha();
    if (!verify_gdrazin(side, alpha, x))
        throw PreconditionViolated("gdrazin_transfer: x is not a " + to_string(side) +
                                   " generalized Drazin inverse of 1 - ac");
    const auto I = alpha.identity_like();
    const auto ac = q.ac();
    const auto bac = q.b() * ac;
    const auto p = detail::spectral_defect(side, alpha, x);
    Matrix<T> bracket = I - p * alpha * (I + ac);
    auto inv = inverse(bracket);
    if (!inv) throw SingularResolvent("gdrazin_transfer: 1 - p alpha (1 + ac) is singular");
    Matrix<T> y = (I - bac * p * *inv * q.d()) * (I + q.bd()) + bac * x * q.d();
    return {Witness<T>(std::move(y), side, WitnessKind::generalized_drazin), std::move(bracket), std::move(*inv)};
}

/// x = (1 - d p' [1 - p' beta (1 + bd)]^{-1} bac)(1 + ac) + d y bac.
template <Scalar T>
GDrazinTransfer<T> gdrazin_transfer_back(Side side, const JacobsonQuad<T>& q, const Matrix<T>& y)
{
    const auto beta = q.beta();
    if (!verify_gdrazin(side, beta, y))
        throw PreconditionViolated("gdrazin_transfer_back: y is not a " + to_string(side) +
                                   " generalized Drazin inverse of 1 - bd");
    const auto I = beta.identity_like();
    const auto bac = q.b() * q.ac();
    const auto p = detail::spectral_defect(side, beta, y);
    Matrix<T> bracket = I - p * beta * (I + q.bd());
    auto inv = inverse(bracket);
    if (!inv) throw SingularResolvent("gdrazin_transfer_back: 1 - p' beta (1 + bd) is singular");
    Matrix<T> x = (I - q.d() * p * *inv * bac) * (I + q.ac()) + q.d() * y * bac;
    return {Witness<T>(std::move(x), side, WitnessKind::generalized_drazin), std::move(bracket), std::move(*inv)};
}

// ---------------------------------------------------------- partial Cline

/// y = c x^2 a. For x a left (right) Drazin inverse of ac at index k and c
/// (resp. a) invertible, y is a left (right) Drazin inverse of ca at k + 1.
template <Scalar T>
Witness<T> cline_partial(Side side, const Matrix<T>& a, const Matrix<T>& c, const Matrix<T>& x, unsigned k)
{
    if (!verify_drazin(side, Matrix<T>(a * c), x, k))
        throw PreconditionViolated("cline_partial: x is not a " + to_string(side) + " Drazin inverse of ac at index " +
                                   std::to_string(k));
    const Matrix<T>& must_invert = side == Side::right ? a : c;
    if (!inverse(must_invert))
        throw PreconditionViolated(std::string("cline_partial: ") + (side == Side::right ? "a" : "c") +
                                   " is not invertible");
    return {c * x * x * a, side, WitnessKind::drazin, k + 1};
}

template <Scalar T>
Witness<T> cline_partial_left(const Matrix<T>& a, const Matrix<T>& c, const Matrix<T>& x, unsigned k)
{
    return cline_partial(Side::left, a, c, x, k);
}

template <Scalar T>
Witness<T> cline_partial_right(const Matrix<T>& a, const Matrix<T>& c, const Matrix<T>& x, unsigned k)
{
    return cline_partial(Side::right, a, c, x, k);
}

} // namespace osdrazin

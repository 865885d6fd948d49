#pragma once

// Transfers between 1 - a and 1 - b for pairs with
//
//     a b^n = b^{n+1}   and   b a^n = a^{n+1}.
//
// The conditions are symmetric in (a, b), so every reverse construction
// is the forward one applied to the swapped pair.

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "osdrazin/drazin.hpp"

namespace osdrazin {

template <Scalar T>
class IntertwinePair {
public:
    IntertwinePair(Matrix<T> a, Matrix<T> b, unsigned n) : a_(std::move(a)), b_(std::move(b)), n_(n)
    {
        if (n_ < 1) throw InvariantViolation("intertwining exponent must be positive");
        if (!holds(a_, b_, n_)) throw InvariantViolation("pair violates a b^n = b^{n+1}, b a^n = a^{n+1}");
    }

    static bool holds(const Matrix<T>& a, const Matrix<T>& b, unsigned n)
    {
        const auto an = mat_pow(a, n);
        const auto bn = mat_pow(b, n);
        return a * bn == bn * b && b * an == an * a;
    }

    const Matrix<T>& a() const { return a_; }
    const Matrix<T>& b() const { return b_; }
    unsigned n() const { return n_; }

    IntertwinePair swapped() const { return {b_, a_, n_}; }

private:
    Matrix<T> a_, b_;
    unsigned n_;
};

namespace detail {

/// 1 + u + u^2 + ... + u^{2n-1}
template <Scalar T>
Matrix<T> partial_geometric(const Matrix<T>& u, unsigned n)
{
    Matrix<T> sum = u.identity_like();
    Matrix<T> term = u.identity_like();
    for (unsigned i = 1; i <= 2 * n - 1; ++i) {
        term = term * u;
        sum += term;
    }
    return sum;
}

/// sum_{i=0}^{k-1} (1 - a^{2n})^i
template <Scalar T>
Matrix<T> power_geometric_sum(const Matrix<T>& a, unsigned n, unsigned k)
{
    const auto base = a.identity_like() - mat_pow(a, 2 * n);
    Matrix<T> sum = a.zero_like();
    Matrix<T> term = a.identity_like();
    for (unsigned i = 0; i < k; ++i) {
        sum += term;
        term = term * base;
    }
    return sum;
}

} // namespace detail

/// y = 1 + sum_{i=1}^{2n-1} b^i + a^n x b^n; serves the regular and the
/// strongly pi-regular transfer alike.
template <Scalar T>
Matrix<T> regular_transfer_4(Side side, const IntertwinePair<T>& pr, const Matrix<T>& x)
{
    const auto one_minus_a = pr.a().identity_like() - pr.a();
    if (!verify_regular(side, one_minus_a, x))
        throw PreconditionViolated("regular_transfer_4: x is not a " + to_string(side) + " regular witness of 1 - a");
    return detail::partial_geometric(pr.b(), pr.n()) + mat_pow(pr.a(), pr.n()) * x * mat_pow(pr.b(), pr.n());
}

template <Scalar T>
Matrix<T> strong_pi_transfer_4(Side side, const IntertwinePair<T>& pr, const Matrix<T>& x, unsigned idx)
{
    const auto one_minus_a = pr.a().identity_like() - pr.a();
    if (!verify_strongly_pi(side, one_minus_a, x, idx))
        throw PreconditionViolated("strong_pi_transfer_4: x is not a " + to_string(side) +
                                   " strongly pi-regular witness of 1 - a at index " + std::to_string(idx));
    return detail::partial_geometric(pr.b(), pr.n()) + mat_pow(pr.a(), pr.n()) * x * mat_pow(pr.b(), pr.n());
}

/// Both orderings of the correction factor, a^n r p b^n and a^n p r b^n.
/// p commutes with a and r is a polynomial in a, so they must agree.
template <Scalar T>
struct DrazinTransfer4 {
    Witness<T> witness;
    Matrix<T> correction_rp;
    Matrix<T> correction_pr;
};

/// y = (1 - a^n r p b^n)(1 + sum_{i=1}^{2n-1} b^i) + a^n x b^n,
/// r = sum_{i<k} (1 - a^{2n})^i, p = 1 - x(1 - a) (left) or 1 - (1 - a)x (right).
template <Scalar T>
DrazinTransfer4<T> drazin_transfer_4(Side side, const IntertwinePair<T>& pr, const Matrix<T>& x, unsigned k)
{
    const auto I = pr.a().identity_like();
    const auto e = I - pr.a();
    if (!verify_drazin(side, e, x, k))
        throw PreconditionViolated("drazin_transfer_4: x is not a " + to_string(side) +
                                   " Drazin inverse of 1 - a at index " + std::to_string(k));
    const unsigned n = pr.n();
    const auto an = mat_pow(pr.a(), n);
    const auto bn = mat_pow(pr.b(), n);
    const auto p = side == Side::right ? I - e * x : I - x * e;
    const auto r = detail::power_geometric_sum(pr.a(), n, k);
    auto rp = an * r * p * bn;
    auto pr_ = an * p * r * bn;
    Matrix<T> y = (I - rp) * detail::partial_geometric(pr.b(), n) + an * x * bn;
    return {Witness<T>(std::move(y), side, WitnessKind::drazin, k), std::move(rp), std::move(pr_)};
}

/// Index-1 case: y = (1 - a^n p b^n)(1 + sum b^i) + a^n x b^n.
template <Scalar T>
Witness<T> group_transfer_4(Side side, const IntertwinePair<T>& pr, const Matrix<T>& x)
{
    const auto I = pr.a().identity_like();
    const auto e = I - pr.a();
    if (!verify_drazin(side, e, x, 1))
        throw PreconditionViolated("group_transfer_4: x is not a " + to_string(side) + " group inverse of 1 - a");
    const unsigned n = pr.n();
    const auto an = mat_pow(pr.a(), n);
    const auto bn = mat_pow(pr.b(), n);
    const auto p = side == Side::right ? I - e * x : I - x * e;
    Matrix<T> y = (I - an * p * bn) * detail::partial_geometric(pr.b(), n) + an * x * bn;
    return {std::move(y), side, WitnessKind::group, 1U};
}

template <Scalar T>
struct GDrazinTransfer4 {
    Witness<T> witness;
    Matrix<T> bracket; ///< 1 - p (1 - a^{2n})
    Matrix<T> bracket_inverse;
};

/// y = (1 - a^n [1 - p(1 - a^{2n})]^{-1} p b^n)(1 + sum b^i) + a^n x b^n.
template <Scalar T>
GDrazinTransfer4<T> gdrazin_transfer_4(Side side, const IntertwinePair<T>& pr, const Matrix<T>& x)
{
    const auto I = pr.a().identity_like();
    const auto e = I - pr.a();
    if (!verify_gdrazin(side, e, x))
        throw PreconditionViolated("gdrazin_transfer_4: x is not a " + to_string(side) +
                                   " generalized Drazin inverse of 1 - a");
    const unsigned n = pr.n();
    const auto an = mat_pow(pr.a(), n);
    const auto bn = mat_pow(pr.b(), n);
    const auto p = side == Side::right ? I - e * x : I - x * e;
    Matrix<T> bracket = I - p * (I - an * an);
    auto inv = inverse(bracket);
    if (!inv) throw SingularResolvent("gdrazin_transfer_4: 1 - p(1 - a^{2n}) is singular");
    Matrix<T> y = (I - an * *inv * p * bn) * detail::partial_geometric(pr.b(), n) + an * x * bn;
    return {Witness<T>(std::move(y), side, WitnessKind::generalized_drazin), std::move(bracket), std::move(*inv)};
}

/// Checks ac (db)^n = (db)^{n+1} and db (ac)^n = (ac)^{n+1}; on success the
/// pair (ac, db) carries every transfer above over to 1 - ac versus 1 - db.
template <Scalar T>
std::optional<IntertwinePair<T>> quad_to_pair(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                              const Matrix<T>& d, unsigned n)
{
    if (n < 1) return std::nullopt;
    auto ac = a * c;
    auto db = d * b;
    if (!IntertwinePair<T>::holds(ac, db, n)) return std::nullopt;
    return IntertwinePair<T>(std::move(ac), std::move(db), n);
}

/// Every matrix of M_k(Z/m) in row-major, value-major order.
std::vector<Matrix<ModInt>> enumerate_ring(std::size_t k, std::int64_t modulus);

/// Visits every pair of M_k(Z/m) satisfying the intertwining conditions at
/// exponent n, in lexicographic (a, b) order. Throws BudgetExceeded when the
/// number of candidate pairs exceeds `max_pairs`.
void pair_exhaustive(std::size_t k, std::int64_t modulus, unsigned n,
                     const std::function<void(const IntertwinePair<ModInt>&)>& visit,
                     std::size_t max_pairs = 100000);

std::vector<IntertwinePair<ModInt>> pair_exhaustive(std::size_t k, std::int64_t modulus, unsigned n,
                                                    std::size_t max_pairs = 100000);

} // namespace osdrazin

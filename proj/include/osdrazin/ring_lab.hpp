#pragma once

// Brute-force ground truth over M_k(Z/m). Every search scans the whole ring
// in a fixed order, so its answers do not depend on any of the constructive
// algorithms elsewhere in the library.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "osdrazin/matrix.hpp"
#include "osdrazin/report.hpp"

namespace osdrazin {

class FiniteRingSpec {
public:
    static constexpr std::uint64_t default_budget = 10000;

    /// Throws BudgetExceeded when m^(k^2) exceeds `budget`.
    FiniteRingSpec(std::size_t matrix_dim, std::int64_t modulus, std::uint64_t budget = default_budget);

    std::size_t matrix_dim() const { return k_; }
    std::int64_t modulus() const { return m_; }
    std::uint64_t element_count() const { return count_; }
    ModRing ring() const { return {m_}; }

    /// k * ceil(log2 m) + k: exceeds every nilpotency index in M_k(Z/m).
    unsigned default_index_bound() const;

    /// Element number `i` in row-major, value-major order.
    Matrix<ModInt> element(std::uint64_t i) const;
    std::vector<Matrix<ModInt>> elements() const;

private:
    std::size_t k_;
    std::int64_t m_;
    std::uint64_t count_;
};

using SearchHit = std::pair<Matrix<ModInt>, unsigned>;

/// First (x, p) with a x a = x a^2, x a^{p+1} = a^p, p minimal then x first
/// in element order. p_max defaults to the ring's index bound.
std::optional<SearchHit> search_left_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                                 std::optional<unsigned> p_max = std::nullopt);
std::optional<SearchHit> search_right_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                                  std::optional<unsigned> p_max = std::nullopt);
std::optional<SearchHit> search_left_drazin(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                            std::optional<unsigned> j_max = std::nullopt);
std::optional<SearchHit> search_right_drazin(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                             std::optional<unsigned> j_max = std::nullopt);

/// Every x (with its minimal p) that is a left strongly pi-regular witness of a.
std::vector<SearchHit> all_left_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                            std::optional<unsigned> p_max = std::nullopt);
std::vector<SearchHit> all_right_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                             std::optional<unsigned> p_max = std::nullopt);

/// Exhaustive check that one-sided strong pi-regularity and one-sided Drazin
/// invertibility coincide element by element, and that the Azumaya
/// realization of each strongly pi-regular witness is a Drazin witness at the
/// same index.
VerificationReport theorem_2_7_audit(const FiniteRingSpec& ring);

} // namespace osdrazin

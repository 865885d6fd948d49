#pragma once

// Exact spectra of matrices over Q(i). Eigenvalues are found only when they
// are Gaussian rationals; the rest stay in a residual factor and are left out
// of every spectral comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osdrazin/intertwine.hpp"
#include "osdrazin/matrix.hpp"
#include "osdrazin/report.hpp"

namespace osdrazin {

/// Coefficients lowest degree first; no trailing zeros (the zero polynomial is empty).
struct Polynomial {
    std::vector<Gaussian> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_constant() const { return coeffs.size() <= 1; }
    Gaussian operator()(const Gaussian& t) const;
    /// Quotient by (t - root); the remainder must be zero.
    Polynomial deflate(const Gaussian& root) const;
    std::string str() const;
    bool operator==(const Polynomial&) const = default;
};

Polynomial charpoly(const GaussianMatrix& a);

/// Exact square root in Q(i), if one exists.
std::optional<Gaussian> gaussian_sqrt(const Gaussian& z);

struct RootSearch {
    /// (root, multiplicity), ordered by lex_less on the root.
    std::vector<std::pair<Gaussian, unsigned>> roots;
    Polynomial residual;
};

/// Roots of p in Q(i): tries `hints` first, then the rational root theorem
/// when every coefficient is real (skipped for coefficients beyond a size
/// cap), then exact linear/quadratic solving of what is left.
RootSearch find_roots(const Polynomial& p, const std::vector<Gaussian>& hints = {});

struct JordanBlock {
    Gaussian eigenvalue;
    std::size_t size = 1;
};

struct JordanSpec {
    std::vector<JordanBlock> blocks;
    std::size_t dim() const;
    std::vector<Gaussian> eigenvalues() const;
};

/// The block diagonal Jordan matrix itself.
GaussianMatrix jordan_matrix(const JordanSpec& spec);
/// S J S^{-1} with a seeded random unimodular S. With `identity_similarity`
/// set, returns J.
GaussianMatrix jordan_realize(const JordanSpec& spec, std::uint64_t seed, bool identity_similarity = false);

/// Largest block size at lambda in the spec (0 if absent).
std::size_t planted_point_index(const JordanSpec& spec, const Gaussian& lambda);

GaussianMatrix to_gaussian(const RationalMatrix& a);
/// Nullopt when some entry has a nonzero imaginary part.
std::optional<RationalMatrix> to_rational(const GaussianMatrix& a);

/// drazin_index(lambda I - a).
unsigned point_index(const GaussianMatrix& a, const Gaussian& lambda);
unsigned point_index(const RationalMatrix& a, const Gaussian& lambda);

struct SpectrumReport {
    std::vector<Gaussian> eigenvalues;
    std::vector<unsigned> point_indices; ///< parallel to eigenvalues
    /// {lambda : point index >= 2}, which is both one-sided group spectra.
    std::vector<Gaussian> group_spectrum;
    Polynomial residual_factor;
    /// Every matrix is Drazin invertible, so the one-sided (generalized)
    /// Drazin spectra are always empty. Kept explicit for reports.
    bool drazin_spectra_empty = true;

    std::optional<unsigned> index_at(const Gaussian& lambda) const;
    nlohmann::json to_json() const;
};

SpectrumReport group_spectrum(const GaussianMatrix& a, const std::vector<Gaussian>& hints = {});
SpectrumReport group_spectrum(const RationalMatrix& a, const std::vector<Gaussian>& hints = {});

/// charpoly(ac) = charpoly(ca); equal point indices at every detected
/// nonzero eigenvalue (so equal group spectra off 0); and
/// drazin_index(1 - ac) = drazin_index(1 - ca).
VerificationReport product_identity_check(const GaussianMatrix& a, const GaussianMatrix& c,
                                          const std::vector<Gaussian>& hints = {});
VerificationReport product_identity_check(const RationalMatrix& a, const RationalMatrix& c,
                                          const std::vector<Gaussian>& hints = {});

/// Same nonzero spectra, point indices and group spectra for a and b, and
/// drazin_index(1 - a) = drazin_index(1 - b).
template <Scalar T>
VerificationReport intertwine_identity_check(const IntertwinePair<T>& pair, const std::vector<Gaussian>& hints = {});

/// Commuting A = S diag(l) S^{-1}, B = S diag(m) S^{-1} built from `seed`:
/// checks AB = BA and max |l_i m_i|^2 <= max |l_i|^2 * max |m_i|^2 on the
/// detected spectra.
VerificationReport commuting_radius_check(const std::vector<Gaussian>& first, const std::vector<Gaussian>& second,
                                          std::uint64_t seed);

} // namespace osdrazin

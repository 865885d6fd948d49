#include "osdrazin/ring_lab.hpp"

#include <algorithm>
#include <bit>

#include "osdrazin/drazin.hpp"
#include "osdrazin/parallel.hpp"

namespace osdrazin {

FiniteRingSpec::FiniteRingSpec(std::size_t matrix_dim, std::int64_t modulus, std::uint64_t budget)
    : k_(matrix_dim), m_(modulus), count_(1)
{
    if (k_ == 0) throw DimensionMismatch("finite ring needs k >= 1");
    if (m_ < 2) throw DimensionMismatch("finite ring needs modulus >= 2");
    for (std::size_t i = 0; i < k_ * k_; ++i) {
        if (count_ > budget / static_cast<std::uint64_t>(m_))
            throw BudgetExceeded("M_" + std::to_string(k_) + "(Z/" + std::to_string(m_) + ") has more than " +
                                 std::to_string(budget) + " elements");
        count_ *= static_cast<std::uint64_t>(m_);
    }
}

unsigned FiniteRingSpec::default_index_bound() const
{
    const auto bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(m_ - 1))); // ceil(log2 m)
    return static_cast<unsigned>(k_) * bits + static_cast<unsigned>(k_);
}

Matrix<ModInt> FiniteRingSpec::element(std::uint64_t i) const
{
    if (i >= count_) throw DimensionMismatch("element index out of range");
    auto m = Matrix<ModInt>::zero(k_, ring());
    for (std::size_t c = k_ * k_; c-- > 0;) {
        m(c / k_, c % k_) = ModInt(static_cast<std::int64_t>(i % static_cast<std::uint64_t>(m_)), m_);
        i /= static_cast<std::uint64_t>(m_);
    }
    return m;
}

std::vector<Matrix<ModInt>> FiniteRingSpec::elements() const
{
    std::vector<Matrix<ModInt>> out;
    out.reserve(count_);
    for (std::uint64_t i = 0; i < count_; ++i) out.push_back(element(i));
    return out;
}

namespace {

using Pred = bool (*)(const Matrix<ModInt>&, const Matrix<ModInt>&, unsigned);

void check_member(const FiniteRingSpec& ring, const Matrix<ModInt>& a)
{
    if (a.dim() != ring.matrix_dim() || !(a.ring() == ring.ring()))
        throw DimensionMismatch("element does not belong to M_" + std::to_string(ring.matrix_dim()) + "(Z/" +
                                std::to_string(ring.modulus()) + ")");
}

std::optional<SearchHit> first_hit(const FiniteRingSpec& ring, const Matrix<ModInt>& a, std::optional<unsigned> bound,
                                   Pred pred)
{
    check_member(ring, a);
    const unsigned top = bound.value_or(ring.default_index_bound());
    const auto elems = ring.elements();
    for (unsigned p = 0; p <= top; ++p)
        for (const auto& x : elems)
            if (pred(a, x, p)) return SearchHit{x, p};
    return std::nullopt;
}

std::vector<SearchHit> every_hit(const FiniteRingSpec& ring, const Matrix<ModInt>& a, std::optional<unsigned> bound,
                                 Pred pred)
{
    check_member(ring, a);
    const unsigned top = bound.value_or(ring.default_index_bound());
    std::vector<SearchHit> out;
    for (const auto& x : ring.elements())
        for (unsigned p = 0; p <= top; ++p)
            if (pred(a, x, p)) {
                out.emplace_back(x, p);
                break;
            }
    return out;
}

bool left_sp(const Matrix<ModInt>& a, const Matrix<ModInt>& x, unsigned p) { return verify_left_strongly_pi(a, x, p); }
bool right_sp(const Matrix<ModInt>& a, const Matrix<ModInt>& x, unsigned p) { return verify_right_strongly_pi(a, x, p); }
bool left_dz(const Matrix<ModInt>& a, const Matrix<ModInt>& x, unsigned p) { return verify_left_drazin(a, x, p); }
bool right_dz(const Matrix<ModInt>& a, const Matrix<ModInt>& x, unsigned p) { return verify_right_drazin(a, x, p); }

} // namespace

std::optional<SearchHit> search_left_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                                 std::optional<unsigned> p_max)
{
    return first_hit(ring, a, p_max, left_sp);
}

std::optional<SearchHit> search_right_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                                  std::optional<unsigned> p_max)
{
    return first_hit(ring, a, p_max, right_sp);
}

std::optional<SearchHit> search_left_drazin(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                            std::optional<unsigned> j_max)
{
    return first_hit(ring, a, j_max, left_dz);
}

std::optional<SearchHit> search_right_drazin(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                             std::optional<unsigned> j_max)
{
    return first_hit(ring, a, j_max, right_dz);
}

std::vector<SearchHit> all_left_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                            std::optional<unsigned> p_max)
{
    return every_hit(ring, a, p_max, left_sp);
}

std::vector<SearchHit> all_right_strongly_pi(const FiniteRingSpec& ring, const Matrix<ModInt>& a,
                                             std::optional<unsigned> p_max)
{
    return every_hit(ring, a, p_max, right_sp);
}

namespace {

struct ElementAudit {
    bool left_equiv = true, right_equiv = true;
    bool left_index = true, right_index = true;
    bool left_azumaya = true, right_azumaya = true;
    bool sides_coincide = true;
    bool canonical = true;
    bool left_found = false, right_found = false;
    unsigned index = 0;
};

} // namespace

VerificationReport theorem_2_7_audit(const FiniteRingSpec& ring)
{
    const auto elems = ring.elements();
    const bool prime = ring.ring().is_field();
    std::vector<ElementAudit> results(elems.size());

    parallel_for(elems.size(), worker_count(), [&](std::size_t i) {
        const auto& a = elems[i];
        ElementAudit& r = results[i];
        const auto sp_l = search_left_strongly_pi(ring, a);
        const auto sp_r = search_right_strongly_pi(ring, a);
        const auto dz_l = search_left_drazin(ring, a);
        const auto dz_r = search_right_drazin(ring, a);
        r.left_equiv = sp_l.has_value() == dz_l.has_value();
        r.right_equiv = sp_r.has_value() == dz_r.has_value();
        r.left_found = dz_l.has_value();
        r.right_found = dz_r.has_value();
        if (sp_l && dz_l) r.left_index = sp_l->second == dz_l->second;
        if (sp_r && dz_r) r.right_index = sp_r->second == dz_r->second;
        if (sp_l) {
            const auto w = azumaya_left(a, sp_l->first, sp_l->second);
            r.left_azumaya = verify_left_drazin(a, w.candidate, sp_l->second);
        }
        if (sp_r) {
            const auto w = azumaya_right(a, sp_r->first, sp_r->second);
            r.right_azumaya = verify_right_drazin(a, w.candidate, sp_r->second);
        }
        if (dz_l && dz_r) {
            r.sides_coincide = dz_l->first == dz_r->first && dz_l->second == dz_r->second;
            r.index = dz_l->second;
        } else {
            r.sides_coincide = dz_l.has_value() == dz_r.has_value();
        }
        if (prime && dz_l) {
            const auto [canon, k] = drazin_inverse(a);
            r.canonical = canon == dz_l->first && k == dz_l->second;
        }
    });

    VerificationReport rep("audit:M" + std::to_string(ring.matrix_dim()) + "(Z" + std::to_string(ring.modulus()) + ")");
    auto all = [&](bool ElementAudit::*field) {
        return std::all_of(results.begin(), results.end(), [&](const ElementAudit& r) { return r.*field; });
    };
    rep.check("left-strongly-pi-iff-left-drazin", all(&ElementAudit::left_equiv));
    rep.check("right-strongly-pi-iff-right-drazin", all(&ElementAudit::right_equiv));
    rep.check("left-minimal-indices-agree", all(&ElementAudit::left_index));
    rep.check("right-minimal-indices-agree", all(&ElementAudit::right_index));
    rep.check("left-azumaya-realization", all(&ElementAudit::left_azumaya));
    rep.check("right-azumaya-realization", all(&ElementAudit::right_azumaya));
    rep.check("left-right-drazin-coincide", all(&ElementAudit::sides_coincide));
    if (prime) rep.check("canonical-drazin-agreement", all(&ElementAudit::canonical));

    long long left = 0, right = 0, max_index = 0, counterexamples = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        left += r.left_found;
        right += r.right_found;
        max_index = std::max<long long>(max_index, r.index);
        const bool ok = r.left_equiv && r.right_equiv && r.left_index && r.right_index && r.left_azumaya &&
                        r.right_azumaya && r.sides_coincide && r.canonical;
        if (!ok) {
            ++counterexamples;
            if (counterexamples <= 5) rep.notes.push_back("counterexample: " + elems[i].str());
        }
    }
    rep.indices["elements"] = static_cast<long long>(elems.size());
    rep.indices["left-drazin-invertible"] = left;
    rep.indices["right-drazin-invertible"] = right;
    rep.indices["max-index"] = max_index;
    rep.indices["counterexamples"] = counterexamples;
    rep.indices["index-bound"] = ring.default_index_bound();
    return rep;
}

} // namespace osdrazin

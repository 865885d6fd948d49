#include "osdrazin/intertwine.hpp"

#include "osdrazin/errors.hpp"

namespace osdrazin {

std::vector<Matrix<ModInt>> enumerate_ring(std::size_t k, std::int64_t modulus)
{
    if (k == 0 || modulus < 2) throw DimensionMismatch("enumerate_ring needs k >= 1 and m >= 2");
    const std::size_t cells = k * k;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (count > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(modulus))
            throw BudgetExceeded("M_" + std::to_string(k) + "(Z/" + std::to_string(modulus) + ") is too large to enumerate");
        count *= static_cast<std::uint64_t>(modulus);
    }
    std::vector<Matrix<ModInt>> out;
    out.reserve(count);
    const ModRing ring{modulus};
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto m = Matrix<ModInt>::zero(k, ring);
        std::uint64_t rest = idx;
        for (std::size_t c = cells; c-- > 0;) {
            m(c / k, c % k) = ModInt(static_cast<std::int64_t>(rest % modulus), modulus);
            rest /= static_cast<std::uint64_t>(modulus);
        }
        out.push_back(std::move(m));
    }
    return out;
}

void pair_exhaustive(std::size_t k, std::int64_t modulus, unsigned n,
                     const std::function<void(const IntertwinePair<ModInt>&)>& visit, std::size_t max_pairs)
{
    if (n < 1) throw InvariantViolation("intertwining exponent must be positive");
    const auto elems = enumerate_ring(k, modulus);
    if (elems.size() > max_pairs / elems.size())
        throw BudgetExceeded("pair enumeration over " + std::to_string(elems.size()) + "^2 candidates exceeds budget " +
                             std::to_string(max_pairs));
    // powers are reused across the inner loop
    std::vector<Matrix<ModInt>> pw, pw1;
    pw.reserve(elems.size());
    pw1.reserve(elems.size());
    for (const auto& e : elems) {
        pw.push_back(mat_pow(e, n));
        pw1.push_back(pw.back() * e);
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            // a b^n = b^{n+1}, b a^n = a^{n+1}
            if (elems[i] * pw[j] == pw1[j] && elems[j] * pw[i] == pw1[i])
                visit(IntertwinePair<ModInt>(elems[i], elems[j], n));
        }
}

std::vector<IntertwinePair<ModInt>> pair_exhaustive(std::size_t k, std::int64_t modulus, unsigned n,
                                                    std::size_t max_pairs)
{
    std::vector<IntertwinePair<ModInt>> out;
    pair_exhaustive(k, modulus, n, [&](const IntertwinePair<ModInt>& p) { out.push_back(p); }, max_pairs);
    return out;
}

} // namespace osdrazin

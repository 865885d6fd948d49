#include "doctest.h"

#include "oracles.hpp"
#include "osdrazin/intertwine.hpp"
#include "osdrazin/ring_lab.hpp"

using namespace osdrazin;

namespace {

ModMatrix to_mod(const oracle::Small& s, std::int64_t m)
{
    return ModMatrix{{ModInt(s.e[0], m), ModInt(s.e[1], m)}, {ModInt(s.e[2], m), ModInt(s.e[3], m)}};
}

oracle::Small small_pow(const oracle::Small& a, unsigned p, std::int64_t m)
{
    oracle::Small r{{1, 0, 0, 1}};
    for (unsigned i = 0; i < p; ++i) r = oracle::small_mul(r, a, m);
    return r;
}

// Raw-integer reference for the left strongly pi-regular search order.
std::optional<std::pair<oracle::Small, unsigned>> brute_left_sp(const oracle::Small& a, std::int64_t m, unsigned top)
{
    const auto ring = oracle::small_ring(m);
    for (unsigned p = 0; p <= top; ++p) {
        const auto ap = small_pow(a, p, m);
        const auto ap1 = oracle::small_mul(ap, a, m);
        for (const auto& x : ring) {
            const auto xa = oracle::small_mul(x, a, m);
            if (oracle::small_eq(oracle::small_mul(a, xa, m), oracle::small_mul(xa, a, m)) &&
                oracle::small_eq(oracle::small_mul(x, ap1, m), ap))
                return std::pair{x, p};
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("finite ring spec")
{
    const FiniteRingSpec r22(2, 2);
    CHECK(r22.element_count() == 16);
    CHECK(r22.default_index_bound() == 4);
    CHECK(FiniteRingSpec(2, 3).element_count() == 81);
    CHECK(FiniteRingSpec(2, 3).default_index_bound() == 6);
    CHECK(FiniteRingSpec(1, 6).element_count() == 6);
    CHECK_THROWS_AS(FiniteRingSpec(3, 3), BudgetExceeded);   // 3^9 > 10^4
    CHECK_THROWS_AS(FiniteRingSpec(2, 11), BudgetExceeded);  // 11^4 > 10^4
    CHECK_NOTHROW(FiniteRingSpec(3, 3, 20000));
    CHECK(r22.element(0).is_zero());
    CHECK(r22.element(15) == ModMatrix{{ModInt(1, 2), ModInt(1, 2)}, {ModInt(1, 2), ModInt(1, 2)}});
    CHECK(r22.element(1) == ModMatrix{{ModInt(0, 2), ModInt(0, 2)}, {ModInt(0, 2), ModInt(1, 2)}});
    CHECK(r22.elements() == enumerate_ring(2, 2));
}

TEST_CASE("search examples")
{
    const FiniteRingSpec r(2, 2);
    const auto I = ModMatrix::identity(2, {2});
    const auto hit = search_left_strongly_pi(r, I);
    REQUIRE(hit);
    CHECK(hit->first == I);
    CHECK(hit->second == 0);
    const ModMatrix n{{ModInt(0, 2), ModInt(1, 2)}, {ModInt(0, 2), ModInt(0, 2)}};
    for (auto search : {search_left_strongly_pi, search_right_strongly_pi, search_left_drazin, search_right_drazin}) {
        const auto h = search(r, n, std::nullopt);
        REQUIRE(h);
        CHECK(h->first.is_zero());
        CHECK(h->second == 2);
    }
    CHECK(!search_left_strongly_pi(r, n, 1U));
    CHECK_THROWS_AS(search_left_drazin(r, ModMatrix::identity(2, {3}), std::nullopt), DimensionMismatch);
}

TEST_CASE("searches match a raw-integer brute force")
{
    for (std::int64_t m : {2, 3}) {
        const FiniteRingSpec r(2, m);
        for (const auto& a : oracle::small_ring(m)) {
            const auto lib = search_left_strongly_pi(r, to_mod(a, m));
            const auto ref = brute_left_sp(a, m, r.default_index_bound());
            // finite rings are strongly pi-regular: every element has a witness
            REQUIRE(ref);
            REQUIRE(lib);
            CHECK(lib->first == to_mod(ref->first, m));
            CHECK(lib->second == ref->second);
        }
    }
}

TEST_CASE("right searches are transposes of left searches")
{
    const FiniteRingSpec r(2, 3);
    for (const auto& a : r.elements()) {
        const auto right = all_right_strongly_pi(r, a);
        const auto left_t = all_left_strongly_pi(r, a.transpose());
        REQUIRE(right.size() == left_t.size());
        // both lists are in element order of the witness; compare as sets
        for (const auto& [y, q] : right) {
            bool found = false;
            for (const auto& [x, p] : left_t) found = found || (x == y.transpose() && p == q);
            CHECK(found);
        }
        const auto dr = search_right_drazin(r, a);
        const auto dl = search_left_drazin(r, a.transpose());
        REQUIRE(dr);
        REQUIRE(dl);
        CHECK(dr->first == dl->first.transpose());
        CHECK(dr->second == dl->second);
    }
}

TEST_CASE("left strongly pi witnesses are not unique but Drazin inverses are")
{
    const FiniteRingSpec r(2, 2);
    std::size_t max_sp = 0;
    for (const auto& a : r.elements()) {
        max_sp = std::max(max_sp, all_left_strongly_pi(r, a).size());
        const auto d = search_left_drazin(r, a);
        REQUIRE(d);
        std::size_t count = 0;
        for (const auto& x : r.elements()) count += verify_left_drazin(a, x, d->second) ? 1 : 0;
        CHECK(count == 1);
    }
    CHECK(max_sp > 1);
}

TEST_CASE("audit over the three small rings")
{
    for (auto [k, m, count] : {std::tuple{2, 2, 16}, std::tuple{2, 3, 81}, std::tuple{1, 6, 6}}) {
        const auto rep = theorem_2_7_audit(FiniteRingSpec(k, m));
        CAPTURE(rep.to_json().dump());
        CHECK(rep.passed());
        CHECK(rep.indices.at("elements") == count);
        CHECK(rep.indices.at("counterexamples") == 0);
        CHECK(rep.indices.at("left-drazin-invertible") == count);
        CHECK(rep.indices.at("right-drazin-invertible") == count);
    }
    CHECK(theorem_2_7_audit(FiniteRingSpec(2, 2)).indices.at("max-index") == 2);
    // composite moduli take the non-field path: no canonical comparison
    const auto z6 = theorem_2_7_audit(FiniteRingSpec(1, 6));
    bool has_canonical = false;
    for (const auto& [name, ok] : z6.checks) has_canonical = has_canonical || name == "canonical-drazin-agreement";
    CHECK(!has_canonical);
}

TEST_CASE("exhaustive intertwining pairs")
{
    const auto pairs = pair_exhaustive(2, 2, 1);
    // every (a, a) qualifies
    for (const auto& a : enumerate_ring(2, 2)) {
        bool found = false;
        for (const auto& p : pairs) found = found || (p.a() == a && p.b() == a);
        CHECK(found);
    }
    const ModMatrix a{{ModInt(1, 2), ModInt(0, 2)}, {ModInt(0, 2), ModInt(0, 2)}};
    const ModMatrix b{{ModInt(1, 2), ModInt(1, 2)}, {ModInt(0, 2), ModInt(0, 2)}};
    bool found = false;
    for (const auto& p : pairs) found = found || (p.a() == a && p.b() == b);
    CHECK(found);

    // reference count from raw integers
    std::size_t ref = 0;
    const auto ring = oracle::small_ring(2);
    for (const auto& x : ring)
        for (const auto& y : ring)
            if (oracle::small_eq(oracle::small_mul(x, y, 2), oracle::small_mul(y, y, 2)) &&
                oracle::small_eq(oracle::small_mul(y, x, 2), oracle::small_mul(x, x, 2)))
                ++ref;
    CHECK(pairs.size() == ref);
    CHECK(pairs.size() == 28); // regression constant, from the raw-integer count above
    CHECK_THROWS_AS(pair_exhaustive(2, 5, 1, 1000), BudgetExceeded);
}

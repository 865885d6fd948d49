#include "doctest.h"

#include "oracles.hpp"
#include "osdrazin/generators.hpp"
#include "osdrazin/spectra.hpp"

using namespace osdrazin;

namespace {

Gaussian gi(long re, long im = 0)
{
    return Gaussian(Rational(re), Rational(im));
}

// prod (t - lambda)^size, lowest degree first
Polynomial expand(const JordanSpec& spec)
{
    Polynomial p{{gi(1)}};
    for (const auto& b : spec.blocks)
        for (std::size_t i = 0; i < b.size; ++i) {
            std::vector<Gaussian> next(p.coeffs.size() + 1, gi(0));
            for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
                next[d + 1] = next[d + 1] + p.coeffs[d];
                next[d] = next[d] - b.eigenvalue * p.coeffs[d];
            }
            p.coeffs = std::move(next);
        }
    return p;
}

RationalMatrix lift(const Matrix<ModInt>& m)
{
    auto r = RationalMatrix::zero(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j).value()));
    return r;
}

} // namespace

TEST_CASE("gaussian square roots")
{
    CHECK(*gaussian_sqrt(gi(4)) == gi(2));
    CHECK(*gaussian_sqrt(gi(-9)) == gi(0, 3));
    CHECK(*gaussian_sqrt(Gaussian(Rational(1, 4))) == Gaussian(Rational(1, 2)));
    const auto r = gaussian_sqrt(gi(0, 2)); // (1 + i)^2
    REQUIRE(r);
    CHECK(*r * *r == gi(0, 2));
    CHECK_FALSE(gaussian_sqrt(gi(2)));
    CHECK_FALSE(gaussian_sqrt(gi(1, 1)));
}

TEST_CASE("root finding")
{
    // (t - 1)^2 (t + 2)(t^2 + 1)
    const JordanSpec s{{{gi(1), 2}, {gi(-2), 1}, {gi(0, 1), 1}, {gi(0, -1), 1}}};
    const auto rs = find_roots(expand(s));
    CHECK(rs.residual.degree() == 0);
    REQUIRE(rs.roots.size() == 4);
    unsigned total = 0;
    for (const auto& [v, m] : rs.roots) {
        total += m;
        if (v == gi(1)) CHECK(m == 2);
    }
    CHECK(total == 5);

    // t^2 - 2 stays in the residual
    const auto irr = find_roots(Polynomial{{gi(-2), gi(0), gi(1)}});
    CHECK(irr.roots.empty());
    CHECK(irr.residual.degree() == 2);

    // complex roots off the real line are found through the quadratic step
    const JordanSpec c{{{gi(1, 2), 1}, {gi(3, -1), 1}}};
    CHECK(find_roots(expand(c)).roots.size() == 2);
}

TEST_CASE("jordan realization")
{
    const auto z = jordan_realize(JordanSpec{{{gi(0), 1}}}, 0);
    CHECK(z.dim() == 1);
    CHECK(z.is_zero());

    const auto j = jordan_realize(JordanSpec{{{gi(1), 2}}}, 0, true);
    CHECK(j == GaussianMatrix({{gi(1), gi(1)}, {gi(0), gi(1)}}));

    gen::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        JordanSpec spec;
        const long blocks = gen::uniform(rng, 1, 3);
        for (long b = 0; b < blocks; ++b)
            spec.blocks.push_back({gi(gen::uniform(rng, -3, 3), gen::uniform(rng, -1, 1)),
                                   static_cast<std::size_t>(gen::uniform(rng, 1, 2))});
        const auto a = jordan_realize(spec, static_cast<std::uint64_t>(t));
        CHECK(charpoly(a) == expand(spec));
        for (const auto& lambda : spec.eigenvalues())
            CHECK(point_index(a, lambda) == planted_point_index(spec, lambda));
    }
}

TEST_CASE("charpoly agrees with the Faddeev-LeVerrier oracle")
{
    gen::Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        const auto a = gen::random_matrix<Rational>(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), {});
        const auto ref = oracle::charpoly(oracle::from(a));
        const auto p = charpoly(to_gaussian(a));
        REQUIRE(p.coeffs.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(p.coeffs[i] == Gaussian(Rational(ref[i])));
    }
}

TEST_CASE("point index")
{
    const auto I = RationalMatrix::identity(3);
    CHECK(point_index(I, gi(1)) == 1);
    CHECK(point_index(I, gi(0)) == 0);
    const auto j = gen::jordan_block<Gaussian>(2, gi(5));
    CHECK(point_index(j, gi(5)) == 2);
    CHECK(point_index(j, gi(4)) == 0);
}

TEST_CASE("group spectrum")
{
    const auto d = jordan_realize(JordanSpec{{{gi(1), 1}, {gi(2), 1}, {gi(2), 1}}}, 3);
    const auto sd = group_spectrum(d);
    CHECK(sd.group_spectrum.empty());
    CHECK(sd.drazin_spectra_empty);
    CHECK(sd.eigenvalues.size() == 2);

    const auto j = group_spectrum(gen::jordan_block<Gaussian>(2, gi(3)));
    REQUIRE(j.group_spectrum.size() == 1);
    CHECK(j.group_spectrum[0] == gi(3));

    const auto mixed = jordan_realize(JordanSpec{{{gi(2), 2}, {gi(0), 1}, {gi(5), 1}}}, 4);
    const auto sm = group_spectrum(mixed);
    REQUIRE(sm.group_spectrum.size() == 1);
    CHECK(sm.group_spectrum[0] == gi(2));
    CHECK(*sm.index_at(gi(2)) == 2);
    CHECK(*sm.index_at(gi(0)) == 1);
    CHECK(*sm.index_at(gi(5)) == 1);
    CHECK(sm.to_json()["group_spectrum"].size() == 1);

    // an irrational pair of eigenvalues is left in the residual
    const auto r = group_spectrum(RationalMatrix({{0, 2}, {1, 0}}));
    CHECK(r.eigenvalues.empty());
    CHECK(r.residual_factor.degree() == 2);
}

TEST_CASE("product identity")
{
    gen::Rng rng(13);
    const auto I = RationalMatrix::identity(3);
    const auto a = gen::random_matrix<Rational>(rng, 3, {});
    CHECK(product_identity_check(a, I).passed());

    const auto e12 = RationalMatrix({{0, 1}, {0, 0}});
    const auto e21 = RationalMatrix({{0, 0}, {1, 0}});
    const auto rep = product_identity_check(e12, e21);
    CHECK(rep.passed());
    CHECK(rep.indices.at("index(1-ac)") == 1);
    CHECK(rep.indices.at("index(1-ca)") == 1);

    for (int t = 0; t < 100; ++t) {
        const auto x = gen::random_matrix<Rational>(rng, 4, {}, -2, 2);
        const auto y = gen::random_matrix<Rational>(rng, 4, {}, -2, 2);
        CHECK(product_identity_check(x, y).passed());
    }
    // planted nonzero group spectrum shared by uv and vu
    for (int t = 0; t < 30; ++t) {
        const auto core = jordan_realize(JordanSpec{{{gi(2), 2}, {gi(-1), 1}}}, static_cast<std::uint64_t>(t));
        const auto [u, v] = gen::factor_pair_with_core(rng, 4, core);
        const auto r2 = product_identity_check(u, v, {gi(2), gi(-1)});
        CHECK(r2.passed());
        CHECK(group_spectrum(GaussianMatrix(u * v)).group_spectrum.size() == 1);
    }
}

TEST_CASE("intertwining identity")
{
    gen::Rng rng(14);
    const auto a = gen::random_matrix<Rational>(rng, 3, {});
    CHECK(intertwine_identity_check(IntertwinePair<Rational>(a, a, 1)).passed());

    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
        const auto r = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(n)));
        const auto pr = gen::idempotent_pair<Rational>(rng, r, n, {});
        const auto rep = intertwine_identity_check(pr);
        CHECK(rep.passed());
        CHECK(group_spectrum(pr.a()).group_spectrum.empty());
        CHECK(intertwine_identity_check(gen::planted_pair<Rational>(rng, 4, {}, 2)).passed());
    }

    std::size_t lifted = 0;
    pair_exhaustive(2, 2, 1, [&](const IntertwinePair<ModInt>& pr) {
        const auto la = lift(pr.a());
        const auto lb = lift(pr.b());
        if (!IntertwinePair<Rational>::holds(la, lb, 1)) return;
        ++lifted;
        CHECK(intertwine_identity_check(IntertwinePair<Rational>(la, lb, 1)).passed());
    });
    CHECK(lifted > 0);
}

TEST_CASE("commuting spectral radius")
{
    CHECK(commuting_radius_check({gi(1), gi(2), gi(-3)}, {gi(2), gi(0, 1), gi(1)}, 5).passed());
    CHECK(commuting_radius_check({gi(1, 1), gi(2)}, {gi(3), gi(-1, 2)}, 6).passed());
    CHECK_THROWS_AS(commuting_radius_check({gi(1)}, {}, 0), DimensionMismatch);
}

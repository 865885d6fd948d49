#include "doctest.h"

#include "oracles.hpp"
#include "osdrazin/generators.hpp"
#include "osdrazin/report.hpp"

using namespace osdrazin;

namespace {

const RationalMatrix I2 = RationalMatrix::identity(2);
const RationalMatrix Z2 = RationalMatrix::zero(2);
const RationalMatrix N{{0, 1}, {0, 0}};
const RationalMatrix D20{{2, 0}, {0, 0}};
const RationalMatrix D20inv{{Rational(1, 2), 0}, {0, 0}};

} // namespace

TEST_CASE("drazin_index examples")
{
    CHECK(drazin_index(I2) == 0);
    CHECK(drazin_index(N) == 2);
    CHECK(drazin_index(D20) == 1);
    CHECK(drazin_index(Z2) == 1);
    CHECK_THROWS_AS(drazin_index(ModMatrix::identity(2, {6})), UnsupportedRing);
}

TEST_CASE("drazin_inverse examples")
{
    CHECK(drazin_inverse(I2) == std::pair{I2, 0U});
    CHECK(drazin_inverse(N) == std::pair{Z2, 2U});
    CHECK(drazin_inverse(D20) == std::pair{D20inv, 1U});
}

TEST_CASE("group_inverse examples")
{
    CHECK(group_inverse(I2) == I2);
    CHECK_THROWS_AS(group_inverse(N), IndexTooLarge);
    const RationalMatrix e{{1, 1}, {0, 0}};
    CHECK(group_inverse(e) == e);
    CHECK(verify_left_drazin(e, e, 1));
    CHECK(verify_right_drazin(e, e, 1));
}

TEST_CASE("one-sided Drazin predicate examples")
{
    CHECK(verify_left_drazin(I2, I2, 0));
    CHECK(verify_left_drazin(N, Z2, 2));
    CHECK(!verify_left_drazin(N, Z2, 1));
    CHECK(verify_right_drazin(I2, I2, 0));
    CHECK(verify_right_drazin(N, Z2, 2));
    CHECK(verify_right_drazin(D20, D20inv, 1));
    CHECK_THROWS_AS(verify_left_drazin(I2, RationalMatrix::identity(3), 0), DimensionMismatch);
}

TEST_CASE("generalized Drazin predicate examples")
{
    CHECK(verify_left_gdrazin(I2, I2));
    CHECK(verify_left_gdrazin(N, Z2));
    CHECK(!verify_left_gdrazin(I2, Z2));
    CHECK(verify_right_gdrazin(I2, I2));
    CHECK(verify_right_gdrazin(N, Z2));
    const RationalMatrix e{{1, 0}, {0, 0}};
    CHECK(verify_right_gdrazin(e, e));
}

TEST_CASE("regular predicate examples")
{
    CHECK(verify_left_regular(I2, I2));
    CHECK(verify_right_regular(I2, I2));
    CHECK(verify_left_regular(Z2, RationalMatrix{{5, 1}, {2, 3}}));
    // N has no left or right regular witness: exhaust M_2(Z_2) on raw integers
    const oracle::Small n{{0, 1, 0, 0}};
    const auto n2 = oracle::small_mul(n, n, 2);
    int witnesses = 0;
    for (const auto& x : oracle::small_ring(2)) {
        if (oracle::small_eq(oracle::small_mul(x, n2, 2), n)) ++witnesses;
        if (oracle::small_eq(oracle::small_mul(n2, x, 2), n)) ++witnesses;
    }
    CHECK(witnesses == 0);
    // and the library agrees on the same ring
    for (const auto& x : enumerate_ring(2, 2)) {
        const ModMatrix nm{{ModInt(0, 2), ModInt(1, 2)}, {ModInt(0, 2), ModInt(0, 2)}};
        CHECK(!verify_left_regular(nm, x));
        CHECK(!verify_right_regular(nm, x));
    }
}

TEST_CASE("strongly pi-regular predicate examples")
{
    CHECK(verify_left_strongly_pi(I2, I2, 0));
    CHECK(verify_left_strongly_pi(N, Z2, 2));
    CHECK(verify_left_strongly_pi(D20, D20inv, 1));
    CHECK(verify_right_strongly_pi(I2, I2, 0));
    CHECK(verify_right_strongly_pi(N, Z2, 2));
    CHECK(verify_right_strongly_pi(D20, D20inv, 1));
}

TEST_CASE("azumaya realizations")
{
    const RationalMatrix a{{2, 1}, {1, 1}};
    const auto ai = *inverse(a);
    CHECK(azumaya_left(a, ai, 0).candidate == ai);
    CHECK(azumaya_right(a, ai, 0).candidate == ai);
    CHECK(azumaya_left(N, Z2, 2).candidate == Z2);
    CHECK(azumaya_right(N, Z2, 2).candidate == Z2);
    CHECK(azumaya_left(N, Z2, 2).index == 2U);
    CHECK_THROWS_AS(azumaya_left(N, Z2, 1), PreconditionViolated);
    CHECK_THROWS_AS(azumaya_right(N, I2, 1), PreconditionViolated);

    // non-canonical strongly pi witnesses still land on a Drazin inverse
    gen::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        const auto m = gen::planted_index<Rational>(rng, n, {}, static_cast<unsigned>(gen::uniform(rng, 0, 3)));
        const auto [d, k] = drazin_inverse(m);
        const auto x = gen::strongly_pi_witness(rng, m, d);
        REQUIRE(verify_left_strongly_pi(m, x, k));
        REQUIRE(verify_right_strongly_pi(m, x, k));
        const auto wl = azumaya_left(m, x, k);
        const auto wr = azumaya_right(m, x, k);
        CHECK(verify_left_drazin(m, wl.candidate, k));
        CHECK(verify_right_drazin(m, wr.candidate, k));
        CHECK(wl.side == Side::left);
        CHECK(wr.side == Side::right);
    }
}

TEST_CASE("drazin_inverse agrees with the core-nilpotent oracle and is minimal")
{
    gen::Rng rng(1234);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const unsigned planted = static_cast<unsigned>(gen::uniform(rng, 0, static_cast<long>(n)));
        const auto a = t % 2 ? gen::random_matrix<Rational>(rng, n, {}, -2, 2)
                             : gen::planted_index<Rational>(rng, n, {}, planted);
        const auto [x, k] = drazin_inverse(a);
        const auto [ox, ok] = oracle::drazin(oracle::from(a));
        CHECK(k == ok);
        CHECK(x == oracle::to_matrix(ox));
        if (t % 2 == 0) CHECK(k == std::min<unsigned>(planted, static_cast<unsigned>(n)));
        CHECK(a * x == x * a);
        CHECK(x * x * a == x);
        CHECK(mat_pow(a, k + 1) * x == mat_pow(a, k));
        CHECK(verify_left_drazin(a, x, k));
        CHECK(verify_right_drazin(a, x, k));
        if (k >= 1) {
            CHECK(!verify_left_drazin(a, x, k - 1));
            CHECK(!verify_right_drazin(a, x, k - 1));
        }
        if (k == 0) CHECK(x == *inverse(a));
    }
}

TEST_CASE("drazin_inverse over Gaussian and prime-modulus scalars")
{
    gen::Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        const auto k = static_cast<unsigned>(gen::uniform(rng, 0, 3));
        const auto g = gen::planted_index<Gaussian>(rng, n, {}, k);
        const auto [gx, gk] = drazin_inverse(g);
        CHECK(gk == std::min<unsigned>(k, static_cast<unsigned>(n)));
        CHECK(verify_left_drazin(g, gx, gk));
        CHECK(verify_right_drazin(g, gx, gk));
        const auto m = gen::random_matrix<ModInt>(rng, n, ModRing{7});
        const auto [mx, mk] = drazin_inverse(m);
        CHECK(verify_left_drazin(m, mx, mk));
        CHECK(verify_right_drazin(m, mx, mk));
    }
}

TEST_CASE("normalization of generalized Drazin inverses")
{
    CHECK(normalize_left_gdrazin(I2, I2) == I2);
    CHECK(normalize_left_gdrazin(N, Z2) == Z2);
    CHECK(normalize_right_gdrazin(I2, I2) == I2);
    CHECK(normalize_right_gdrazin(N, Z2) == Z2);
    CHECK_THROWS_AS(normalize_left_gdrazin(I2, Z2), PreconditionViolated);

    gen::Rng rng(5);
    bool literal_reading_fails_somewhere = false;
    for (int t = 0; t < 100; ++t) {
        const auto a = gen::planted_index<Rational>(rng, 3, {}, static_cast<unsigned>(gen::uniform(rng, 0, 3)));
        const auto x = drazin_inverse(a).first;
        const auto b = normalize_left_gdrazin(a, x);
        CHECK(verify_left_normalized(a, b));
        const auto c = normalize_right_gdrazin(a, x);
        CHECK(verify_right_normalized(a, c));
        // The right system read literally as a c a = c^2 a does not hold in general.
        if (!(a * c * a == c * c * a)) literal_reading_fails_somewhere = true;
    }
    CHECK(literal_reading_fails_somewhere);
}

TEST_CASE("intertwining of generalized Drazin inverses")
{
    CHECK(intertwine_check(I2, I2, I2, I2, I2));
    gen::Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        const auto a = gen::planted_index<Rational>(rng, n, {}, static_cast<unsigned>(gen::uniform(rng, 0, 3)));
        const auto x = drazin_inverse(a).first;
        CHECK(intertwine_check(a, a, a, x, x));
        const auto s = gen::random_invertible<Rational>(rng, n, {});
        const auto b = *inverse(s) * a * s; // a s = s b
        const auto y = drazin_inverse(b).first;
        CHECK(intertwine_check(a, b, s, x, y));
    }
    CHECK_THROWS_AS(intertwine_check(I2, Matrix(I2 * Rational(2)), I2, I2, I2), PreconditionViolated);
}

TEST_CASE("reverse order law")
{
    CHECK(reverse_order_left(I2, I2, I2, I2).candidate == I2);
    const auto two = I2 * Rational(2);
    const auto w = reverse_order_left(two, N, I2 * Rational(1, 2), Z2);
    CHECK(w.candidate == Z2);
    CHECK(verify_left_drazin(two * N, w.candidate, *w.index));

    gen::Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto b = gen::planted_index<Rational>(rng, 3, {}, static_cast<unsigned>(gen::uniform(rng, 0, 3)));
        const auto a = b * b + b * Rational(3) + b.identity_like();
        const auto x = drazin_inverse(a).first;
        const auto y = drazin_inverse(b).first;
        for (Side side : {Side::left, Side::right}) {
            const auto r = reverse_order(side, a, b, x, y);
            REQUIRE(r.index);
            CHECK(verify_drazin(side, Matrix(a * b), r.candidate, *r.index));
            CHECK(verify_gdrazin(side, Matrix(a * b), r.candidate));
        }
    }
    // a outside comm^2(b)
    const RationalMatrix e{{1, 0}, {0, 0}};
    CHECK_THROWS_AS(reverse_order_left(N, e, Z2, e), PreconditionViolated);
}

TEST_CASE("left and right Drazin inverses coincide")
{
    CHECK(prop_1_4_check(I2, I2, 0, I2, 0));
    CHECK(prop_1_4_check(N, Z2, 2, Z2, 2));
    gen::Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const auto a = gen::planted_index<Rational>(rng, n, {}, static_cast<unsigned>(gen::uniform(rng, 0, 4)));
        const auto [x, k] = drazin_inverse(a);
        CHECK(prop_1_4_check(a, x, k, x, k));
        // a left Drazin inverse found independently by solving the witness
        // system agrees with the canonical one
        const auto ak = mat_pow(a, k);
        const auto xl = solve_left(Matrix(ak * a), ak);
        REQUIRE(xl);
        if (verify_left_drazin(a, *xl, k)) CHECK(*xl == x);
    }
    CHECK_THROWS_AS(prop_1_4_check(N, Z2, 3, Z2, 2), PreconditionViolated);
}

TEST_CASE("witness kinds and report round trip")
{
    CHECK_THROWS_AS(Witness<Rational>(I2, Side::left, WitnessKind::group, 2U), InvariantViolation);
    CHECK(Witness<Rational>(I2, Side::left, WitnessKind::group).index == 1U);
    for (auto s : {Side::left, Side::right, Side::two_sided}) CHECK(parse_side(to_string(s)) == s);
    for (auto k : {WitnessKind::regular, WitnessKind::pi_regular, WitnessKind::strongly_pi_regular,
                   WitnessKind::drazin, WitnessKind::group, WitnessKind::generalized_drazin})
        CHECK(parse_witness_kind(to_string(k)) == k);

    VerificationReport rep("trial-1");
    CHECK_THROWS_AS(rep.to_json(), InvariantViolation);
    rep.check("a", true);
    rep.check("b", false);
    rep.set_witness(Witness<Rational>(D20inv, Side::right, WitnessKind::drazin, 1U));
    rep.indices["k"] = 1;
    rep.notes.push_back("note");
    rep.attach("a", D20);
    CHECK(!rep.passed());
    CHECK(rep.failures() == 1);
    const auto back = VerificationReport::from_json(nlohmann::json::parse(rep.to_json().dump()));
    CHECK(back.to_json() == rep.to_json());
}

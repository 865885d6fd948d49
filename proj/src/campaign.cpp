#include "osdrazin/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "osdrazin/generators.hpp"
#include "osdrazin/parallel.hpp"
#include "osdrazin/ring_lab.hpp"
#include "osdrazin/spectra.hpp"

namespace osdrazin {

namespace {

struct TrialSpec {
    std::uint64_t seed;
    std::size_t number;
    std::size_t dim;
    std::string family;
    ScalarSpec scalar;
    const std::vector<IntertwinePair<ModInt>>* exhaustive = nullptr;
};

template <Scalar T>
struct Trial {
    gen::Rng rng;
    std::size_t dim;
    std::string family;
    typename T::ring_type ring;
    std::size_t number;
    const std::vector<IntertwinePair<ModInt>>* exhaustive;

    Trial(const TrialSpec& s, typename T::ring_type r)
        : rng(gen::mix_seed(s.seed, s.number)), dim(s.dim), family(s.family), ring(r), number(s.number),
          exhaustive(s.exhaustive)
    {
    }

    unsigned random_index() { return static_cast<unsigned>(gen::uniform(rng, 0, static_cast<long>(dim))); }
    // half the trials stay at index <= 1 so group and regular cases get exercised
    unsigned biased_index()
    {
        return number % 2 == 0 ? static_cast<unsigned>(gen::uniform(rng, 0, 1)) : random_index();
    }
    /// "mixed" cycles through `choices` by trial number.
    std::string pick(const std::vector<std::string>& choices) const
    {
        return family == "mixed" ? choices[number % choices.size()] : family;
    }
};

template <class F>
void with_scalar(const TrialSpec& s, F&& f)
{
    switch (s.scalar.kind) {
    case ScalarSpec::Kind::rational: f(RationalField{}); break;
    case ScalarSpec::Kind::gaussian: f(GaussianField{}); break;
    case ScalarSpec::Kind::modular: f(ModRing{s.scalar.modulus}); break;
    }
}

template <Scalar T>
constexpr bool is_modular = std::is_same_v<T, ModInt>;

// ---------------------------------------------------------------- instances

template <Scalar T>
JacobsonQuad<T> make_quad(Trial<T>& t, unsigned k, VerificationReport& rep)
{
    const auto fam = t.pick({"classical", "case-II", "solved"});
    auto q = [&] {
        if (fam == "classical") return gen::classical_quad<T>(t.rng, t.dim, t.ring, k);
        if (fam == "case-II") return gen::case_two_quad<T>(t.rng, t.dim, t.ring, k);
        return gen::solved_quad<T>(t.rng, t.dim, t.ring, k);
    }();
    rep.attach("a", q.a());
    rep.attach("b", q.b());
    rep.attach("c", q.c());
    rep.attach("d", q.d());
    rep.notes.push_back("family " + fam);
    return q;
}

template <Scalar T>
IntertwinePair<T> make_pair(Trial<T>& t, unsigned k, VerificationReport& rep)
{
    const auto fam = t.pick({"idempotent", "planted"});
    auto pr = [&]() -> IntertwinePair<T> {
        if (fam == "exhaustive-ring") {
            if constexpr (is_modular<T>) return t.exhaustive->at(t.number);
            else throw UsageError("exhaustive-ring needs a mod:p scalar");
        }
        const auto e = static_cast<unsigned>(gen::uniform(t.rng, 1, 2));
        if (fam == "idempotent") {
            const auto r = static_cast<std::size_t>(gen::uniform(t.rng, 0, static_cast<long>(t.dim)));
            return gen::idempotent_pair<T>(t.rng, r, t.dim, t.ring, e);
        }
        return gen::planted_pair<T>(t.rng, std::max<std::size_t>(t.dim, 2), t.ring, k, e);
    }();
    rep.attach("a", pr.a());
    rep.attach("b", pr.b());
    rep.indices["n"] = pr.n();
    return pr;
}

template <Scalar T>
Matrix<T> make_matrix(Trial<T>& t, VerificationReport& rep, std::optional<unsigned>& planted)
{
    const auto fam = t.pick({"planted-index", "random"});
    Matrix<T> a = [&] {
        if (fam == "random") return gen::random_matrix<T>(t.rng, t.dim, t.ring);
        planted = t.random_index();
        return gen::planted_index<T>(t.rng, t.dim, t.ring, *planted);
    }();
    rep.attach("a", a);
    return a;
}

template <Scalar T>
Matrix<T> make_matrix(Trial<T>& t, VerificationReport& rep)
{
    std::optional<unsigned> unused;
    return make_matrix(t, rep, unused);
}

void merge(VerificationReport& into, const VerificationReport& from)
{
    for (const auto& c : from.checks) into.checks.push_back(c);
    for (const auto& [k, v] : from.indices) into.indices[k] = v;
    for (const auto& n : from.notes) into.notes.push_back(n);
}

// ----------------------------------------------------------- core trials

template <Scalar T>
void minimality_trial(Trial<T>& t, VerificationReport& rep)
{
    std::optional<unsigned> planted;
    const auto a = make_matrix(t, rep, planted);
    const auto [x, k] = drazin_inverse(a);
    rep.indices["index"] = k;
    rep.check("left-at-index", verify_left_drazin(a, x, k));
    rep.check("right-at-index", verify_right_drazin(a, x, k));
    if (k > 0) {
        rep.check("left-fails-below-index", !verify_left_drazin(a, x, k - 1));
        rep.check("right-fails-below-index", !verify_right_drazin(a, x, k - 1));
    }
    if (planted) rep.check("index-equals-planted", k == *planted);
    rep.set_witness(Witness<T>(x, Side::two_sided, WitnessKind::drazin, k));
}

template <Scalar T>
void uniqueness_trial(Trial<T>& t, VerificationReport& rep)
{
    const auto a = make_matrix(t, rep);
    const auto [d, k] = drazin_inverse(a);
    const auto s = gen::strongly_pi_witness(t.rng, a, d);
    rep.check("witness-strongly-pi-both-sides", verify_left_strongly_pi(a, s, k) && verify_right_strongly_pi(a, s, k));
    const auto x = azumaya_left(a, s, k).candidate;
    const auto y = azumaya_right(a, s, k).candidate;
    const auto bound = static_cast<unsigned>(a.dim());
    const auto j = minimal_drazin_index(Side::left, a, x, bound);
    const auto i = minimal_drazin_index(Side::right, a, y, bound);
    rep.check("minimal-indices-found", j && i);
    if (j && i) rep.check("left-equals-right", prop_1_4_check(a, x, *j, y, *i));
    rep.indices["index"] = k;
}

template <Scalar T>
void normalize_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto a = make_matrix(t, rep);
    const auto [x, k] = drazin_inverse(a);
    if (side == Side::left) {
        const auto b = normalize_left_gdrazin(a, x);
        rep.check("normalized-system", verify_left_normalized(a, b));
    } else {
        const auto c = normalize_right_gdrazin(a, x);
        rep.check("normalized-system", verify_right_normalized(a, c));
    }
    rep.indices["index"] = k;
}

template <Scalar T>
void intertwine_trial(Trial<T>& t, VerificationReport& rep)
{
    const auto a = make_matrix(t, rep);
    const auto s = gen::random_invertible<T>(t.rng, t.dim, t.ring);
    const auto b = Matrix<T>(*inverse(s) * a * s);
    const auto z = Matrix<T>(s * gen::random_polynomial_in(t.rng, b, 2));
    rep.attach("b", b);
    rep.attach("z", z);
    rep.check("az-equals-zb", a * z == z * b);
    rep.check("xz-equals-zy", intertwine_check(a, b, z, drazin_inverse(a).first, drazin_inverse(b).first));
}

template <Scalar T>
void reverse_order_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto b = make_matrix(t, rep);
    const auto a = gen::random_polynomial_in(t.rng, b, 2);
    rep.attach("b", b);
    rep.attach("a", a);
    const auto w = reverse_order(side, a, b, drazin_inverse(a).first, drazin_inverse(b).first);
    const auto ab = Matrix<T>(a * b);
    rep.check("index-found", w.index.has_value());
    if (w.index) rep.check("drazin-witness", verify_drazin(side, ab, w.candidate, *w.index));
    rep.check("gdrazin-witness", verify_gdrazin(side, ab, w.candidate));
    rep.indices["index(ab)"] = w.index.value_or(-1);
    rep.set_witness(w);
}

template <Scalar T>
void azumaya_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto a = make_matrix(t, rep);
    const auto [d, k] = drazin_inverse(a);
    const auto s = gen::strongly_pi_witness(t.rng, a, d);
    rep.attach("witness", s);
    rep.check("strongly-pi-input", verify_strongly_pi(side, a, s, k));
    const auto w = azumaya(side, a, s, k);
    rep.check("drazin-at-index", verify_drazin(side, a, w.candidate, k));
    rep.check("index-minimal", minimal_drazin_index(side, a, w.candidate, static_cast<unsigned>(a.dim())) == k);
    rep.check("matches-canonical", w.candidate == d);
    rep.indices["index"] = k;
    rep.set_witness(w);
}

template <Scalar T>
void audit_trial(Trial<T>& t, VerificationReport& rep)
{
    if constexpr (!is_modular<T>) {
        throw UsageError("the ring audit needs a mod:m scalar");
    } else {
        merge(rep, theorem_2_7_audit(FiniteRingSpec(t.dim, t.ring.modulus)));
    }
}

// ------------------------------------------------------------ quad trials

template <Scalar T>
void regular_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto q = make_quad(t, t.biased_index(), rep);
    const auto xa = gen::pi_regular_witness(side, q.alpha(), 1);
    const auto xb = gen::pi_regular_witness(side, q.beta(), 1);
    rep.check("regular-iff", xa.has_value() == xb.has_value());
    rep.indices["regular"] = xa ? 1 : 0;
    if (!xa) return;
    const auto y = regular_transfer(side, q, *xa);
    rep.check("transfer", verify_regular(side, q.beta(), y));
    rep.check("transfer-back", verify_regular(side, q.alpha(), regular_transfer_back(side, q, y)));
}

template <Scalar T>
void pi_regular_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto q = make_quad(t, t.random_index(), rep);
    const unsigned k = drazin_index(q.alpha());
    const unsigned n = std::max(k, 1U) + static_cast<unsigned>(gen::uniform(t.rng, 0, 1));
    const auto x = gen::pi_regular_witness(side, q.alpha(), n);
    rep.indices["n"] = n;
    if (!rep.check("alpha-pi-regular", x.has_value())) return;
    const auto y = pi_regular_transfer(side, q, *x, n);
    rep.check("transfer", verify_pi_regular(side, q.beta(), y, n));
}

template <Scalar T>
void strong_pi_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto q = make_quad(t, t.random_index(), rep);
    const auto [d, k] = drazin_inverse(q.alpha());
    const auto x = gen::strongly_pi_witness(t.rng, q.alpha(), d);
    rep.check("input-witness", verify_strongly_pi(side, q.alpha(), x, k));
    const auto y = strong_pi_transfer(side, q, x, k);
    rep.check("transfer", verify_strongly_pi(side, q.beta(), y, k));
    rep.check("transfer-back", verify_strongly_pi(side, q.alpha(), strong_pi_transfer_back(side, q, y, k), k));
    rep.indices["index"] = k;
}

template <Scalar T>
void drazin_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto q = make_quad(t, t.random_index(), rep);
    const auto [x, k] = drazin_inverse(q.alpha());
    const auto w = drazin_transfer(side, q, x, k);
    rep.check("witness", verify_drazin(side, q.beta(), w.candidate, k));
    rep.check("index-preserved", drazin_index(q.beta()) == k);
    rep.check("matches-canonical", w.candidate == drazin_inverse(q.beta()).first);
    rep.check("azumaya-route-agrees", drazin_transfer_via_azumaya(side, q, x, k) == w.candidate);
    const auto back = drazin_transfer_back(side, q, w.candidate, k);
    rep.check("round-trip", verify_drazin(side, q.alpha(), back.candidate, k) && back.candidate == x);
    rep.indices["index"] = k;
    rep.set_witness(w);
}

template <Scalar T>
void group_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto q = make_quad(t, t.biased_index(), rep);
    const auto [x, k] = drazin_inverse(q.alpha());
    const unsigned kb = drazin_index(q.beta());
    rep.check("group-iff", (k <= 1) == (kb <= 1));
    rep.indices["index"] = k;
    if (k > 1) return;
    const auto w = group_transfer(side, q, x);
    rep.check("witness", verify_drazin(side, q.beta(), w.candidate, 1));
    rep.check("transfer-back", verify_drazin(side, q.alpha(), group_transfer_back(side, q, w.candidate).candidate, 1));
    rep.set_witness(w);
}

template <Scalar T>
void gdrazin_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto q = make_quad(t, t.random_index(), rep);
    const auto x = drazin_inverse(q.alpha()).first;
    const auto I = q.alpha().identity_like();
    try {
        const auto g = gdrazin_transfer(side, q, x);
        rep.check("bracket-invertible", g.bracket * g.bracket_inverse == I);
        const auto& y = g.witness.candidate;
        rep.check("witness", verify_gdrazin(side, q.beta(), y));
        rep.check("defect-nilpotent", is_nilpotent(Matrix<T>(q.beta() - q.beta() * y * q.beta())));
        const auto back = gdrazin_transfer_back(side, q, y);
        rep.check("bracket-back-invertible", back.bracket * back.bracket_inverse == I);
        rep.check("transfer-back", verify_gdrazin(side, q.alpha(), back.witness.candidate));
        rep.set_witness(g.witness);
    } catch (const SingularResolvent& e) {
        rep.check("bracket-invertible", false);
        rep.notes.push_back(e.what());
    }
}

template <Scalar T>
void binomial_trial(Trial<T>& t, VerificationReport& rep)
{
    const auto q = make_quad(t, t.random_index(), rep);
    const auto I = q.alpha().identity_like();
    for (unsigned n = 1; n <= 4; ++n) {
        const auto [bn, cn] = binomial_elements(q, n);
        const auto tag = std::to_string(n);
        rep.check("beta-power-" + tag, mat_pow(q.beta(), n) == I - bn * q.d());
        rep.check("alpha-power-" + tag, mat_pow(q.alpha(), n) == I - q.a() * cn);
        rep.check("quad-acd-" + tag, q.a() * cn * q.d() == q.d() * bn * q.d());
        // a c_n a = d b_n a, which reads the same from either side
        rep.check("quad-aca-" + tag, q.a() * cn * q.a() == q.d() * bn * q.a());
    }
}

template <Scalar T>
void classical_corollary_trial(Trial<T>& t, VerificationReport& rep)
{
    if (t.family != "classical" && t.family != "mixed") throw UsageError("this check only uses classical quads");
    t.family = "classical";
    const auto q = make_quad(t, t.random_index(), rep);
    const auto [x, k] = drazin_inverse(q.alpha());
    rep.check("index(1-ac)-equals-index(1-ca)", drazin_index(q.beta()) == k);
    for (Side side : {Side::left, Side::right})
        rep.check(to_string(side) + "-witness",
                  verify_drazin(side, q.beta(), drazin_transfer(side, q, x, k).candidate, k));
    rep.indices["index"] = k;
}

template <Scalar T>
void cline_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const unsigned planted = t.random_index();
    const auto singular = gen::planted_index<T>(t.rng, t.dim, t.ring, planted);
    const auto unit = gen::random_invertible<T>(t.rng, t.dim, t.ring);
    // the factor on the invertible side must be c (left) or a (right)
    const auto& a = side == Side::left ? singular : unit;
    const auto& c = side == Side::left ? unit : singular;
    rep.attach("a", a);
    rep.attach("c", c);
    const auto [x, k] = drazin_inverse(Matrix<T>(a * c));
    const auto w = cline_partial(side, a, c, x, k);
    rep.check("witness-at-k+1", verify_drazin(side, Matrix<T>(c * a), w.candidate, k + 1));
    rep.indices["index(ac)"] = k;
    rep.set_witness(w);
}

// ------------------------------------------------------- spectral trials

template <Scalar T>
Matrix<T> from_gaussian(const GaussianMatrix& g)
{
    if constexpr (std::is_same_v<T, Gaussian>) {
        return g;
    } else {
        auto r = to_rational(g);
        if (!r) throw InvariantViolation("complex entries in a rational instance");
        return *r;
    }
}

template <Scalar T>
void product_spectrum_trial(Trial<T>& t, VerificationReport& rep)
{
    if constexpr (is_modular<T>) {
        throw UsageError("spectral checks need rational or gaussian scalars");
    } else {
        const auto fam = t.pick({"random", "planted-jordan"});
        if (fam == "random") {
            const auto a = gen::random_matrix<T>(t.rng, t.dim, t.ring, -2, 2);
            const auto c = gen::random_matrix<T>(t.rng, t.dim, t.ring, -2, 2);
            rep.attach("a", a);
            rep.attach("c", c);
            merge(rep, product_identity_check(a, c));
            return;
        }
        // planted core with small integer (or Gaussian) eigenvalues
        JordanSpec spec;
        const auto r = static_cast<std::size_t>(gen::uniform(t.rng, 1, static_cast<long>(t.dim)));
        for (std::size_t used = 0; used < r;) {
            const auto size = static_cast<std::size_t>(gen::uniform(t.rng, 1, static_cast<long>(r - used)));
            Gaussian lambda(Rational(gen::uniform(t.rng, -2, 3)));
            if constexpr (std::is_same_v<T, Gaussian>)
                if (gen::uniform(t.rng, 0, 2) == 0) lambda = Gaussian(lambda.re(), Rational(1));
            spec.blocks.push_back({lambda, size});
            used += size;
        }
        const auto core = from_gaussian<T>(jordan_realize(spec, t.rng()));
        const auto [u, v] = gen::factor_pair_with_core(t.rng, t.dim, core);
        rep.attach("a", u);
        rep.attach("c", v);
        const auto hints = spec.eigenvalues();
        merge(rep, product_identity_check(u, v, hints));
        std::vector<Gaussian> expected;
        for (const auto& lambda : hints)
            if (!lambda.is_zero() && planted_point_index(spec, lambda) >= 2) expected.push_back(lambda);
        std::vector<Gaussian> seen;
        for (const auto& lambda : group_spectrum(Matrix<T>(u * v), hints).group_spectrum)
            if (!lambda.is_zero()) seen.push_back(lambda);
        rep.check("planted-group-spectrum", seen == expected);
        rep.indices["planted-group-spectrum-size"] = static_cast<long long>(expected.size());
    }
}

template <Scalar T>
void pair_spectrum_trial(Trial<T>& t, VerificationReport& rep)
{
    if constexpr (is_modular<T>) {
        throw UsageError("spectral checks need rational or gaussian scalars");
    } else {
        merge(rep, intertwine_identity_check(make_pair(t, t.random_index(), rep)));
    }
}

// ------------------------------------------------------------ pair trials

template <Scalar T>
void regular4_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto pr = make_pair(t, t.biased_index(), rep);
    const auto I = pr.a().identity_like();
    const Matrix<T> ea = I - pr.a(), eb = I - pr.b();
    const auto xa = gen::pi_regular_witness(side, ea, 1);
    const auto xb = gen::pi_regular_witness(side, eb, 1);
    rep.check("regular-iff", xa.has_value() == xb.has_value());
    rep.indices["regular"] = xa ? 1 : 0;
    if (!xa) return;
    const auto y = regular_transfer_4(side, pr, *xa);
    rep.check("transfer", verify_regular(side, eb, y));
    rep.check("transfer-back", verify_regular(side, ea, regular_transfer_4(side, pr.swapped(), y)));
}

template <Scalar T>
void strong_pi4_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto pr = make_pair(t, t.random_index(), rep);
    const auto I = pr.a().identity_like();
    const Matrix<T> ea = I - pr.a(), eb = I - pr.b();
    const auto [d, k] = drazin_inverse(ea);
    const auto x = gen::strongly_pi_witness(t.rng, ea, d);
    rep.check("input-witness", verify_strongly_pi(side, ea, x, k));
    const auto y = strong_pi_transfer_4(side, pr, x, k);
    rep.check("transfer", verify_strongly_pi(side, eb, y, k));
    rep.check("transfer-back", verify_strongly_pi(side, ea, strong_pi_transfer_4(side, pr.swapped(), y, k), k));
    rep.indices["index"] = k;
}

template <Scalar T>
void drazin4_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto pr = make_pair(t, t.random_index(), rep);
    const auto I = pr.a().identity_like();
    const Matrix<T> ea = I - pr.a(), eb = I - pr.b();
    const auto [x, k] = drazin_inverse(ea);
    const auto dt = drazin_transfer_4(side, pr, x, k);
    const auto& y = dt.witness.candidate;
    rep.check("correction-orderings-agree", dt.correction_rp == dt.correction_pr);
    rep.check("witness", verify_drazin(side, eb, y, k));
    rep.check("index-preserved", drazin_index(eb) == k);
    rep.check("matches-canonical", y == drazin_inverse(eb).first);
    const auto back = drazin_transfer_4(side, pr.swapped(), y, k).witness.candidate;
    rep.check("round-trip", verify_drazin(side, ea, back, k) && back == x);
    rep.indices["index"] = k;
    rep.set_witness(dt.witness);
}

template <Scalar T>
void group4_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto pr = make_pair(t, t.biased_index(), rep);
    const auto I = pr.a().identity_like();
    const Matrix<T> ea = I - pr.a(), eb = I - pr.b();
    const auto [x, k] = drazin_inverse(ea);
    rep.check("group-iff", (k <= 1) == (drazin_index(eb) <= 1));
    rep.indices["index"] = k;
    if (k > 1) return;
    const auto w = group_transfer_4(side, pr, x);
    rep.check("witness", verify_drazin(side, eb, w.candidate, 1));
    rep.check("transfer-back", verify_drazin(side, ea, group_transfer_4(side, pr.swapped(), w.candidate).candidate, 1));
    rep.set_witness(w);
}

template <Scalar T>
void gdrazin4_trial(Trial<T>& t, VerificationReport& rep, Side side)
{
    const auto pr = make_pair(t, t.random_index(), rep);
    const auto I = pr.a().identity_like();
    const Matrix<T> ea = I - pr.a(), eb = I - pr.b();
    const auto x = drazin_inverse(ea).first;
    try {
        const auto g = gdrazin_transfer_4(side, pr, x);
        rep.check("bracket-invertible", g.bracket * g.bracket_inverse == I);
        const auto& y = g.witness.candidate;
        rep.check("witness", verify_gdrazin(side, eb, y));
        rep.check("defect-nilpotent", is_nilpotent(Matrix<T>(eb - eb * y * eb)));
        rep.check("transfer-back",
                  verify_gdrazin(side, ea, gdrazin_transfer_4(side, pr.swapped(), y).witness.candidate));
        rep.set_witness(g.witness);
    } catch (const SingularResolvent& e) {
        rep.check("bracket-invertible", false);
        rep.notes.push_back(e.what());
    }
}

template <Scalar T>
void quad_pair_trial(Trial<T>& t, VerificationReport& rep)
{
    const auto q = make_quad(t, t.random_index(), rep);
    const auto ac = q.ac();
    const auto db = Matrix<T>(q.d() * q.b());
    const auto pr = quad_to_pair(q.a(), q.b(), q.c(), q.d(), 1);
    rep.check("accepted-iff-conditions", pr.has_value() == IntertwinePair<T>::holds(ac, db, 1));
    rep.indices["accepted"] = pr ? 1 : 0;
    if (!pr) return;
    const auto I = ac.identity_like();
    const Matrix<T> ea = I - ac, eb = I - db;
    const auto [x, k] = drazin_inverse(ea);
    rep.check("index(1-ac)-equals-index(1-db)", drazin_index(eb) == k);
    rep.check("witness", verify_drazin(Side::left, eb, drazin_transfer_4(Side::left, *pr, x, k).witness.candidate, k));
}

// ---------------------------------------------------------------- registry

using Runner = std::function<void(const TrialSpec&, VerificationReport&)>;

struct Entry {
    TheoremInfo info;
    bool modular;     ///< also runs over Z/p
    bool audit = false;
    Runner run;
};

#define OSD_TRIAL(body, ...)                                                                                          \
    [](const TrialSpec& s, VerificationReport& rep) {                                                                  \
        with_scalar(s, [&](auto ring) {                                                                                \
            using T = typename decltype(ring)::scalar_type;                                                            \
            Trial<T> t(s, ring);                                                                                       \
            body<T>(t, rep __VA_OPT__(, ) __VA_ARGS__);                                                                \
        });                                                                                                            \
    }

const std::vector<std::string> matrix_families{"mixed", "planted-index", "random"};
const std::vector<std::string> quad_families{"mixed", "classical", "case-II", "solved"};
const std::vector<std::string> pair_families{"mixed", "idempotent", "planted", "exhaustive-ring"};

const std::vector<Entry>& registry()
{
    using enum Side;
    static const std::vector<Entry> table{
        {{"def-1.2-minimality", "Drazin inverse passes both one-sided predicates exactly at its index", matrix_families},
         true, false, OSD_TRIAL(minimality_trial)},
        {{"prop-1.4", "left and right Drazin inverses coincide with equal indices", matrix_families}, true, false,
         OSD_TRIAL(uniqueness_trial)},
        {{"prop-2.1-left", "b = xax satisfies the normalized left system", matrix_families}, true, false,
         OSD_TRIAL(normalize_trial, left)},
        {{"prop-2.1-right", "c = yay satisfies the normalized right system", matrix_families}, true, false,
         OSD_TRIAL(normalize_trial, right)},
        {{"prop-2.2", "az = zb forces xz = zy", matrix_families}, true, false, OSD_TRIAL(intertwine_trial)},
        {{"thm-2.4-left", "yx is a left Drazin inverse of ab for a in comm^2(b)", matrix_families}, true, false,
         OSD_TRIAL(reverse_order_trial, left)},
        {{"thm-2.4-right", "yx is a right Drazin inverse of ab for a in comm^2(b)", matrix_families}, true, false,
         OSD_TRIAL(reverse_order_trial, right)},
        {{"thm-2.7-left", "Azumaya realization of a left strongly pi-regular witness", matrix_families}, true, false,
         OSD_TRIAL(azumaya_trial, left)},
        {{"thm-2.7-right", "Azumaya realization of a right strongly pi-regular witness", matrix_families}, true, false,
         OSD_TRIAL(azumaya_trial, right)},
        {{"thm-2.7-audit", "exhaustive equivalence audit over M_dim(Z/m)", {"exhaustive-ring"}}, true, true,
         OSD_TRIAL(audit_trial)},
        {{"thm-3.2-left", "left regularity transfers between 1 - ac and 1 - bd", quad_families}, true, false,
         OSD_TRIAL(regular_trial, left)},
        {{"thm-3.2-right", "right regularity transfers between 1 - ac and 1 - bd", quad_families}, true, false,
         OSD_TRIAL(regular_trial, right)},
        {{"thm-3.3i-left", "left pi-regularity transfers through the binomial quad", quad_families}, true, false,
         OSD_TRIAL(pi_regular_trial, left)},
        {{"thm-3.3i-right", "right pi-regularity transfers through the binomial quad", quad_families}, true, false,
         OSD_TRIAL(pi_regular_trial, right)},
        {{"thm-3.3ii-left", "left strong pi-regularity transfers at the same index", quad_families}, true, false,
         OSD_TRIAL(strong_pi_trial, left)},
        {{"thm-3.3ii-right", "right strong pi-regularity transfers at the same index", quad_families}, true, false,
         OSD_TRIAL(strong_pi_trial, right)},
        {{"thm-3.3-binomial", "(1 - bd)^n = 1 - b_n d and (1 - ac)^n = 1 - a c_n for n <= 4", quad_families}, true,
         false, OSD_TRIAL(binomial_trial)},
        {{"thm-3.5-left", "left Drazin transfer with index preservation", quad_families}, true, false,
         OSD_TRIAL(drazin_trial, left)},
        {{"thm-3.5-right", "right Drazin transfer with index preservation", quad_families}, true, false,
         OSD_TRIAL(drazin_trial, right)},
        {{"thm-3.5g-left", "left group inverse transfer", quad_families}, true, false, OSD_TRIAL(group_trial, left)},
        {{"thm-3.5g-right", "right group inverse transfer", quad_families}, true, false,
         OSD_TRIAL(group_trial, right)},
        {{"thm-3.6-left", "left generalized Drazin transfer with invertible bracket", quad_families}, true, false,
         OSD_TRIAL(gdrazin_trial, left)},
        {{"thm-3.6-right", "right generalized Drazin transfer with invertible bracket", quad_families}, true, false,
         OSD_TRIAL(gdrazin_trial, right)},
        {{"cor-3.10", "1 - ac and 1 - ca share Drazin index and transferred witnesses", {"classical"}}, true, false,
         OSD_TRIAL(classical_corollary_trial)},
        {{"cor-3.11", "spectra and point indices of ac and ca agree away from 0", {"mixed", "random", "planted-jordan"}},
         false, false, OSD_TRIAL(product_spectrum_trial)},
        {{"prop-cline-left", "y = c x^2 a is a left Drazin inverse of ca at k + 1", {"planted-index"}}, true, false,
         OSD_TRIAL(cline_trial, left)},
        {{"prop-cline-right", "y = c x^2 a is a right Drazin inverse of ca at k + 1", {"planted-index"}}, true, false,
         OSD_TRIAL(cline_trial, right)},
        {{"thm-4.0-left", "left regularity transfers between 1 - a and 1 - b", pair_families}, true, false,
         OSD_TRIAL(regular4_trial, left)},
        {{"thm-4.0-right", "right regularity transfers between 1 - a and 1 - b", pair_families}, true, false,
         OSD_TRIAL(regular4_trial, right)},
        {{"thm-4.1-left", "left strong pi-regularity transfers between 1 - a and 1 - b", pair_families}, true, false,
         OSD_TRIAL(strong_pi4_trial, left)},
        {{"thm-4.1-right", "right strong pi-regularity transfers between 1 - a and 1 - b", pair_families}, true, false,
         OSD_TRIAL(strong_pi4_trial, right)},
        {{"thm-4.2-left", "left Drazin transfer for intertwined pairs", pair_families}, true, false,
         OSD_TRIAL(drazin4_trial, left)},
        {{"thm-4.2-right", "right Drazin transfer for intertwined pairs", pair_families}, true, false,
         OSD_TRIAL(drazin4_trial, right)},
        {{"thm-4.3-left", "left group inverse transfer for intertwined pairs", pair_families}, true, false,
         OSD_TRIAL(group4_trial, left)},
        {{"thm-4.3-right", "right group inverse transfer for intertwined pairs", pair_families}, true, false,
         OSD_TRIAL(group4_trial, right)},
        {{"thm-4.5-left", "left generalized Drazin transfer for intertwined pairs", pair_families}, true, false,
         OSD_TRIAL(gdrazin4_trial, left)},
        {{"thm-4.5-right", "right generalized Drazin transfer for intertwined pairs", pair_families}, true, false,
         OSD_TRIAL(gdrazin4_trial, right)},
        {{"rmk-4.6", "quads meeting the product conditions give intertwined pairs (ac, db)", quad_families}, true,
         false, OSD_TRIAL(quad_pair_trial)},
        {{"cor-4.7", "spectra of intertwined a and b agree away from 0", {"mixed", "idempotent", "planted"}}, false,
         false, OSD_TRIAL(pair_spectrum_trial)},
    };
    return table;
}

#undef OSD_TRIAL

const Entry& find_entry(const std::string& id)
{
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    std::string known;
    for (const auto& e : registry()) known += (known.empty() ? "" : ", ") + e.info.id;
    throw UsageError("unknown theorem id '" + id + "' (known: " + known + ")");
}

} // namespace

int CampaignResult::exit_status() const
{
    if (aggregate.value("failed", 0) > 0) return exit_failures;
    if (budget_exceeded) return exit_budget;
    return exit_pass;
}

const std::vector<TheoremInfo>& registered_theorems()
{
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

CampaignResult run_campaign(const CampaignConfig& cfg)
{
    const Entry& entry = find_entry(cfg.theorem);
    const std::string family = cfg.family.empty() ? entry.info.families.front() : cfg.family;
    if (std::find(entry.info.families.begin(), entry.info.families.end(), family) == entry.info.families.end())
        throw UsageError("family '" + family + "' does not apply to " + cfg.theorem);
    if (cfg.trials == 0) throw UsageError("trials must be positive");
    if (cfg.dim == 0) throw UsageError("dim must be positive");
    if (cfg.budget_seconds == 0) throw UsageError("budget-seconds must be positive");
    ScalarSpec scalar;
    try {
        scalar = ScalarSpec::parse(cfg.scalar);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    const bool modular = scalar.kind == ScalarSpec::Kind::modular;
    if (entry.audit && !modular) throw UsageError(cfg.theorem + " needs a mod:m scalar");
    if (modular && !entry.modular) throw UsageError(cfg.theorem + " needs rational or gaussian scalars");
    if (modular && !entry.audit && !ModRing{scalar.modulus}.is_field())
        throw UsageError(cfg.theorem + " needs a prime modulus");
    if (family == "exhaustive-ring" && !modular && !entry.audit)
        throw UsageError("exhaustive-ring needs a mod:p scalar");

    std::size_t trials = cfg.trials;
    std::vector<IntertwinePair<ModInt>> exhaustive;
    if (entry.audit) {
        trials = 1;
    } else if (family == "exhaustive-ring") {
        try {
            exhaustive = pair_exhaustive(cfg.dim, scalar.modulus, 1);
        } catch (const BudgetExceeded& e) {
            throw UsageError(e.what());
        }
        trials = exhaustive.size();
    }

    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + std::chrono::seconds(cfg.budget_seconds);
    std::atomic<bool> out_of_time{false};
    std::vector<std::optional<VerificationReport>> slots(trials);
    const unsigned workers = cfg.workers ? cfg.workers : worker_count();

    parallel_for(trials, workers, [&](std::size_t i) {
        if (out_of_time.load() || std::chrono::steady_clock::now() > deadline) {
            out_of_time = true;
            return;
        }
        std::size_t dim = cfg.dim;
        if (cfg.dim_max > cfg.dim) {
            gen::Rng pick(gen::mix_seed(cfg.seed ^ 0xD1B54A32D192ED03ULL, i));
            dim = static_cast<std::size_t>(gen::uniform(pick, static_cast<long>(cfg.dim), static_cast<long>(cfg.dim_max)));
        }
        TrialSpec spec{cfg.seed, i, dim, family, scalar, exhaustive.empty() ? nullptr : &exhaustive};
        VerificationReport rep(cfg.theorem + "#" + std::to_string(i));
        try {
            entry.run(spec, rep);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            rep.check("completed", false);
            rep.notes.push_back(std::string("exception: ") + e.what());
        }
        if (rep.checks.empty()) rep.check("completed", false);
        rep.indices["dim"] = static_cast<long long>(dim);
        if (rep.passed()) rep.matrices.clear();
        slots[i] = std::move(rep);
    });

    CampaignResult result;
    for (auto& s : slots)
        if (s) result.reports.push_back(std::move(*s));
    result.budget_exceeded = result.reports.size() < trials;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    nlohmann::json header{{"theorem", cfg.theorem},   {"family", family}, {"scalar", scalar.str()},
                          {"dim", cfg.dim},           {"seed", cfg.seed}, {"trials_requested", trials},
                          {"budget_exceeded", result.budget_exceeded}};
    if (cfg.dim_max > cfg.dim) header["dim_max"] = cfg.dim_max;
    result.aggregate = aggregate_reports(result.reports, header);
    return result;
}

nlohmann::json aggregate_reports(const std::vector<VerificationReport>& reports, const nlohmann::json& header)
{
    nlohmann::json agg = header;
    std::size_t passed = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> checks;
    std::map<std::string, std::map<std::string, std::size_t>> indices;
    std::map<std::string, std::size_t> notes;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : reports) {
        if (r.passed()) ++passed;
        else failures.push_back(r.to_json());
        for (const auto& [name, ok] : r.checks) (ok ? checks[name].first : checks[name].second)++;
        for (const auto& [name, v] : r.indices) ++indices[name][std::to_string(v)];
        for (const auto& n : r.notes) ++notes[n];
    }
    agg["trials_run"] = reports.size();
    agg["passed"] = passed;
    agg["failed"] = reports.size() - passed;
    auto& cs = agg["checks"] = nlohmann::json::object();
    for (const auto& [name, pf] : checks) cs[name] = {{"pass", pf.first}, {"fail", pf.second}};
    agg["indices"] = indices;
    agg["notes"] = notes;
    agg["counterexamples"] = std::move(failures);
    return agg;
}

std::string aggregate_text(const nlohmann::json& agg)
{
    std::ostringstream out;
    const char* verdict = agg.value("failed", 0) > 0                 ? "FAIL"
                          : agg.value("budget_exceeded", false) ? "INCOMPLETE"
                                                                : "PASS";
    out << agg.value("theorem", std::string("reports")) << ": " << verdict << " "
        << agg.value("passed", 0) << "/" << agg.value("trials_run", 0) << " trials passed";
    if (agg.contains("trials_requested")) out << " (" << agg["trials_requested"].get<std::size_t>() << " requested)";
    out << "\n";
    for (const char* key : {"family", "scalar", "dim", "dim_max", "seed"})
        if (agg.contains(key)) out << "  " << key << ": " << (agg[key].is_string() ? agg[key].get<std::string>() : agg[key].dump()) << "\n";
    if (agg.value("budget_exceeded", false)) out << "  budget exceeded: partial run\n";
    for (const auto& [name, pf] : agg["checks"].items())
        out << "  check " << name << ": " << pf["pass"].get<std::size_t>() << " pass, " << pf["fail"].get<std::size_t>()
            << " fail\n";
    for (const auto& [name, hist] : agg["indices"].items()) {
        out << "  " << name << ":";
        for (const auto& [v, n] : hist.items()) out << " " << v << "x" << n.get<std::size_t>();
        out << "\n";
    }
    for (const auto& c : agg["counterexamples"]) out << "  counterexample " << c["instance"].get<std::string>() << "\n";
    return out.str();
}

} // namespace osdrazin

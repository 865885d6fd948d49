#include "osdrazin/instances.hpp"

#include <set>

#include "osdrazin/campaign.hpp"
#include "osdrazin/generators.hpp"

namespace osdrazin {

namespace {

template <class F>
void with_ring(const ScalarSpec& s, F&& f)
{
    switch (s.kind) {
    case ScalarSpec::Kind::rational: f(RationalField{}); break;
    case ScalarSpec::Kind::gaussian: f(GaussianField{}); break;
    case ScalarSpec::Kind::modular: f(ModRing{s.modulus}); break;
    }
}

nlohmann::json jordan_json(const JordanSpec& spec)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& b : spec.blocks) out.push_back({{"eigenvalue", b.eigenvalue.str()}, {"size", b.size}});
    return out;
}

JordanSpec jordan_from_json(const nlohmann::json& doc)
{
    JordanSpec spec;
    for (const auto& b : doc) spec.blocks.push_back({Gaussian::parse(b.at("eigenvalue").get<std::string>()), b.at("size").get<std::size_t>()});
    return spec;
}

template <Scalar T>
nlohmann::json quad_doc(const JacobsonQuad<T>& q)
{
    return {{"kind", "quad"},
            {"matrices",
             {{"a", matrix_to_json(q.a())}, {"b", matrix_to_json(q.b())}, {"c", matrix_to_json(q.c())},
              {"d", matrix_to_json(q.d())}}}};
}

template <Scalar T>
nlohmann::json pair_doc(const IntertwinePair<T>& p)
{
    return {{"kind", "pair"}, {"n", p.n()}, {"matrices", {{"a", matrix_to_json(p.a())}, {"b", matrix_to_json(p.b())}}}};
}

template <Scalar T>
bool requires_field_scalar(const typename T::ring_type& ring)
{
    if constexpr (std::is_same_v<T, ModInt>) return ring.is_field();
    else return true;
}

// Same scalar kind for every matrix of a document.
template <class F>
auto visit_same(const AnyMatrix& first, const std::vector<AnyMatrix>& rest, F&& f)
{
    return std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            std::vector<M> typed{m};
            for (const auto& r : rest) {
                const auto* t = std::get_if<M>(&r);
                if (!t) throw DimensionMismatch("instance mixes scalar kinds");
                typed.push_back(*t);
            }
            return f(typed);
        },
        first);
}

} // namespace

const std::vector<std::string>& instance_families()
{
    static const std::vector<std::string> f{"classical-quad", "solved-quad",  "case-II-quad",   "idempotent-pair",
                                            "planted-pair",   "planted-jordan", "exhaustive-ring"};
    return f;
}

JordanSpec parse_jordan_spec(const std::string& text)
{
    JordanSpec spec;
    std::size_t at = 0;
    while (at < text.size()) {
        auto comma = text.find(',', at);
        if (comma == std::string::npos) comma = text.size();
        const auto item = text.substr(at, comma - at);
        const auto colon = item.rfind(':');
        if (colon == std::string::npos) throw ParseError("Jordan block '" + item + "' is not lambda:size");
        const auto size_text = item.substr(colon + 1);
        std::size_t size = 0;
        try {
            std::size_t used = 0;
            size = std::stoul(size_text, &used);
            if (used != size_text.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad block size in '" + item + "'");
        }
        if (size == 0) throw ParseError("Jordan block of size 0 in '" + item + "'");
        spec.blocks.push_back({Gaussian::parse(item.substr(0, colon)), size});
        at = comma + 1;
    }
    if (spec.blocks.empty()) throw ParseError("empty Jordan spec");
    return spec;
}

nlohmann::json gen_instance(const InstanceParams& p)
{
    const auto& fams = instance_families();
    if (std::find(fams.begin(), fams.end(), p.family) == fams.end()) throw UsageError("unknown family '" + p.family + "'");
    if (p.dim == 0) throw UsageError("dim must be positive");
    if (p.exponent == 0) throw UsageError("exponent must be positive");
    const auto scalar = ScalarSpec::parse(p.scalar);
    gen::Rng rng(p.seed);
    nlohmann::json doc;

    if (p.family == "planted-jordan") {
        const auto spec = parse_jordan_spec(p.jordan.empty() ? "1:2" : p.jordan);
        const auto g = jordan_realize(spec, p.seed);
        doc = {{"kind", "jordan"}, {"spec", jordan_json(spec)}};
        if (scalar.kind == ScalarSpec::Kind::rational) {
            const auto r = to_rational(g);
            if (!r) throw UsageError("complex eigenvalues need --scalar gaussian");
            doc["matrices"] = {{"a", matrix_to_json(*r)}};
        } else if (scalar.kind == ScalarSpec::Kind::gaussian) {
            doc["matrices"] = {{"a", matrix_to_json(g)}};
        } else {
            throw UsageError("planted-jordan needs rational or gaussian scalars");
        }
    } else if (p.family == "exhaustive-ring") {
        if (scalar.kind != ScalarSpec::Kind::modular) throw UsageError("exhaustive-ring needs a mod:m scalar");
        nlohmann::json pairs = nlohmann::json::array();
        try {
            pair_exhaustive(p.dim, scalar.modulus, p.exponent, [&](const IntertwinePair<ModInt>& pr) {
                pairs.push_back({{"a", matrix_to_json(pr.a())}, {"b", matrix_to_json(pr.b())}});
            });
        } catch (const BudgetExceeded& e) {
            throw UsageError(e.what());
        }
        doc = {{"kind", "exhaustive-ring"}, {"dim", p.dim},           {"modulus", scalar.modulus},
               {"n", p.exponent},           {"count", pairs.size()}, {"pairs", std::move(pairs)}};
    } else {
        with_ring(scalar, [&](auto ring) {
            using T = typename decltype(ring)::scalar_type;
            if (!requires_field_scalar<T>(ring)) throw UsageError(p.family + " needs a field (prime modulus)");
            if (p.family == "classical-quad") doc = quad_doc(gen::classical_quad<T>(rng, p.dim, ring, p.index));
            else if (p.family == "solved-quad") doc = quad_doc(gen::solved_quad<T>(rng, p.dim, ring, p.index));
            else if (p.family == "case-II-quad") doc = quad_doc(gen::case_two_quad<T>(rng, p.dim, ring, p.index));
            else if (p.family == "idempotent-pair") {
                if (p.rank > p.dim) throw UsageError("rank exceeds dim");
                doc = pair_doc(gen::idempotent_pair<T>(rng, p.rank, p.dim, ring, p.exponent));
            } else {
                if (p.dim < 2) throw UsageError("planted-pair needs dim >= 2");
                doc = pair_doc(gen::planted_pair<T>(rng, p.dim, ring, p.index, p.exponent));
            }
        });
    }
    doc["family"] = p.family;
    doc["seed"] = p.seed;
    doc["scalar"] = scalar.str();

    const auto rep = check_instance(doc);
    if (!rep.passed()) throw InvariantViolation("generated " + p.family + " instance fails its own invariants");
    return doc;
}

VerificationReport check_instance(const nlohmann::json& doc)
{
    try {
        const auto kind = doc.at("kind").get<std::string>();
        VerificationReport rep(doc.value("family", kind) + "@" + std::to_string(doc.value("seed", 0ULL)));

        if (kind == "quad") {
            const auto& m = doc.at("matrices");
            visit_same(matrix_from_json(m.at("a")),
                       {matrix_from_json(m.at("b")), matrix_from_json(m.at("c")), matrix_from_json(m.at("d"))},
                       [&](const auto& v) {
                           using T = typename std::decay_t<decltype(v[0])>::scalar_type;
                           rep.check("acd-equals-dbd", v[0] * v[2] * v[3] == v[3] * v[1] * v[3]);
                           rep.check("dba-equals-aca", v[3] * v[1] * v[0] == v[0] * v[2] * v[0]);
                           if constexpr (!std::is_same_v<T, ModInt>) {
                               const auto I = v[0].identity_like();
                               rep.check("index-preserved", drazin_index(Matrix<T>(I - v[0] * v[2])) ==
                                                                drazin_index(Matrix<T>(I - v[1] * v[3])));
                           }
                           return 0;
                       });
        } else if (kind == "pair") {
            const auto& m = doc.at("matrices");
            const auto n = doc.at("n").get<unsigned>();
            if (n == 0) throw ParseError("pair exponent must be positive");
            visit_same(matrix_from_json(m.at("a")), {matrix_from_json(m.at("b"))}, [&](const auto& v) {
                using T = typename std::decay_t<decltype(v[0])>::scalar_type;
                rep.check("intertwined", IntertwinePair<T>::holds(v[0], v[1], n));
                return 0;
            });
        } else if (kind == "jordan") {
            const auto spec = jordan_from_json(doc.at("spec"));
            const auto any = matrix_from_json(doc.at("matrices").at("a"));
            const GaussianMatrix a = std::visit(
                [](const auto& m) -> GaussianMatrix {
                    using T = typename std::decay_t<decltype(m)>::scalar_type;
                    if constexpr (std::is_same_v<T, Gaussian>) return m;
                    else if constexpr (std::is_same_v<T, Rational>) return to_gaussian(m);
                    else throw ParseError("Jordan instances need rational or gaussian scalars");
                },
                any);
            rep.check("dimension", a.dim() == spec.dim());
            for (const auto& lambda : spec.eigenvalues()) {
                const auto k = point_index(a, lambda);
                rep.check("point-index-at-" + lambda.str(), k == planted_point_index(spec, lambda));
                rep.indices["point-index-at-" + lambda.str()] = k;
            }
        } else if (kind == "exhaustive-ring") {
            const auto k = doc.at("dim").get<std::size_t>();
            const auto m = doc.at("modulus").get<std::int64_t>();
            const auto n = doc.at("n").get<unsigned>();
            std::set<std::string> seen;
            bool all_hold = true;
            for (const auto& pr : doc.at("pairs")) {
                const auto a = matrix_from_json_as<ModInt>(pr.at("a"));
                const auto b = matrix_from_json_as<ModInt>(pr.at("b"));
                all_hold = all_hold && a.dim() == k && a.ring().modulus == m && IntertwinePair<ModInt>::holds(a, b, n);
                seen.insert(pr.dump());
            }
            const auto count = doc.at("count").get<std::size_t>();
            rep.check("every-pair-intertwined", all_hold);
            rep.check("pairs-distinct", seen.size() == doc.at("pairs").size());
            rep.check("count-matches", count == doc.at("pairs").size() && count == pair_exhaustive(k, m, n).size());
            rep.indices["count"] = static_cast<long long>(count);
        } else {
            throw ParseError("unknown instance kind '" + kind + "'");
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed instance: ") + e.what());
    }
}

} // namespace osdrazin

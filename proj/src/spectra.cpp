#include "osdrazin/spectra.hpp"

#include <algorithm>
#include <map>

#include "osdrazin/drazin.hpp"
#include "osdrazin/generators.hpp"

namespace osdrazin {

namespace {

void trim(std::vector<Gaussian>& c)
{
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (q.sign() < 0) return std::nullopt;
    const mpz_class num = q.numerator();
    const mpz_class den = q.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

// Positive divisors of |v|, or nullopt when |v| is beyond the search cap.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& v)
{
    static const mpz_class cap("1000000000000");
    mpz_class a = abs(v);
    if (a == 0 || a > cap) return std::nullopt;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

void strip_root(Polynomial& p, const Gaussian& r, std::map<std::pair<std::string, std::string>, std::pair<Gaussian, unsigned>>& found)
{
    while (p.degree() >= 1 && p(r).is_zero()) {
        p = p.deflate(r);
        auto& slot = found[{r.re().str(), r.im().str()}];
        slot.first = r;
        ++slot.second;
    }
}

bool all_real(const Polynomial& p)
{
    return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](const Gaussian& g) { return g.is_real(); });
}

} // namespace

Gaussian Polynomial::operator()(const Gaussian& t) const
{
    Gaussian acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::deflate(const Gaussian& root) const
{
    if (coeffs.size() < 2) throw InvariantViolation("cannot deflate a constant polynomial");
    const std::size_t n = coeffs.size() - 1;
    std::vector<Gaussian> q(n, Gaussian(0));
    Gaussian carry(0);
    for (std::size_t i = n; i-- > 0;) {
        carry = coeffs[i + 1] + carry * root;
        q[i] = carry;
    }
    if (!(coeffs[0] + carry * root).is_zero()) throw InvariantViolation("deflation by a non-root");
    trim(q);
    return {std::move(q)};
}

std::string Polynomial::str() const
{
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs[i].str() + ")";
        if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
}

Polynomial charpoly(const GaussianMatrix& a)
{
    auto c = charpoly_coefficients(a);
    trim(c);
    return {std::move(c)};
}

std::optional<Gaussian> gaussian_sqrt(const Gaussian& z)
{
    const Rational& r = z.re();
    const Rational& s = z.im();
    if (s.is_zero()) {
        if (r.sign() >= 0) {
            if (auto q = rational_sqrt(r)) return Gaussian(*q);
            return std::nullopt;
        }
        if (auto q = rational_sqrt(-r)) return Gaussian(Rational(0), *q);
        return std::nullopt;
    }
    const auto m = rational_sqrt(z.norm());
    if (!m) return std::nullopt;
    const auto x = rational_sqrt((r + *m) / Rational(2));
    if (!x || x->is_zero()) return std::nullopt;
    return Gaussian(*x, s / (Rational(2) * *x));
}

RootSearch find_roots(const Polynomial& poly, const std::vector<Gaussian>& hints)
{
    Polynomial p = poly;
    trim(p.coeffs);
    std::map<std::pair<std::string, std::string>, std::pair<Gaussian, unsigned>> found;

    for (const auto& h : hints) strip_root(p, h, found);
    strip_root(p, Gaussian(0), found);

    if (p.degree() >= 1 && all_real(p)) {
        // clear denominators, then p/q with p | c_0 and q | c_n
        mpz_class l = 1;
        for (const auto& c : p.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().denominator().get_mpz_t());
        const mpz_class c0 = mpq_class(p.coeffs.front().re().value() * l).get_num();
        const mpz_class cn = mpq_class(p.coeffs.back().re().value() * l).get_num();
        const auto dp = divisors(c0);
        const auto dq = divisors(cn);
        if (dp && dq) {
            for (const auto& num : *dp)
                for (const auto& den : *dq)
                    for (int sgn : {1, -1}) {
                        if (p.degree() < 1) break;
                        strip_root(p, Gaussian(Rational(mpq_class(sgn * num, den))), found);
                    }
        }
    }

    if (p.degree() == 1) {
        strip_root(p, -p.coeffs[0] / p.coeffs[1], found);
    } else if (p.degree() == 2) {
        const auto& a = p.coeffs[2];
        const auto& b = p.coeffs[1];
        const auto& c = p.coeffs[0];
        if (auto sq = gaussian_sqrt(b * b - Gaussian(4) * a * c)) {
            const Gaussian two_a = Gaussian(2) * a;
            const Gaussian r1 = (-b + *sq) / two_a;
            const Gaussian r2 = (-b - *sq) / two_a;
            strip_root(p, r1, found);
            strip_root(p, r2, found);
        }
    }

    RootSearch out;
    for (auto& [key, v] : found) out.roots.push_back(v);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
    // normalize the residual to be monic
    if (!p.coeffs.empty()) {
        const Gaussian lead = p.coeffs.back();
        for (auto& c : p.coeffs) c = c / lead;
    }
    out.residual = std::move(p);
    return out;
}

std::size_t JordanSpec::dim() const
{
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size;
    return n;
}

std::vector<Gaussian> JordanSpec::eigenvalues() const
{
    std::vector<Gaussian> out;
    for (const auto& b : blocks)
        if (std::find(out.begin(), out.end(), b.eigenvalue) == out.end()) out.push_back(b.eigenvalue);
    std::sort(out.begin(), out.end(), [](const Gaussian& x, const Gaussian& y) { return lex_less(x, y); });
    return out;
}

GaussianMatrix jordan_matrix(const JordanSpec& spec)
{
    const std::size_t n = spec.dim();
    if (n == 0) throw DimensionMismatch("Jordan spec has no blocks");
    auto j = GaussianMatrix::zero(n);
    std::size_t at = 0;
    for (const auto& b : spec.blocks) {
        if (b.size == 0) throw DimensionMismatch("Jordan block of size 0");
        gen::place_block(j, gen::jordan_block<Gaussian>(b.size, b.eigenvalue), at);
        at += b.size;
    }
    return j;
}

GaussianMatrix jordan_realize(const JordanSpec& spec, std::uint64_t seed, bool identity_similarity)
{
    auto j = jordan_matrix(spec);
    if (identity_similarity) return j;
    gen::Rng rng(seed);
    const auto s = to_gaussian(gen::random_invertible<Rational>(rng, j.dim(), {}));
    return gen::conjugate(s, j);
}

std::size_t planted_point_index(const JordanSpec& spec, const Gaussian& lambda)
{
    std::size_t best = 0;
    for (const auto& b : spec.blocks)
        if (b.eigenvalue == lambda) best = std::max(best, b.size);
    return best;
}

GaussianMatrix to_gaussian(const RationalMatrix& a)
{
    auto g = GaussianMatrix::zero(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = Gaussian(a(i, j));
    return g;
}

std::optional<RationalMatrix> to_rational(const GaussianMatrix& a)
{
    auto r = RationalMatrix::zero(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!a(i, j).is_real()) return std::nullopt;
            r(i, j) = a(i, j).re();
        }
    return r;
}

unsigned point_index(const GaussianMatrix& a, const Gaussian& lambda)
{
    return drazin_index(GaussianMatrix(a.identity_like() * lambda - a));
}

unsigned point_index(const RationalMatrix& a, const Gaussian& lambda)
{
    return point_index(to_gaussian(a), lambda);
}

std::optional<unsigned> SpectrumReport::index_at(const Gaussian& lambda) const
{
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] == lambda) return point_indices[i];
    return std::nullopt;
}

nlohmann::json SpectrumReport::to_json() const
{
    nlohmann::json doc;
    auto& ev = doc["eigenvalues"] = nlohmann::json::array();
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        ev.push_back({{"value", eigenvalues[i].str()}, {"point_index", point_indices[i]}});
    auto& gs = doc["group_spectrum"] = nlohmann::json::array();
    for (const auto& g : group_spectrum) gs.push_back(g.str());
    doc["residual_factor"] = residual_factor.str();
    doc["drazin_spectra_empty"] = drazin_spectra_empty;
    return doc;
}

SpectrumReport group_spectrum(const GaussianMatrix& a, const std::vector<Gaussian>& hints)
{
    const auto roots = find_roots(charpoly(a), hints);
    SpectrumReport rep;
    for (const auto& [lambda, mult] : roots.roots) {
        const unsigned k = point_index(a, lambda);
        rep.eigenvalues.push_back(lambda);
        rep.point_indices.push_back(k);
        if (k >= 2) rep.group_spectrum.push_back(lambda);
    }
    rep.residual_factor = roots.residual;
    return rep;
}

SpectrumReport group_spectrum(const RationalMatrix& a, const std::vector<Gaussian>& hints)
{
    return group_spectrum(to_gaussian(a), hints);
}

namespace {

std::vector<Gaussian> nonzero(const std::vector<Gaussian>& v)
{
    std::vector<Gaussian> out;
    for (const auto& x : v)
        if (!x.is_zero()) out.push_back(x);
    return out;
}

// Shared comparison of two spectra away from 0.
void compare_off_zero(VerificationReport& rep, const GaussianMatrix& left, const GaussianMatrix& right,
                      const SpectrumReport& sl, const SpectrumReport& sr)
{
    rep.check("nonzero-eigenvalues-agree", nonzero(sl.eigenvalues) == nonzero(sr.eigenvalues));
    bool indices_agree = true;
    for (const auto& lambda : nonzero(sl.eigenvalues))
        indices_agree = indices_agree && point_index(left, lambda) == point_index(right, lambda);
    for (const auto& lambda : nonzero(sr.eigenvalues))
        indices_agree = indices_agree && point_index(left, lambda) == point_index(right, lambda);
    rep.check("nonzero-point-indices-agree", indices_agree);
    rep.check("nonzero-group-spectra-agree", nonzero(sl.group_spectrum) == nonzero(sr.group_spectrum));
    const auto bounded = [](const GaussianMatrix& m, const SpectrumReport& s) {
        return std::all_of(s.point_indices.begin(), s.point_indices.end(),
                           [&](unsigned k) { return k >= 1 && k <= m.dim(); });
    };
    rep.check("point-indices-finite", bounded(left, sl) && bounded(right, sr));
    rep.indices["eigenvalues-detected"] = static_cast<long long>(sl.eigenvalues.size());
    rep.indices["residual-degree"] = static_cast<long long>(sl.residual_factor.degree());
    std::string gs;
    for (const auto& g : nonzero(sl.group_spectrum)) gs += (gs.empty() ? "" : ", ") + g.str();
    rep.notes.push_back("nonzero group spectrum: {" + gs + "}");
}

} // namespace

VerificationReport product_identity_check(const GaussianMatrix& a, const GaussianMatrix& c,
                                          const std::vector<Gaussian>& hints)
{
    VerificationReport rep("product-identity");
    const auto ac = a * c;
    const auto ca = c * a;
    rep.check("charpoly-ac-equals-ca", charpoly(ac) == charpoly(ca));
    const auto sl = group_spectrum(ac, hints);
    const auto sr = group_spectrum(ca, hints);
    compare_off_zero(rep, ac, ca, sl, sr);
    const auto I = a.identity_like();
    const unsigned kl = drazin_index(GaussianMatrix(I - ac));
    const unsigned kr = drazin_index(GaussianMatrix(I - ca));
    rep.check("index-one-minus-ac-equals-ca", kl == kr);
    rep.indices["index(1-ac)"] = kl;
    rep.indices["index(1-ca)"] = kr;
    return rep;
}

VerificationReport product_identity_check(const RationalMatrix& a, const RationalMatrix& c,
                                          const std::vector<Gaussian>& hints)
{
    return product_identity_check(to_gaussian(a), to_gaussian(c), hints);
}

template <Scalar T>
VerificationReport intertwine_identity_check(const IntertwinePair<T>& pair, const std::vector<Gaussian>& hints)
{
    GaussianMatrix a = [&] {
        if constexpr (std::is_same_v<T, Rational>) return to_gaussian(pair.a());
        else return pair.a();
    }();
    GaussianMatrix b = [&] {
        if constexpr (std::is_same_v<T, Rational>) return to_gaussian(pair.b());
        else return pair.b();
    }();
    VerificationReport rep("intertwine-identity");
    const auto sa = group_spectrum(a, hints);
    const auto sb = group_spectrum(b, hints);
    compare_off_zero(rep, a, b, sa, sb);
    const auto I = a.identity_like();
    const unsigned ka = drazin_index(GaussianMatrix(I - a));
    const unsigned kb = drazin_index(GaussianMatrix(I - b));
    rep.check("index-one-minus-a-equals-b", ka == kb);
    rep.indices["index(1-a)"] = ka;
    rep.indices["index(1-b)"] = kb;
    return rep;
}

template VerificationReport intertwine_identity_check<Rational>(const IntertwinePair<Rational>&,
                                                                const std::vector<Gaussian>&);
template VerificationReport intertwine_identity_check<Gaussian>(const IntertwinePair<Gaussian>&,
                                                                const std::vector<Gaussian>&);

VerificationReport commuting_radius_check(const std::vector<Gaussian>& first, const std::vector<Gaussian>& second,
                                          std::uint64_t seed)
{
    if (first.size() != second.size() || first.empty())
        throw DimensionMismatch("commuting_radius_check: eigenvalue lists must be nonempty and of equal length");
    gen::Rng rng(seed);
    const std::size_t n = first.size();
    const auto s = to_gaussian(gen::random_invertible<Rational>(rng, n, {}));
    const auto a = gen::conjugate(s, GaussianMatrix::diagonal(first));
    const auto b = gen::conjugate(s, GaussianMatrix::diagonal(second));
    std::vector<Gaussian> products;
    for (std::size_t i = 0; i < n; ++i) products.push_back(first[i] * second[i]);

    VerificationReport rep("commuting-radius");
    const auto ab = a * b;
    rep.check("commute", ab == b * a);
    const auto ra = find_roots(charpoly(a), first);
    const auto rb = find_roots(charpoly(b), second);
    const auto rab = find_roots(charpoly(ab), products);
    rep.check("spectra-detected",
              ra.residual.degree() == 0 && rb.residual.degree() == 0 && rab.residual.degree() == 0);
    auto radius2 = [](const RootSearch& r) {
        Rational best(0);
        for (const auto& [lambda, mult] : r.roots) best = std::max(best, lambda.norm());
        return best;
    };
    rep.check("radius-submultiplicative", radius2(rab) <= radius2(ra) * radius2(rb));
    return rep;
}

} // namespace osdrazin

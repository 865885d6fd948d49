#include "osdrazin/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace osdrazin {

namespace {

std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

} // namespace

bool is_prime(std::int64_t m)
{
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den)
{
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s = strip_spaces(text);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::optional<Rational> Rational::try_inverse() const
{
    if (is_zero()) return std::nullopt;
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational RationalField::from_int(long v) const { return Rational(v); }
Rational RationalField::parse(std::string_view text) const { return Rational::parse(text); }

// ---------------------------------------------------------------- Gaussian

Gaussian Gaussian::parse(std::string_view text)
{
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty Gaussian literal");
    if (s.back() != 'i') return Gaussian(Rational::parse(s));

    s.pop_back();
    // The split point is the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](const std::string& t) {
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return Rational::parse(t);
    };
    if (split == std::string::npos) return {Rational(0), imag_part(s)};
    return {Rational::parse(s.substr(0, split)), imag_part(s.substr(split))};
}

std::optional<Gaussian> Gaussian::try_inverse() const
{
    if (is_zero()) return std::nullopt;
    const Rational n = norm();
    return Gaussian(re_ / n, -im_ / n);
}

std::string Gaussian::str() const
{
    if (im_.is_zero()) return re_.str();
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + im_.abs().str() + " i";
}

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o)
{
    const auto inv = o.try_inverse();
    if (!inv) throw std::domain_error("Gaussian: division by zero");
    return *this *= *inv;
}

Gaussian GaussianField::from_int(long v) const { return Gaussian(v); }
Gaussian GaussianField::parse(std::string_view text) const { return Gaussian::parse(text); }

// ---------------------------------------------------------------- ModInt

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus)
{
    if (modulus < 2) throw std::invalid_argument("ModInt: modulus must be >= 2");
    value_ = value % modulus;
    if (value_ < 0) value_ += modulus;
}

ModInt ModInt::parse(std::string_view text, std::int64_t modulus)
{
    const std::string s = strip_spaces(text);
    if (!is_integer_literal(s)) throw ParseError("not an integer literal: '" + std::string(text) + "'");
    mpz_class v(s[0] == '+' ? s.substr(1) : s, 10);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(modulus));
    return {static_cast<std::int64_t>(r.get_si()), modulus};
}

void ModInt::check_same(const ModInt& o) const
{
    if (modulus_ != o.modulus_)
        throw DimensionMismatch("ModInt: moduli differ (" + std::to_string(modulus_) + " vs " +
                                std::to_string(o.modulus_) + ")");
}

std::optional<ModInt> ModInt::try_inverse() const
{
    // extended Euclid on (value, modulus)
    std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (r0 != 1) return std::nullopt;
    return ModInt(t0, modulus_);
}

ModInt& ModInt::operator+=(const ModInt& o)
{
    check_same(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
}

ModInt& ModInt::operator-=(const ModInt& o)
{
    check_same(o);
    value_ -= o.value_;
    if (value_ < 0) value_ += modulus_;
    return *this;
}

ModInt& ModInt::operator*=(const ModInt& o)
{
    check_same(o);
    value_ = static_cast<std::int64_t>(static_cast<__int128>(value_) * o.value_ % modulus_);
    return *this;
}

ModInt ModRing::from_int(long v) const { return {v, modulus}; }
ModInt ModRing::parse(std::string_view text) const { return ModInt::parse(text, modulus); }
bool ModRing::is_field() const { return is_prime(modulus); }

} // namespace osdrazin

#pragma once

// Exact scalar rings: rationals, Gaussian rationals and integers mod m.
//
// Every scalar type T exposes a ring descriptor (T::ring_type) that knows
// how to build constants, whether it is a field, and how to parse entries.
// Matrices carry one descriptor so identities and zeros can be made without
// a prototype entry, which matters for ModInt where 0 depends on m.

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "osdrazin/errors.hpp"

namespace osdrazin {

class Rational;
class Gaussian;
class ModInt;

struct RationalField {
    using scalar_type = Rational;
    Rational from_int(long v) const;
    Rational parse(std::string_view text) const;
    static constexpr bool is_field() { return true; }
    std::string name() const { return "rational"; }
    bool operator==(const RationalField&) const = default;
};

struct GaussianField {
    using scalar_type = Gaussian;
    Gaussian from_int(long v) const;
    Gaussian parse(std::string_view text) const;
    static constexpr bool is_field() { return true; }
    std::string name() const { return "gaussian"; }
    bool operator==(const GaussianField&) const = default;
};

struct ModRing {
    using scalar_type = ModInt;
    std::int64_t modulus = 2;

    ModInt from_int(long v) const;
    ModInt parse(std::string_view text) const;
    /// True iff the modulus is prime.
    bool is_field() const;
    std::string name() const { return "mod:" + std::to_string(modulus); }
    bool operator==(const ModRing&) const = default;
};

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
public:
    using ring_type = RationalField;

    Rational() = default;
    Rational(long v) : v_(v) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    RationalField ring() const { return {}; }
    std::optional<Rational> try_inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

/// Exact complex number re + im*i with rational parts.
class Gaussian {
public:
    using ring_type = GaussianField;

    Gaussian() = default;
    Gaussian(long v) : re_(v) {} // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Accepts "p/q", "p/q+r/s i", "p/q-r/s i", "r/s i" and "i"; whitespace is ignored.
    static Gaussian parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    GaussianField ring() const { return {}; }
    std::optional<Gaussian> try_inverse() const;
    Gaussian conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    std::string str() const;

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

    /// Lexicographic (re, im) order. Only used to sort spectra deterministically.
    friend bool lex_less(const Gaussian& a, const Gaussian& b)
    {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

/// Residue class value mod modulus. Mixing moduli throws DimensionMismatch.
class ModInt {
public:
    using ring_type = ModRing;

    ModInt() = default;
    ModInt(std::int64_t value, std::int64_t modulus);

    static ModInt parse(std::string_view text, std::int64_t modulus);

    std::int64_t value() const { return value_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }
    ModRing ring() const { return {modulus_}; }
    /// Inverse when gcd(value, modulus) = 1.
    std::optional<ModInt> try_inverse() const;
    std::string str() const { return std::to_string(value_); }

    ModInt& operator+=(const ModInt& o);
    ModInt& operator-=(const ModInt& o);
    ModInt& operator*=(const ModInt& o);

    friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
    friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
    friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
    friend ModInt operator-(const ModInt& a) { return ModInt(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_); }
    friend bool operator==(const ModInt& a, const ModInt& b) = default;

private:
    void check_same(const ModInt& o) const;

    std::int64_t value_ = 0;
    std::int64_t modulus_ = 2;
};

/// Exact scalar usable as a matrix entry.
template <class T>
concept Scalar = requires(const T a, const T b) {
    typename T::ring_type;
    { a + b } -> std::same_as<T>;
    { a - b } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { -a } -> std::same_as<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.ring() } -> std::same_as<typename T::ring_type>;
    { a.try_inverse() } -> std::same_as<std::optional<T>>;
    { a.str() } -> std::same_as<std::string>;
};

bool is_prime(std::int64_t m);

/// Binomial coefficient as a Rational-compatible long (small arguments only).
long binomial(int n, int k);

} // namespace osdrazin

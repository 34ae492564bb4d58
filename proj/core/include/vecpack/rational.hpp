#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vecpack {

/// Exact rational number, always kept in canonical form (gcd(p, q) = 1,
/// q > 0). Backed by GMP, so numerators and denominators never overflow.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value);

    /// Parses the canonical text form: "p" for integers, "p/q" with q > 1 and
    /// gcd(p, q) = 1 otherwise. Anything else ("2/4", "1/1", "+3", " 1")
    /// throws std::invalid_argument.
    static Rational parse(std::string_view text);

    std::string str() const;
    double to_double() const { return value_.get_d(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational pow(unsigned exponent) const;
    Rational inverse() const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The r-th root of a nonnegative value when it is itself rational.
std::optional<Rational> exact_root(const Rational& value, unsigned r);

}  // namespace vecpack

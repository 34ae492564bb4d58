#include "vecpack/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace vecpack {

namespace {

bool is_canonical_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-') {
        if (!allow_sign) return false;
        i = 1;
    }
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() - i > 1) return false;  // no leading zeros
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return s != "-0";
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume LP64");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_canonical_integer(text, true)) {
            throw std::invalid_argument("non-canonical rational \"" + std::string(text) + "\"");
        }
        return Rational(mpq_class(mpz_class(std::string(text))));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_canonical_integer(num, true) || !is_canonical_integer(den, false)) {
        throw std::invalid_argument("non-canonical rational \"" + std::string(text) + "\"");
    }
    mpz_class p(std::string{num});
    mpz_class q(std::string{den});
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (q <= 1 || g != 1) {
        throw std::invalid_argument("non-canonical rational \"" + std::string(text) + "\"");
    }
    return Rational(mpq_class(p, q));
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
    if (value_ == 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> exact_root(const Rational& value, unsigned r) {
    if (r == 0) throw std::invalid_argument("exact_root: r must be positive");
    if (value.sign() < 0) return std::nullopt;
    mpz_class num, den;
    const bool num_exact = mpz_root(num.get_mpz_t(), value.raw().get_num_mpz_t(), r) != 0;
    const bool den_exact = mpz_root(den.get_mpz_t(), value.raw().get_den_mpz_t(), r) != 0;
    if (!num_exact || !den_exact) return std::nullopt;
    return Rational(mpq_class(num, den));
}

}  // namespace vecpack

#pragma once

// Rows of rationals rescaled onto one common denominator, so that sums and
// comparisons against 1 become integer arithmetic. Internal to the library.

#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "vecpack/rational.hpp"

namespace vecpack::detail {

template <class Int>
struct ScaledMatrix {
    Int scale;  // the value 1
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;  // row-major

    const Int* row(std::size_t i) const { return data.data() + i * cols; }
};

inline mpz_class common_denominator(const std::vector<std::vector<Rational>>& rows) {
    mpz_class l = 1;
    for (const auto& r : rows) {
        for (const auto& v : r) {
            const mpz_class d = v.denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
    }
    return l;
}

template <class Int>
Int to_int(const mpz_class& v) {
    if constexpr (std::is_same_v<Int, mpz_class>) {
        return v;
    } else {
        return static_cast<Int>(v.get_si());
    }
}

/// Rows multiplied by `scale` (a common denominator), as Int.
template <class Int>
ScaledMatrix<Int> build_scaled(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                               const mpz_class& scale) {
    ScaledMatrix<Int> m{to_int<Int>(scale), rows.size(), cols, {}};
    m.data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        for (const auto& v : r) m.data.push_back(to_int<Int>(v.numerator() * (scale / v.denominator())));
    }
    return m;
}

inline bool fits_int64(const mpz_class& bound) {
    return bound < mpz_class(std::numeric_limits<std::int64_t>::max() / 4);
}

/// Calls fn(ScaledMatrix<Int>) with Int = std::int64_t when the sum of up to
/// `max_terms` rows (each entry in [0,1]) provably fits, else Int = mpz_class.
template <class Fn>
decltype(auto) with_scaled(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                           std::size_t max_terms, Fn&& fn) {
    const mpz_class scale = common_denominator(rows);
    if (fits_int64(scale * mpz_class(static_cast<unsigned long>(max_terms + 1)))) {
        return fn(build_scaled<std::int64_t>(rows, cols, scale));
    }
    return fn(build_scaled<mpz_class>(rows, cols, scale));
}

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }
inline Rational ratio(const mpz_class& num, const mpz_class& den) { return Rational(mpq_class(num, den)); }

}  // namespace vecpack::detail

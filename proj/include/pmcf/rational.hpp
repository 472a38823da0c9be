#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace pmcf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical n/d; throws DivisionByZero on d == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n", "-n", "n/d" (decimal). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "num/den", den omitted when 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);

/// b^e for any integer exponent e (b != 0 when e < 0).
Rational rational_pow(const Integer& base, long exponent);
Rational rational_pow(const Rational& base, long exponent);

Integer integer_pow(const Integer& base, unsigned long exponent);

/// |x| in the archimedean sense.
Rational abs_value(const Rational& x);

std::size_t hash_value(const Integer& x) noexcept;
std::size_t hash_value(const Rational& x) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace pmcf

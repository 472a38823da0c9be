#include "pmcf/rational.hpp"

#include <cctype>
#include <functional>

#include "pmcf/errors.hpp"

namespace pmcf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorKind::ParseError, "empty integer in '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(ErrorKind::ParseError, "bad digit in '" + std::string(text) + "'");
  }
  Integer value(std::string(text.substr(i)), 10);
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(trim(text.substr(0, slash)));
  const std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw Error(ErrorKind::ParseError, "signed denominator in '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer integer_pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational rational_pow(const Integer& base, long exponent) {
  if (exponent >= 0) return Rational(integer_pow(base, static_cast<unsigned long>(exponent)));
  return make_rational(1, integer_pow(base, static_cast<unsigned long>(-exponent)));
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    return make_rational(integer_pow(base.get_num(), static_cast<unsigned long>(exponent)),
                         integer_pow(base.get_den(), static_cast<unsigned long>(exponent)));
  }
  if (base == 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(integer_pow(base.get_den(), e), integer_pow(base.get_num(), e));
}

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::size_t hash_value(const Integer& x) noexcept {
  const mpz_srcptr z = x.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i)
    hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  return seed;
}

std::size_t hash_value(const Rational& x) noexcept {
  std::size_t seed = hash_value(x.get_num());
  hash_combine(seed, hash_value(x.get_den()));
  return seed;
}

}  // namespace pmcf

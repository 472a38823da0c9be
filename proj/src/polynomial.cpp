#include "pmcf/polynomial.hpp"

#include <sstream>

#include "pmcf/errors.hpp"
#include "pmcf/expression.hpp"

namespace pmcf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  return *this * Rational(1 / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& s) {
  for (auto& x : a.c_) x *= s;
  a.normalize();
  return a;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs_value(c);
    if (negative) os << "-";
    else if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << pmcf::to_string(mag);
      continue;
    }
    if (mag != 1) os << pmcf::to_string(mag) << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<Polynomial, Polynomial> inverse_cofactor(const Polynomial& a, const Polynomial& m) {
  // Invariant: s0*a == r0, s1*a == r1 (mod m).
  Polynomial r0 = m, r1 = a;
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {Polynomial(), Polynomial()};
  const Rational inv = 1 / r0.leading();
  return {r0 * inv, divmod(s0 * inv, m).second};
}

namespace {

struct PolynomialRing {
  Polynomial constant(const Rational& c) const { return Polynomial::constant(c); }
  Polynomial variable() const { return Polynomial::monomial(1, 1); }
  Polynomial divide(const Polynomial& a, const Polynomial& b) const {
    if (b.degree() != 0) throw Error(ErrorKind::ParseError, "polynomial expressions may only divide by constants");
    return a * Rational(1 / b.leading());
  }
  Polynomial power(const Polynomial& base, long e) const {
    if (e < 0) throw Error(ErrorKind::ParseError, "negative exponent in polynomial");
    Polynomial r = Polynomial::constant(1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  if (text.find('x') == std::string_view::npos && text.find(',') != std::string_view::npos) {
    std::vector<Rational> coeffs;
    std::size_t begin = 0;
    for (;;) {
      const auto comma = text.find(',', begin);
      coeffs.push_back(parse_rational(text.substr(begin, comma == std::string_view::npos ? comma : comma - begin)));
      if (comma == std::string_view::npos) break;
      begin = comma + 1;
    }
    return Polynomial(std::move(coeffs));
  }
  return ExpressionParser<PolynomialRing>(text, PolynomialRing{}).parse();
}

}  // namespace pmcf

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmcf/rational.hpp"

namespace pmcf {

/// Dense univariate polynomial over Q, constant term first. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const Rational& leading() const;
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Rendered as e.g. "x^3-8/5*x^2-x-1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Returns (g, s) with s*a == g (mod m), g the monic gcd of a and m.
std::pair<Polynomial, Polynomial> inverse_cofactor(const Polynomial& a, const Polynomial& m);

/// Accepts a constant-first coefficient list "c0,c1,...,cd" or an expression
/// in x such as "x^3-8/5*x^2-x-1". Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace pmcf

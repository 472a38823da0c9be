#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmcf/polynomial.hpp"

namespace pmcf {

enum class IrreducibilityCheck {
  /// Fail unless irreducibility is proven.
  Required,
  /// Skip the proof for degrees where it is inconclusive (degree >= 4).
  AssumeIrreducible,
};

/// Q(theta) with theta a root of a monic irreducible polynomial of degree >= 2.
class NumberField {
 public:
  explicit NumberField(const Polynomial& minpoly, IrreducibilityCheck check = IrreducibilityCheck::Required);

  const Polynomial& minpoly() const noexcept { return minpoly_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(minpoly_.degree()); }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

 private:
  Polynomial minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const Polynomial& minpoly, IrreducibilityCheck check = IrreducibilityCheck::Required);

/// Proven irreducible over Q? Exact for degree <= 3 (rational root test);
/// for higher degree, combines the rational root test with factor-degree
/// patterns modulo small primes. std::nullopt when inconclusive.
std::optional<bool> prove_irreducible(const Polynomial& f);

/// c_0 + c_1 theta + ... + c_{d-1} theta^{d-1}.
class AlgebraicNumber {
 public:
  AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs);
  static AlgebraicNumber from_rational(FieldPtr field, const Rational& c);
  static AlgebraicNumber generator(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Set when every non-constant coefficient vanishes.
  std::optional<Rational> as_rational() const;
  Polynomial as_polynomial() const { return Polynomial(coeffs_); }

  AlgebraicNumber inverse() const;
  AlgebraicNumber operator-() const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);

  /// Exact coefficient-wise equality (fields must match).
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  std::size_t hash() const noexcept;
  /// Rendered as a polynomial in x, e.g. "8/5*x^2+x+1".
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

enum class FieldOp { Add, Sub, Mul, Div };

/// Field arithmetic modulo the minimal polynomial; throws FieldMismatch or
/// DivisionByZero.
AlgebraicNumber nf_arith(const AlgebraicNumber& a, const AlgebraicNumber& b, FieldOp op);

/// Parses a rational expression in x (e.g. "1+1/x") as an element of field.
AlgebraicNumber parse_element(std::string_view text, const FieldPtr& field);

/// Parses "c0,c1,..." as a coefficient vector (padded to the field degree).
AlgebraicNumber parse_coefficients(std::string_view text, const FieldPtr& field);

/// A nonzero (c_1..c_k) with sum c_j values_j = 0 if the values are
/// Q-linearly dependent, else std::nullopt. The vector is primitive integral.
std::optional<std::vector<Rational>> rational_linear_dependence(const std::vector<AlgebraicNumber>& values);
std::optional<std::vector<Rational>> rational_linear_dependence(const std::vector<Rational>& values);

}  // namespace pmcf

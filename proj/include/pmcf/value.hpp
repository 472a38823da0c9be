#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "pmcf/approx.hpp"
#include "pmcf/embedding.hpp"
#include "pmcf/number_field.hpp"

namespace pmcf {

/// An element of Q(theta) together with the embedding that places it in Q_p.
struct EmbeddedNumber {
  AlgebraicNumber value;
  PAdicEmbedding embedding;
};

enum class Backend { Rational, NumberField, Approx };

/// An element of Q_p backed by one of three representations:
/// an exact rational, an exact algebraic number under a p-adic embedding, or
/// a truncated p-adic approximation. Mixed arithmetic promotes rationals to
/// the other operand's backend and algebraic numbers to approximations.
class PAdicValue {
 public:
  PAdicValue(Rational x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  PAdicValue(long x) : v_(Rational(x)) {}       // NOLINT(google-explicit-constructor)
  PAdicValue(AlgebraicNumber x, PAdicEmbedding emb) : v_(EmbeddedNumber{std::move(x), std::move(emb)}) {}
  PAdicValue(EmbeddedNumber x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  PAdicValue(PAdicApprox x) : v_(std::move(x)) {}     // NOLINT(google-explicit-constructor)

  Backend backend() const noexcept { return static_cast<Backend>(v_.index()); }
  bool is_exact() const noexcept { return backend() != Backend::Approx; }

  const Rational* rational() const noexcept { return std::get_if<Rational>(&v_); }
  const EmbeddedNumber* embedded() const noexcept { return std::get_if<EmbeddedNumber>(&v_); }
  const PAdicApprox* approx() const noexcept { return std::get_if<PAdicApprox>(&v_); }

  /// Definite for exact backends; for approximations, false when a nonzero
  /// digit is known and std::nullopt when indistinguishable from 0.
  std::optional<bool> known_zero() const;

  /// Approximation correct modulo p^precision.
  PAdicApprox to_approx(const Prime& p, long precision) const;

  PAdicValue operator-() const;
  friend PAdicValue operator+(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator-(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator*(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator/(const PAdicValue& a, const PAdicValue& b);

  /// Exact equality; defined only between exact backends (throws otherwise).
  friend bool exactly_equal(const PAdicValue& a, const PAdicValue& b);
  /// Hash consistent with exactly_equal.
  std::size_t exact_hash() const;

  std::string to_string() const;

 private:
  std::variant<Rational, EmbeddedNumber, PAdicApprox> v_;
};

/// v_p of the value. Approximations indistinguishable from 0 raise
/// InsufficientPrecision.
Valuation valuation(const PAdicValue& x, const Prime& p);

/// Browkin's function: the balanced digits of x with exponent <= 0.
/// InsufficientPrecision for an approximation with N < 1.
Rational browkin_s(const PAdicValue& x, const Prime& p);

struct DivisionResult {
  Rational quotient;
  PAdicValue remainder;
};

/// sigma = q*tau + eta with q = s(sigma/tau) in Z[1/p], |q|_inf < p/2, |eta| < |tau|.
DivisionResult padic_divide(const PAdicValue& sigma, const PAdicValue& tau, const Prime& p);

}  // namespace pmcf

#pragma once

#include <string>

#include "pmcf/padic.hpp"

namespace pmcf {

/// A p-adic number known modulo p^N, stored as balanced digits below N.
///
/// A value whose stored digits are all zero is indistinguishable from 0 at
/// this precision; its valuation is reported as N (a lower bound).
class PAdicApprox {
 public:
  /// x reduced modulo p^precision.
  static PAdicApprox from_rational(const Rational& x, const Prime& p, long precision);
  static PAdicApprox zero(const Prime& p, long precision);
  static PAdicApprox from_digits(BalancedDigits digits, const Prime& p, long precision);

  const Prime& prime() const noexcept { return p_; }
  long precision() const noexcept { return precision_; }
  const BalancedDigits& digits() const noexcept { return digits_; }

  bool indistinguishable_from_zero() const noexcept { return digits_.empty(); }
  /// Exact valuation when distinguishable from zero, else the precision.
  long valuation() const noexcept;
  /// Relative precision: number of known digits from the valuation on.
  long relative_precision() const noexcept { return precision_ - valuation(); }

  /// The canonical rational representative sum x_j p^j.
  Rational representative() const;

  /// Same value, precision lowered to min(N, new_precision).
  PAdicApprox truncated(long new_precision) const;

  /// Equality modulo p^min(N_a, N_b).
  bool congruent(const PAdicApprox& other) const;

  PAdicApprox operator-() const;

  std::string to_string() const;

  friend bool operator==(const PAdicApprox&, const PAdicApprox&) = default;

 private:
  PAdicApprox(const Prime& p, long precision, BalancedDigits digits)
      : p_(p), precision_(precision), digits_(std::move(digits)) {}

  Prime p_;
  long precision_;
  BalancedDigits digits_;
};

enum class ApproxOp { Add, Sub, Mul, Div };

/// Arithmetic with conservative precision propagation:
///   add/sub: min(N_a, N_b)
///   mul:     min(N_a + v_b, N_b + v_a)
///   div:     v_a - v_b + min(N_a - v_a, N_b - v_b)
/// Throws DivisionByZero for a divisor indistinguishable from 0, and
/// PrecisionExhausted when a product or quotient retains no known digit.
PAdicApprox approx_op(const PAdicApprox& a, const PAdicApprox& b, ApproxOp op);

inline PAdicApprox operator+(const PAdicApprox& a, const PAdicApprox& b) { return approx_op(a, b, ApproxOp::Add); }
inline PAdicApprox operator-(const PAdicApprox& a, const PAdicApprox& b) { return approx_op(a, b, ApproxOp::Sub); }
inline PAdicApprox operator*(const PAdicApprox& a, const PAdicApprox& b) { return approx_op(a, b, ApproxOp::Mul); }
inline PAdicApprox operator/(const PAdicApprox& a, const PAdicApprox& b) { return approx_op(a, b, ApproxOp::Div); }

}  // namespace pmcf

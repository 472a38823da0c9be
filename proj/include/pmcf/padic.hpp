#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include "pmcf/rational.hpp"

namespace pmcf {

/// An odd prime. Construction validates primality; p = 2 is rejected.
class Prime {
 public:
  explicit Prime(long p);

  long value() const noexcept { return p_; }
  Integer as_integer() const { return Integer(p_); }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  long p_;
};

bool is_prime(long n);

/// p-adic valuation; +infinity exactly for 0. Ordered with infinity on top.
class Valuation {
 public:
  explicit Valuation(long v) : v_(v) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const noexcept { return !v_.has_value(); }
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite())
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return *a.v_ <=> *b.v_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(*a.v_ + *b.v_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v);

 private:
  Valuation() = default;
  std::optional<long> v_;
};

Valuation valuation(const Integer& x, const Prime& p);
Valuation valuation(const Rational& x, const Prime& p);

/// Strips every factor p from x != 0, returning the exponent removed.
long remove_prime(Integer& x, const Prime& p);

/// |x|_p < |y|_p, decided on valuations.
inline bool norm_less(const Valuation& x, const Valuation& y) { return x > y; }

/// x = sum_{j >= start} digits[j - start] * p^j with every digit in (-p/2, p/2).
struct BalancedDigits {
  long start = 0;
  std::vector<long> digits;

  bool empty() const noexcept { return digits.empty(); }
  /// One past the last stored exponent.
  long end() const noexcept { return start + static_cast<long>(digits.size()); }

  friend bool operator==(const BalancedDigits&, const BalancedDigits&) = default;
};

/// Maps a residue in [0, p) into (-p/2, p/2).
long balance_residue(long r, long p);

/// Digits x_j for j = v(x) .. upto-1 with x == sum x_j p^j (mod p^upto).
/// Empty for x == 0 or when v(x) >= upto.
BalancedDigits balanced_digit_expansion(const Rational& x, const Prime& p, long upto);

Rational digits_value(const BalancedDigits& d, const Prime& p);

/// x mod p^k for an x whose denominator is prime to p; result in [0, p^k).
Integer residue_mod_power(const Rational& x, const Prime& p, long k);

/// Browkin's function on rationals: the part of the balanced expansion with
/// exponents <= 0. Lies in Z[1/p] with archimedean absolute value < p/2.
Rational browkin_s(const Rational& x, const Prime& p);

}  // namespace pmcf

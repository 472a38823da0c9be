#include "pmcf/padic.hpp"

#include "pmcf/errors.hpp"

namespace pmcf {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(long p) : p_(p) {
  if (p == 2 || !is_prime(p))
    throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
}

long Valuation::value() const {
  if (!v_) throw Error(ErrorKind::InvalidArgument, "valuation of zero is +infinity");
  return *v_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "+inf";
  return os << *v.v_;
}

long remove_prime(Integer& x, const Prime& p) {
  if (x == 0) return 0;
  const Integer pz = p.as_integer();
  mp_bitcnt_t removed = mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return static_cast<long>(removed);
}

Valuation valuation(const Integer& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  Integer t = x;
  return Valuation(remove_prime(t, p));
}

Valuation valuation(const Rational& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  Integer num = x.get_num();
  Integer den = x.get_den();
  return Valuation(remove_prime(num, p) - remove_prime(den, p));
}

long balance_residue(long r, long p) { return r > (p - 1) / 2 ? r - p : r; }

Integer residue_mod_power(const Rational& x, const Prime& p, long k) {
  if (k <= 0) return 0;
  const Integer modulus = integer_pow(p.as_integer(), static_cast<unsigned long>(k));
  Integer inv;
  const Integer den = x.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw Error(ErrorKind::InvalidArgument, "denominator divisible by p");
  Integer r = (x.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

BalancedDigits balanced_digit_expansion(const Rational& x, const Prime& p, long upto) {
  BalancedDigits out;
  if (x == 0) return out;
  Integer num = x.get_num();
  Integer den = x.get_den();
  const long v = remove_prime(num, p) - remove_prime(den, p);
  out.start = v;
  if (v >= upto) {
    out.start = 0;
    return out;
  }
  const long count = upto - v;
  Integer u = residue_mod_power(make_rational(num, den), p, count);
  const long pv = p.value();
  out.digits.reserve(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) {
    const long r = static_cast<long>(mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(pv)));
    const long d = balance_residue(r, pv);
    out.digits.push_back(d);
    u -= d;
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(pv));
  }
  return out;
}

Rational digits_value(const BalancedDigits& d, const Prime& p) {
  // Horner from the top digit, then shift by p^start.
  Integer acc = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) acc = acc * p.value() + *it;
  return Rational(acc) * rational_pow(p.as_integer(), d.start);
}

Rational browkin_s(const Rational& x, const Prime& p) {
  return digits_value(balanced_digit_expansion(x, p, 1), p);
}

}  // namespace pmcf

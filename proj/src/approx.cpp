#include "pmcf/approx.hpp"

#include <algorithm>
#include <sstream>

#include "pmcf/errors.hpp"

namespace pmcf {

PAdicApprox PAdicApprox::from_rational(const Rational& x, const Prime& p, long precision) {
  return PAdicApprox(p, precision, balanced_digit_expansion(x, p, precision));
}

PAdicApprox PAdicApprox::zero(const Prime& p, long precision) { return PAdicApprox(p, precision, {}); }

PAdicApprox PAdicApprox::from_digits(BalancedDigits digits, const Prime& p, long precision) {
  const long half = (p.value() - 1) / 2;
  for (long d : digits.digits)
    if (d < -half || d > half) throw Error(ErrorKind::InvalidArgument, "digit outside (-p/2, p/2)");
  // Normalize: drop digits at or above the precision, strip leading zeros.
  if (digits.end() > precision) {
    const long keep = std::max(0L, precision - digits.start);
    digits.digits.resize(static_cast<std::size_t>(keep));
  }
  std::size_t lead = 0;
  while (lead < digits.digits.size() && digits.digits[lead] == 0) ++lead;
  digits.digits.erase(digits.digits.begin(), digits.digits.begin() + static_cast<long>(lead));
  digits.start = digits.digits.empty() ? 0 : digits.start + static_cast<long>(lead);
  while (!digits.digits.empty() && digits.digits.back() == 0) digits.digits.pop_back();
  return PAdicApprox(p, precision, std::move(digits));
}

long PAdicApprox::valuation() const noexcept { return digits_.empty() ? precision_ : digits_.start; }

Rational PAdicApprox::representative() const { return digits_value(digits_, p_); }

PAdicApprox PAdicApprox::truncated(long new_precision) const {
  if (new_precision >= precision_) return *this;
  return from_digits(digits_, p_, new_precision);
}

bool PAdicApprox::congruent(const PAdicApprox& other) const {
  if (!(p_ == other.p_)) return false;
  const long n = std::min(precision_, other.precision_);
  return truncated(n).representative() == other.truncated(n).representative();
}

PAdicApprox PAdicApprox::operator-() const {
  BalancedDigits neg = digits_;
  for (long& d : neg.digits) d = -d;
  return PAdicApprox(p_, precision_, std::move(neg));
}

std::string PAdicApprox::to_string() const {
  std::ostringstream os;
  os << pmcf::to_string(representative()) << " + O(" << p_.value() << "^" << precision_ << ")";
  return os.str();
}

PAdicApprox approx_op(const PAdicApprox& a, const PAdicApprox& b, ApproxOp op) {
  if (!(a.prime() == b.prime())) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  const Prime& p = a.prime();
  const Rational ra = a.representative();
  const Rational rb = b.representative();
  const long va = a.valuation();
  const long vb = b.valuation();
  switch (op) {
    case ApproxOp::Add:
      return PAdicApprox::from_rational(ra + rb, p, std::min(a.precision(), b.precision()));
    case ApproxOp::Sub:
      return PAdicApprox::from_rational(ra - rb, p, std::min(a.precision(), b.precision()));
    case ApproxOp::Mul: {
      const long n = std::min(a.precision() + vb, b.precision() + va);
      if (a.indistinguishable_from_zero() || b.indistinguishable_from_zero())
        throw Error(ErrorKind::PrecisionExhausted, "product of a value indistinguishable from 0");
      return PAdicApprox::from_rational(ra * rb, p, n);
    }
    case ApproxOp::Div: {
      if (b.indistinguishable_from_zero())
        throw Error(ErrorKind::DivisionByZero, "divisor indistinguishable from 0 at precision " +
                                                   std::to_string(b.precision()));
      if (a.indistinguishable_from_zero())
        throw Error(ErrorKind::PrecisionExhausted, "quotient of a value indistinguishable from 0");
      const long n = va - vb + std::min(a.precision() - va, b.precision() - vb);
      return PAdicApprox::from_rational(ra / rb, p, n);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown operation");
}

}  // namespace pmcf

#include "pmcf/value.hpp"

#include <algorithm>
#include <cstdlib>
#include <type_traits>

#include "pmcf/errors.hpp"

namespace pmcf {

namespace {

/// Precision at which an exact operand can stand in for itself next to an
/// approximation `a` without being the limiting factor.
long companion_precision(const PAdicApprox& a, long exact_valuation) {
  return a.precision() + 2 * (std::labs(exact_valuation) + std::labs(a.valuation())) + 2;
}

long exact_valuation_hint(const PAdicValue& x, const Prime& p) {
  if (x.known_zero().value_or(true)) return 0;
  return valuation(x, p).value();
}

enum class Op { Add, Sub, Mul, Div };

PAdicValue combine(const PAdicValue& a, const PAdicValue& b, Op op) {
  const auto apply = [op](const auto& x, const auto& y) -> PAdicValue {
    using T = std::decay_t<decltype(x)>;
    switch (op) {
      case Op::Add: return T(x + y);
      case Op::Sub: return T(x - y);
      case Op::Mul: return T(x * y);
      case Op::Div: return T(x / y);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown op");
  };

  if (op == Op::Div && b.known_zero().value_or(false) && b.is_exact())
    throw Error(ErrorKind::DivisionByZero, "division by exact zero");

  if (a.rational() && b.rational()) {
    if (op == Op::Div && *b.rational() == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return apply(*a.rational(), *b.rational());
  }

  // Approximations absorb everything else.
  if (a.approx() || b.approx()) {
    const PAdicApprox& ref = a.approx() ? *a.approx() : *b.approx();
    const Prime& p = ref.prime();
    // An exact zero factor yields an exact zero product.
    if (op == Op::Mul && ((a.is_exact() && *a.known_zero()) || (b.is_exact() && *b.known_zero())))
      return PAdicApprox::zero(p, ref.precision());
    const auto lift = [&](const PAdicValue& x) {
      if (x.approx()) return *x.approx();
      return x.to_approx(p, companion_precision(ref, exact_valuation_hint(x, p)));
    };
    return apply(lift(a), lift(b));
  }

  // Both exact, at least one algebraic.
  const EmbeddedNumber& ref = a.embedded() ? *a.embedded() : *b.embedded();
  const auto lift = [&](const PAdicValue& x) {
    if (x.embedded()) return x.embedded()->value;
    return AlgebraicNumber::from_rational(ref.value.field(), *x.rational());
  };
  const AlgebraicNumber r = [&] {
    switch (op) {
      case Op::Add: return lift(a) + lift(b);
      case Op::Sub: return lift(a) - lift(b);
      case Op::Mul: return lift(a) * lift(b);
      case Op::Div: return lift(a) / lift(b);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown op");
  }();
  return PAdicValue(r, ref.embedding);
}

}  // namespace

std::optional<bool> PAdicValue::known_zero() const {
  if (const auto* r = rational()) return *r == 0;
  if (const auto* e = embedded()) return e->value.is_zero();
  if (approx()->indistinguishable_from_zero()) return std::nullopt;
  return false;
}

PAdicApprox PAdicValue::to_approx(const Prime& p, long precision) const {
  if (const auto* r = rational()) return PAdicApprox::from_rational(*r, p, precision);
  if (const auto* e = embedded()) {
    if (!(e->embedding.prime() == p)) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
    return embed(e->value, e->embedding, precision);
  }
  if (!(approx()->prime() == p)) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  return approx()->truncated(precision);
}

PAdicValue PAdicValue::operator-() const {
  if (const auto* r = rational()) return Rational(-*r);
  if (const auto* e = embedded()) return PAdicValue(-e->value, e->embedding);
  return -*approx();
}

PAdicValue operator+(const PAdicValue& a, const PAdicValue& b) { return combine(a, b, Op::Add); }
PAdicValue operator-(const PAdicValue& a, const PAdicValue& b) { return combine(a, b, Op::Sub); }
PAdicValue operator*(const PAdicValue& a, const PAdicValue& b) { return combine(a, b, Op::Mul); }
PAdicValue operator/(const PAdicValue& a, const PAdicValue& b) { return combine(a, b, Op::Div); }

namespace {

/// Rational value of an exact PAdicValue when it has one.
std::optional<Rational> exact_rational(const PAdicValue& x) {
  if (const auto* r = x.rational()) return *r;
  return x.embedded()->value.as_rational();
}

}  // namespace

bool exactly_equal(const PAdicValue& a, const PAdicValue& b) {
  if (!a.is_exact() || !b.is_exact())
    throw Error(ErrorKind::InvalidArgument, "exact equality is undefined for approximations");
  if (a.embedded() && b.embedded()) return a.embedded()->value == b.embedded()->value;
  const auto ra = exact_rational(a);
  const auto rb = exact_rational(b);
  return ra && rb && *ra == *rb;
}

std::size_t PAdicValue::exact_hash() const {
  if (!is_exact()) throw Error(ErrorKind::InvalidArgument, "exact hash is undefined for approximations");
  if (const auto r = exact_rational(*this)) return hash_value(*r);
  return embedded()->value.hash();
}

std::string PAdicValue::to_string() const {
  if (const auto* r = rational()) return pmcf::to_string(*r);
  if (const auto* e = embedded()) return e->value.to_string();
  return approx()->to_string();
}

Valuation valuation(const PAdicValue& x, const Prime& p) {
  if (const auto* r = x.rational()) return valuation(*r, p);
  if (const auto* e = x.embedded()) return embedded_valuation(e->value, e->embedding);
  const PAdicApprox& a = *x.approx();
  if (a.indistinguishable_from_zero())
    throw Error(ErrorKind::InsufficientPrecision, "valuation undecidable: value is O(p^" + std::to_string(a.precision()) + ")");
  return Valuation(a.valuation());
}

Rational browkin_s(const PAdicValue& x, const Prime& p) {
  if (const auto* r = x.rational()) return browkin_s(*r, p);
  if (const auto* a = x.approx()) {
    if (a->precision() < 1)
      throw Error(ErrorKind::InsufficientPrecision, "digit at exponent 0 unknown (precision " + std::to_string(a->precision()) + ")");
    return a->truncated(1).representative();
  }
  return x.to_approx(p, 1).representative();
}

DivisionResult padic_divide(const PAdicValue& sigma, const PAdicValue& tau, const Prime& p) {
  const auto tz = tau.known_zero();
  if (!tz.has_value() || *tz) throw Error(ErrorKind::DivisionByZero, "p-adic division by zero");
  const Rational q = browkin_s(sigma / tau, p);
  return {q, sigma - PAdicValue(q) * tau};
}

}  // namespace pmcf

#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "pmcf/errors.hpp"
#include "pmcf/value.hpp"

using namespace pmcf;

namespace {

Rational q(const char* s) { return parse_rational(s); }

/// x == y (mod p^n) for rationals.
bool congruent_mod(const Rational& x, const Rational& y, long p, long n) {
  const auto v = oracle::val(Rational(x - y), p);
  return !v || *v >= n;
}

}  // namespace

TEST(Approx, ValuationAndPrecision) {
  const Prime p(5);
  const auto a = PAdicApprox::from_rational(q("23/5"), p, 6);
  EXPECT_EQ(a.precision(), 6);
  EXPECT_EQ(a.valuation(), -1);
  EXPECT_EQ(a.relative_precision(), 7);
  EXPECT_TRUE(congruent_mod(a.representative(), q("23/5"), 5, 6));

  const auto z = PAdicApprox::from_rational(q("250"), p, 3);
  EXPECT_TRUE(z.indistinguishable_from_zero());
  EXPECT_EQ(z.valuation(), 3);
}

TEST(Approx, PrecisionPropagation) {
  const Prime p(7);
  const auto a = PAdicApprox::from_rational(q("14/3"), p, 10);   // v = 1
  const auto b = PAdicApprox::from_rational(q("5/49"), p, 6);    // v = -2
  EXPECT_EQ((a + b).precision(), 6);
  EXPECT_EQ((a - b).precision(), 6);
  EXPECT_EQ((a * b).precision(), std::min(10 - 2, 6 + 1));
  // v_a - v_b + min(N_a - v_a, N_b - v_b) = 3 + min(9, 8)
  EXPECT_EQ((a / b).precision(), 11);
}

TEST(Approx, ArithmeticAgreesWithExactModuloPrecision) {
  gen::Rng rng(21);
  for (long pv : {3L, 5L, 11L}) {
    const Prime p(pv);
    for (int i = 0; i < 300; ++i) {
      const Rational x = rng.padic_rational(pv, 500, 3);
      const Rational y = rng.padic_rational(pv, 500, 3);
      const auto ax = PAdicApprox::from_rational(x, p, rng.uniform(2, 12));
      const auto ay = PAdicApprox::from_rational(y, p, rng.uniform(2, 12));
      const std::pair<ApproxOp, Rational> cases[] = {
          {ApproxOp::Add, x + y}, {ApproxOp::Sub, x - y}, {ApproxOp::Mul, x * y}, {ApproxOp::Div, x / y}};
      for (const auto& [op, exact] : cases) {
        try {
          const auto r = approx_op(ax, ay, op);
          EXPECT_TRUE(congruent_mod(r.representative(), exact, pv, r.precision()));
        } catch (const Error& e) {
          EXPECT_TRUE(e.kind() == ErrorKind::PrecisionExhausted || e.kind() == ErrorKind::DivisionByZero);
        }
      }
    }
  }
}

TEST(Approx, ZeroHandling) {
  const Prime p(5);
  const auto zero = PAdicApprox::zero(p, 4);
  const auto one = PAdicApprox::from_rational(Rational(1), p, 4);
  try {
    (void)(one / zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  try {
    (void)(zero * one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionExhausted);
  }
  EXPECT_EQ((zero + one).precision(), 4);
}

TEST(Approx, TruncateAndCongruent) {
  const Prime p(3);
  const auto a = PAdicApprox::from_rational(q("10"), p, 8);
  const auto b = PAdicApprox::from_rational(q("1"), p, 2);
  EXPECT_TRUE(a.congruent(b));  // 10 = 1 (mod 9)
  EXPECT_EQ(a.truncated(2).precision(), 2);
  EXPECT_EQ(a.truncated(20).precision(), 8);
  EXPECT_FALSE(a.congruent(PAdicApprox::from_rational(q("2"), p, 8)));
}

TEST(PAdicValue, MixedBackendPromotion) {
  const Prime p(5);
  const PAdicValue r = q("3/5");
  const PAdicValue a = PAdicApprox::from_rational(q("7"), p, 6);
  const PAdicValue sum = r + a;
  ASSERT_TRUE(sum.approx());
  EXPECT_TRUE(congruent_mod(sum.approx()->representative(), q("38/5"), 5, sum.approx()->precision()));
  EXPECT_EQ((r * r).backend(), Backend::Rational);
  EXPECT_EQ(*(r * r).rational(), q("9/25"));
  EXPECT_FALSE(a.known_zero().value());
  EXPECT_FALSE(PAdicValue(PAdicApprox::zero(p, 3)).known_zero().has_value());
  EXPECT_TRUE(PAdicValue(Rational(0)).known_zero().value());
}

TEST(PAdicValue, ValuationAndBrowkinOnApprox) {
  const Prime p(5);
  const PAdicValue a = PAdicApprox::from_rational(q("23/5"), p, 4);
  EXPECT_EQ(valuation(a, p), Valuation(-1));
  EXPECT_EQ(browkin_s(a, p), q("-2/5"));
  try {
    (void)valuation(PAdicValue(PAdicApprox::zero(p, 3)), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientPrecision);
  }
  try {
    (void)browkin_s(PAdicValue(PAdicApprox::from_rational(q("1/25"), p, 0)), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientPrecision);
  }
}

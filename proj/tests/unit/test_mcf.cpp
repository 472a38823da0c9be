#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "pmcf/errors.hpp"
#include "pmcf/jacobi_perron.hpp"

using namespace pmcf;

namespace {

Rational q(const char* s) { return parse_rational(s); }

MCF from_strings(const std::vector<std::vector<const char*>>& seqs) {
  std::vector<std::vector<Rational>> out;
  for (const auto& s : seqs) {
    out.emplace_back();
    for (const char* x : s) out.back().push_back(q(x));
  }
  return MCF::from_sequences(out);
}

/// Random finite MCF with nonzero a^(m+1) (not necessarily 1).
MCF random_mcf(gen::Rng& rng, std::size_t m, std::size_t len, bool unit) {
  std::vector<Column> cols;
  for (std::size_t n = 0; n < len; ++n) {
    Column c;
    for (std::size_t k = 0; k < m; ++k) c.push_back(rng.rational(20));
    c.push_back(unit ? Rational(1) : rng.rational(20, false));
    cols.push_back(std::move(c));
  }
  return MCF::finite(m, std::move(cols));
}

std::vector<std::vector<Rational>> all_convergents(const MCF& mcf) {
  ConvergentsTable t(mcf.dim());
  std::vector<std::vector<Rational>> out;
  for (std::size_t n = 0; n < mcf.stored_length(); ++n) {
    t.push(mcf.column(n));
    try {
      out.push_back(t.convergents());
    } catch (const Error&) {
      out.push_back({});  // undefined convergent
    }
  }
  return out;
}

}  // namespace

TEST(MCF, ConstructionAndValidation) {
  const MCF f = from_strings({{"1", "-1/5"}, {"1", "-1"}, {"1", "1"}});
  EXPECT_EQ(f.dim(), 2u);
  EXPECT_TRUE(f.is_finite());
  EXPECT_EQ(f.stored_length(), 2u);
  EXPECT_EQ(f.quotient(0, 1), q("-1/5"));
  EXPECT_TRUE(f.has_unit_numerators());
  EXPECT_THROW(from_strings({{"1"}, {"0"}}), Error);               // a^(m+1) = 0
  EXPECT_THROW(from_strings({{"1", "2"}, {"1"}}), Error);          // ragged
  EXPECT_THROW(MCF::finite(2, {Column{1, 1}}), Error);             // wrong column size
  EXPECT_THROW(MCF::finite(2, {}), Error);                         // empty

  const MCF per = MCF::periodic(1, {Column{2, 1}}, {Column{q("1/3"), 1}, Column{5, 1}});
  EXPECT_FALSE(per.is_finite());
  EXPECT_EQ(per.column(6), (Column{5, 1}));
  EXPECT_EQ(per.column(7), (Column{q("1/3"), 1}));
  EXPECT_EQ(per.prefix(4).stored_length(), 4u);
}

TEST(Convergents, SeedsAndFirstColumn) {
  ConvergentsTable t(2);
  t.push(Column{q("-2/5"), 1, 1});
  EXPECT_EQ(t.index(), 0);
  EXPECT_EQ(t.numerator(0), q("-2/5"));
  EXPECT_EQ(t.numerator(1), 1);
  EXPECT_EQ(t.numerator(2), 1);
  // lags 1..3 are the seeds A_{-1}, A_{-2}, A_{-3} = e_1, e_2, e_3
  EXPECT_EQ(t.numerator(0, 1), 1);
  EXPECT_EQ(t.numerator(1, 2), 1);
  EXPECT_EQ(t.numerator(2, 3), 1);
  EXPECT_EQ(t.numerator(0, 2), 0);
  EXPECT_THROW((void)t.numerator(0, 4), Error);
}

TEST(Convergents, FinalConvergentOfReferenceExpansion) {
  const MCF f = from_strings({{"-2/5", "6/5", "6/5", "4/5"}, {"1", "1", "-1", "-1"}, {"1", "1", "1", "1"}});
  EXPECT_EQ(all_convergents(f).back(), (std::vector<Rational>{q("23/5"), q("14/19")}));
}

TEST(Convergents, MatchMatrixProductOracle) {
  gen::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const MCF f = random_mcf(rng, m, static_cast<std::size_t>(rng.uniform(1, 7)), i % 2 == 0);
    ConvergentsTable t(m, true);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t n = 0; n < f.stored_length(); ++n) {
      t.push(f.column(n));
      cols.push_back(f.column(n));
      oracle::Mat b(m + 1, std::vector<Rational>(m + 1, 0));
      for (std::size_t k = 0; k <= m; ++k) b[k][k] = 1;
      for (const auto& c : cols) b = oracle::mat_mul(b, oracle::step_matrix(c));
      for (std::size_t k = 0; k <= m; ++k) EXPECT_EQ(t.numerator(k), b[k][0]);
      const auto prod = convergent_matrix_product(f, n);
      for (std::size_t r = 0; r <= m; ++r)
        for (std::size_t c = 0; c <= m; ++c) EXPECT_EQ(prod(r, c), b[r][c]);
    }
    EXPECT_EQ(t.history().size(), f.stored_length() + m + 1);
  }
}

TEST(Convergents, ZeroDenominator) {
  ConvergentsTable t(1);
  t.push(Column{1, 1});
  t.push(Column{0, 1});  // A_1^(2) = 0*A_0^(2) + 1*A_{-1}^(2) = 0
  try {
    (void)t.convergent(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominatorConvergent);
  }
}

TEST(Determinant, SingleMatrixAndOracle) {
  for (std::size_t m = 1; m <= 4; ++m) {
    Column c(m + 1, Rational(1));
    c[m] = q("3/7");
    const auto d = determinant_check(MCF::finite(m, {c}), 0);
    // Expanding along the last row: (-1)^m a^(m+1).
    EXPECT_EQ(d.det, (m % 2 ? -1 : 1) * q("3/7"));
    EXPECT_TRUE(d.matches);
  }
  gen::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const MCF f = random_mcf(rng, m, static_cast<std::size_t>(rng.uniform(1, 9)), false);
    const std::size_t n = f.stored_length() - 1;
    oracle::Mat b(m + 1, std::vector<Rational>(m + 1, 0));
    for (std::size_t k = 0; k <= m; ++k) b[k][k] = 1;
    for (std::size_t j = 0; j <= n; ++j) b = oracle::mat_mul(b, oracle::step_matrix(f.column(j)));
    const auto d = determinant_check(f, n);
    EXPECT_EQ(d.det, oracle::det(b));
    EXPECT_TRUE(d.matches);
  }
}

TEST(Conditions, GeneralAndUnitForms) {
  const Prime p(5);
  // n = 1: |a^(1)| = 5 > 1, |a^(2)| = 1 < 5 -> ok; n = 2: |a^(1)| = 1, fails the unit form.
  const MCF f = from_strings({{"1", "1/5", "2"}, {"3", "1", "1"}, {"1", "1", "1"}});
  const auto unit = check_convergence_conditions(f, 2, true, p);
  EXPECT_FALSE(unit.ok());
  EXPECT_EQ(unit.first_violation, std::optional<std::size_t>(2));
  EXPECT_TRUE(unit.indices[0].first_ok && unit.indices[0].others_ok);
  EXPECT_FALSE(unit.indices[1].first_ok);
  // General form also requires |a^(3)| < |a^(1)|: |1| < |1/5| holds at n = 1, |1| < |2| fails at n = 2.
  const auto general = check_convergence_conditions(f, 2, false, p);
  EXPECT_TRUE(general.indices[1].first_ok);
  EXPECT_FALSE(general.indices[1].others_ok);
  EXPECT_EQ(general.indices[1].failing, std::optional<std::size_t>(1));
}

TEST(Rescale, PreservesConvergents) {
  gen::Rng rng(33);
  for (int i = 0; i < 80; ++i) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const MCF f = random_mcf(rng, m, static_cast<std::size_t>(rng.uniform(1, 8)), false);
    std::vector<Rational> w;
    for (std::size_t n = 0; n < f.stored_length(); ++n) w.push_back(rng.rational(9, false));
    EXPECT_EQ(all_convergents(rescale(f, w)), all_convergents(f));
    const MCF d = dehomogenize(f);
    EXPECT_TRUE(d.has_unit_numerators());
    EXPECT_EQ(all_convergents(d), all_convergents(f));
  }
  const MCF f = from_strings({{"1", "2"}, {"3", "4"}});
  EXPECT_THROW((void)rescale(f, {q("1"), q("0")}), Error);
  EXPECT_EQ(dehomogenizing_weights(f), (std::vector<Rational>{q("3"), q("4")}));
}

TEST(Evaluate, KnownValues) {
  EXPECT_EQ(evaluate_finite(from_strings({{"1", "-1/5"}, {"1", "-1"}, {"1", "1"}})),
            (std::vector<Rational>{q("6"), q("-4")}));
  EXPECT_EQ(evaluate_finite(from_strings({{"1", "4/5", "12/5"}, {"0", "1", "0"}, {"1", "1", "1"}})),
            (std::vector<Rational>{q("133/48"), q("5/4")}));
  // Single column: the value is a_0^(1) / a_0^(2).
  EXPECT_EQ(evaluate_finite(from_strings({{"7/3"}, {"1"}})), (std::vector<Rational>{q("7/3")}));
  EXPECT_EQ(evaluate_finite(from_strings({{"7/3"}, {"2"}})), (std::vector<Rational>{q("7/6")}));
}

TEST(Evaluate, AgreesWithOracleConvergent) {
  gen::Rng rng(34);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const MCF f = random_mcf(rng, m, static_cast<std::size_t>(rng.uniform(1, 6)), i % 2 == 0);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t n = 0; n < f.stored_length(); ++n) cols.push_back(f.column(n));
    try {
      const auto v = evaluate_finite(f);
      EXPECT_EQ(v, oracle::convergent(cols));
      ++checked;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ZeroIntermediate || e.kind() == ErrorKind::ZeroDenominatorConvergent)
          << e.what();
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(StrongConvergence, ReferenceExpansion) {
  const Prime p(5);
  const MCF f = from_strings({{"-2/5", "6/5", "6/5", "4/5"}, {"1", "1", "-1", "-1"}, {"1", "1", "1", "1"}});
  const auto seq = strong_convergence_sequence(f, {q("23/5"), q("14/19")}, p);
  EXPECT_TRUE(seq.recurrence_verified);
  EXPECT_TRUE(seq.norms_strictly_decrease());
  for (const auto& v : seq.at(3)) EXPECT_TRUE(v.known_zero().value());
  EXPECT_TRUE(denominator_norm_identity(f, 3, p));
}

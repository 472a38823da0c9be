#include "pmcf/jacobi_perron.hpp"

#include <algorithm>
#include <unordered_map>

#include "pmcf/errors.hpp"

namespace pmcf {

DigitMap browkin_digit_map() {
  return [](const PAdicValue& gamma, std::size_t, std::size_t, const Prime& p) { return browkin_s(gamma, p); };
}

void validate_digit(const PAdicValue& gamma, const Rational& s, const Prime& p) {
  const auto zero = gamma.known_zero();
  if (zero.value_or(false)) {
    if (s != 0) throw Error(ErrorKind::DigitMapViolation, "s(0) must be 0");
    return;
  }
  if (!zero.has_value()) {
    // gamma = O(p^N): a nonzero s cannot be checked against |gamma|.
    if (s != 0) throw Error(ErrorKind::InsufficientPrecision, "digit map applied to an undecidable value");
    return;
  }
  // |gamma - s| < 1, and |gamma - s| < |gamma| whenever s != 0.
  const long bound = s != 0 ? std::max(valuation(gamma, p).value(), 0L) : 0L;
  const PAdicValue diff = gamma - PAdicValue(s);
  const auto diff_zero = diff.known_zero();
  if (diff_zero.value_or(false)) return;
  if (!diff_zero.has_value()) {
    if (diff.approx()->precision() > bound) return;
    throw Error(ErrorKind::InsufficientPrecision, "cannot verify |gamma - s(gamma)| at this precision");
  }
  if (valuation(diff, p).value() <= bound)
    throw Error(ErrorKind::DigitMapViolation,
                "|gamma - s(gamma)| too large for gamma = " + gamma.to_string() + ", s = " + to_string(s));
}

namespace {

Rational apply_digit(const PAdicValue& gamma, std::size_t k, std::size_t n, const Prime& p, const DigitMap& digits) {
  if (!digits) return browkin_s(gamma, p);
  Rational s = digits(gamma, k, n, p);
  validate_digit(gamma, s, p);
  return s;
}

/// factor * diff, keeping an approximate zero difference as a zero of the
/// precision the product would have.
PAdicValue scaled_difference(const PAdicValue& factor, const PAdicValue& diff, const Prime& p) {
  if (diff.approx() && diff.approx()->indistinguishable_from_zero()) {
    const long shift = factor.approx() ? factor.approx()->valuation() : valuation(factor, p).value();
    return PAdicApprox::zero(p, diff.approx()->precision() + shift);
  }
  return factor * diff;
}

}  // namespace

JPStep jp_step(const JPState& state, const DigitMap& digits) {
  const std::size_t m = state.dim();
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  JPStep out;
  for (std::size_t k = 0; k < m; ++k) out.quotients.push_back(apply_digit(state.alpha[k], k, state.n, state.p, digits));

  const PAdicValue last = state.alpha[m - 1] - PAdicValue(out.quotients[m - 1]);
  const auto zero = last.known_zero();
  if (!zero.has_value())
    throw Error(ErrorKind::InsufficientPrecision,
                "alpha_" + std::to_string(state.n) + "^(m) - a_" + std::to_string(state.n) +
                    "^(m) is indistinguishable from 0");
  if (*zero) return out;

  JPState next{state.p, {}, state.n + 1};
  next.alpha.reserve(m);
  next.alpha.push_back(PAdicValue(Rational(1)) / last);
  for (std::size_t k = 1; k < m; ++k) {
    const PAdicValue diff = state.alpha[k - 1] - PAdicValue(out.quotients[k - 1]);
    next.alpha.push_back(scaled_difference(next.alpha.front(), diff, state.p));
  }
  out.next = std::move(next);
  return out;
}

std::string to_string(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Finite: return "finite";
    case ExpansionStatus::Truncated: return "truncated";
    case ExpansionStatus::Periodic: return "periodic";
  }
  return "unknown";
}

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<PAdicValue>& t) const {
    std::size_t seed = t.size();
    for (const auto& x : t) hash_combine(seed, x.exact_hash());
    return seed;
  }
};

struct TupleEqual {
  bool operator()(const std::vector<PAdicValue>& a, const std::vector<PAdicValue>& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!exactly_equal(a[i], b[i])) return false;
    return true;
  }
};

Column unit_column(const std::vector<Rational>& quotients) {
  Column c = quotients;
  c.emplace_back(1);
  return c;
}

/// alpha_0 reconstructed from alpha_n and A_{n-1}, ..., A_{n-m-1}; `table`
/// must hold columns up to n-1.
void check_identity(const std::vector<PAdicValue>& inputs, const JPState& state, const ConvergentsTable& table) {
  const std::size_t m = state.dim();
  PAdicValue den = Rational(0);
  std::vector<PAdicValue> num(m, PAdicValue(Rational(0)));
  for (std::size_t j = 0; j <= m; ++j) {
    const PAdicValue weight = j < m ? state.alpha[j] : PAdicValue(Rational(1));
    for (std::size_t k = 0; k < m; ++k) num[k] = num[k] + weight * PAdicValue(table.numerator(k, j));
    den = den + weight * PAdicValue(table.numerator(m, j));
  }
  for (std::size_t k = 0; k < m; ++k)
    if (!exactly_equal(num[k] / den, inputs[k]))
      throw Error(ErrorKind::VerificationFailed,
                  "alpha_0 reconstruction failed at step " + std::to_string(state.n));
}

}  // namespace

ExpansionResult jp_expand(const std::vector<PAdicValue>& inputs, const Prime& p, const JPOptions& options) {
  if (inputs.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one input");
  if (options.max_steps < 1) throw Error(ErrorKind::InvalidArgument, "max_steps must be >= 1");
  const std::size_t m = inputs.size();
  const bool exact = std::all_of(inputs.begin(), inputs.end(), [](const auto& x) { return x.is_exact(); });
  const bool detect = options.detect_period && exact;
  const bool verify = options.verify_identity && exact;

  std::unordered_map<std::vector<PAdicValue>, std::size_t, TupleHash, TupleEqual> seen;
  std::vector<Column> columns;
  ConvergentsTable table(m);
  JPState state{p, inputs, 0};

  for (std::size_t step = 0; step < options.max_steps; ++step) {
    if (detect) {
      const auto [it, inserted] = seen.emplace(state.alpha, state.n);
      if (!inserted) {
        const std::size_t start = it->second;
        std::vector<Column> pre(columns.begin(), columns.begin() + static_cast<long>(start));
        std::vector<Column> cyc(columns.begin() + static_cast<long>(start), columns.end());
        return {MCF::periodic(m, std::move(pre), std::move(cyc)), ExpansionStatus::Periodic, step, start,
                state.n - start};
      }
    }
    if (verify && state.n >= 1) check_identity(inputs, state, table);
    JPStep r = jp_step(state, options.digit_map);
    columns.push_back(unit_column(r.quotients));
    if (verify) table.push(columns.back());
    if (!r.next) return {MCF::finite(m, std::move(columns)), ExpansionStatus::Finite, step + 1, 0, 0};
    state = std::move(*r.next);
  }
  return {MCF::finite(m, std::move(columns)), ExpansionStatus::Truncated, options.max_steps, 0, 0};
}

EuclidResult euclid_expand(const std::vector<PAdicValue>& x, const Prime& p, std::size_t max_steps) {
  if (x.size() < 2) throw Error(ErrorKind::InvalidArgument, "need m+1 >= 2 coordinates");
  const std::size_t m = x.size() - 1;
  const auto entry_zero = x.back().known_zero();
  if (!entry_zero.has_value() || *entry_zero)
    throw Error(ErrorKind::DivisionByZero, "last coordinate of the Euclidean tuple is zero");

  EuclidResult out{{MCF::finite(m, {Column(m + 1, Rational(1))}), ExpansionStatus::Truncated}, {EuclideanState{x}}};
  std::vector<Column> columns;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto& cur = out.trace.back().x;
    std::vector<Rational> a;
    for (std::size_t k = 0; k < m; ++k) a.push_back(browkin_s(cur[k] / cur[m], p));
    EuclideanState next;
    next.x.push_back(cur[m]);
    for (std::size_t k = 1; k <= m; ++k) next.x.push_back(cur[k - 1] - PAdicValue(a[k - 1]) * cur[m]);
    columns.push_back(unit_column(a));
    const auto zero = next.x.back().known_zero();
    if (!zero.has_value())
      throw Error(ErrorKind::InsufficientPrecision, "x^(m+1) indistinguishable from 0");
    out.trace.push_back(std::move(next));
    if (*zero) {
      out.expansion = {MCF::finite(m, std::move(columns)), ExpansionStatus::Finite, step + 1, 0, 0};
      return out;
    }
  }
  out.expansion = {MCF::finite(m, std::move(columns)), ExpansionStatus::Truncated, max_steps, 0, 0};
  return out;
}

bool euclid_norms_decrease(const std::vector<EuclideanState>& trace, const Prime& p) {
  for (std::size_t n = 1; n < trace.size(); ++n)
    if (!norm_less(valuation(trace[n].x.back(), p), valuation(trace[n - 1].x.back(), p))) return false;
  return true;
}

std::vector<Integer> integer_lift(const std::vector<Rational>& alphas) {
  Integer l = 1;
  for (const auto& a : alphas) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
  std::vector<Integer> out;
  for (const auto& a : alphas) out.push_back(a.get_num() * (l / a.get_den()));
  out.push_back(l);
  return out;
}

std::vector<Rational> verify_termination_dependence(const ExpansionResult& result,
                                                    const std::vector<PAdicValue>& inputs) {
  if (result.status != ExpansionStatus::Finite)
    throw Error(ErrorKind::InvalidArgument, "dependence check needs a finite expansion");
  const EmbeddedNumber* ref = nullptr;
  for (const auto& x : inputs) {
    if (!x.is_exact()) throw Error(ErrorKind::InvalidArgument, "dependence check needs exact inputs");
    if (x.embedded()) ref = x.embedded();
  }
  std::optional<std::vector<Rational>> dep;
  if (!ref) {
    std::vector<Rational> values;
    for (const auto& x : inputs) values.push_back(*x.rational());
    values.emplace_back(1);
    dep = rational_linear_dependence(values);
  } else {
    std::vector<AlgebraicNumber> values;
    for (const auto& x : inputs)
      values.push_back(x.embedded() ? x.embedded()->value : AlgebraicNumber::from_rational(ref->value.field(), *x.rational()));
    values.push_back(AlgebraicNumber::from_rational(ref->value.field(), 1));
    dep = rational_linear_dependence(values);
  }
  if (!dep) throw Error(ErrorKind::VerificationFailed, "finite expansion of Q-linearly independent inputs");
  return *dep;
}

ReexpandReport reexpand_check(const MCF& mcf, const Prime& p) {
  ReexpandReport report;
  const auto fail = [&report](std::string why) {
    if (!report.failed_hypothesis) report.failed_hypothesis = std::move(why);
  };
  if (!mcf.is_finite()) throw Error(ErrorKind::InvalidArgument, "reexpand_check needs a finite MCF");
  if (!mcf.has_unit_numerators()) fail("unit numerators");
  for (std::size_t n = 0; n < mcf.stored_length(); ++n)
    for (std::size_t k = 0; k < mcf.dim(); ++k)
      if (browkin_s(mcf.quotient(k, n), p) != mcf.quotient(k, n)) fail("quotients in Z[1/p] with |q| < p/2");
  if (mcf.stored_length() > 1 && !check_convergence_conditions(mcf, mcf.stored_length() - 1, true, p).ok())
    fail("unit-numerator convergence conditions");

  report.value = evaluate_finite(mcf);
  std::vector<PAdicValue> inputs(report.value.begin(), report.value.end());
  JPOptions opts;
  opts.detect_period = false;
  opts.max_steps = std::max<std::size_t>(4 * mcf.stored_length() + 16, 10'000);
  report.reexpansion = jp_expand(inputs, p, opts);
  report.matches =
      report.reexpansion->status == ExpansionStatus::Finite && report.reexpansion->mcf == mcf;
  return report;
}

}  // namespace pmcf

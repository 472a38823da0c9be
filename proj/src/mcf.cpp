#include "pmcf/mcf.hpp"

#include <algorithm>

#include "pmcf/errors.hpp"

namespace pmcf {

MCF::MCF(std::size_t m, std::vector<Column> prefix, std::vector<Column> period)
    : m_(m), prefix_(std::move(prefix)), period_(std::move(period)) {
  validate();
}

void MCF::validate() const {
  if (m_ < 1) throw Error(ErrorKind::InvalidArgument, "MCF dimension must be >= 1");
  if (prefix_.empty() && period_.empty()) throw Error(ErrorKind::InvalidArgument, "MCF needs at least one column");
  const auto check = [this](const Column& c) {
    if (c.size() != m_ + 1) throw Error(ErrorKind::InvalidArgument, "column must have m+1 entries");
    if (c.back() == 0) throw Error(ErrorKind::InvalidArgument, "a_n^(m+1) must be nonzero");
  };
  std::for_each(prefix_.begin(), prefix_.end(), check);
  std::for_each(period_.begin(), period_.end(), check);
}

MCF MCF::finite(std::size_t m, std::vector<Column> columns) { return MCF(m, std::move(columns), {}); }

MCF MCF::periodic(std::size_t m, std::vector<Column> preperiod, std::vector<Column> period) {
  if (period.empty()) throw Error(ErrorKind::InvalidArgument, "period must be non-empty");
  return MCF(m, std::move(preperiod), std::move(period));
}

MCF MCF::from_sequences(const std::vector<std::vector<Rational>>& sequences) {
  if (sequences.size() < 2) throw Error(ErrorKind::InvalidArgument, "need m+1 >= 2 sequences");
  const std::size_t len = sequences.front().size();
  for (const auto& s : sequences)
    if (s.size() != len) throw Error(ErrorKind::InvalidArgument, "sequences differ in length");
  std::vector<Column> cols(len, Column(sequences.size()));
  for (std::size_t k = 0; k < sequences.size(); ++k)
    for (std::size_t n = 0; n < len; ++n) cols[n][k] = sequences[k][n];
  return finite(sequences.size() - 1, std::move(cols));
}

const Column& MCF::column(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  if (period_.empty()) throw Error(ErrorKind::InvalidArgument, "index past the end of a finite MCF");
  return period_[(n - prefix_.size()) % period_.size()];
}

std::vector<std::vector<Rational>> MCF::sequences() const {
  std::vector<std::vector<Rational>> seq(m_ + 1);
  for (std::size_t n = 0; n < stored_length(); ++n)
    for (std::size_t k = 0; k <= m_; ++k) seq[k].push_back(column(n)[k]);
  return seq;
}

MCF MCF::prefix(std::size_t count) const {
  if (is_finite() && count > prefix_.size()) throw Error(ErrorKind::InvalidArgument, "prefix longer than the MCF");
  std::vector<Column> cols;
  cols.reserve(count);
  for (std::size_t n = 0; n < count; ++n) cols.push_back(column(n));
  return finite(m_, std::move(cols));
}

bool MCF::has_unit_numerators() const {
  const auto unit = [](const Column& c) { return c.back() == 1; };
  return std::all_of(prefix_.begin(), prefix_.end(), unit) && std::all_of(period_.begin(), period_.end(), unit);
}

ConvergentsTable::ConvergentsTable(std::size_t m, bool record_history) : m_(m), record_(record_history) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  // window_[lag] = A_{-1-lag}; A_{-j}^(i) = delta_ij.
  for (std::size_t j = 1; j <= m + 1; ++j) {
    Column c(m + 1);
    c[j - 1] = 1;
    window_.push_back(std::move(c));
  }
  if (record_)
    for (auto it = window_.rbegin(); it != window_.rend(); ++it) history_.push_back(*it);
}

void ConvergentsTable::push(const Column& a) {
  if (a.size() != m_ + 1) throw Error(ErrorKind::InvalidArgument, "column must have m+1 entries");
  if (a.back() == 0) throw Error(ErrorKind::InvalidArgument, "a_n^(m+1) must be nonzero");
  Column next(m_ + 1);
  for (std::size_t j = 0; j <= m_; ++j) {
    if (a[j] == 0) continue;
    const Column& prev = window_[j];  // A_{n-(j+1)}
    for (std::size_t i = 0; i <= m_; ++i) next[i] += a[j] * prev[i];
  }
  window_.push_front(std::move(next));
  if (window_.size() > m_ + 2) window_.pop_back();
  ++n_;
  if (record_) history_.push_back(window_.front());
}

const Rational& ConvergentsTable::numerator(std::size_t k, std::size_t lag) const {
  if (k > m_ || lag >= window_.size()) throw Error(ErrorKind::InvalidArgument, "convergent index out of window");
  return window_[lag][k];
}

Rational ConvergentsTable::convergent(std::size_t k) const {
  const Rational& den = window_.front()[m_];
  if (den == 0)
    throw Error(ErrorKind::ZeroDenominatorConvergent, "A_" + std::to_string(n_) + "^(m+1) = 0");
  return window_.front()[k] / den;
}

std::vector<Rational> ConvergentsTable::convergents() const {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < m_; ++k) out.push_back(convergent(k));
  return out;
}

const std::vector<Column>& ConvergentsTable::history() const {
  if (!record_) throw Error(ErrorKind::InvalidArgument, "table was not recording");
  return history_;
}

RationalMatrix convergent_matrix_product(const MCF& mcf, std::size_t n) {
  const std::size_t size = mcf.dim() + 1;
  RationalMatrix prod = RationalMatrix::identity(size);
  for (std::size_t t = 0; t <= n; ++t) {
    RationalMatrix a(size, size);
    const Column& c = mcf.column(t);
    for (std::size_t i = 0; i < size; ++i) {
      a(i, 0) = c[i];
      if (i + 1 < size) a(i, i + 1) = 1;
    }
    prod = prod * a;
  }
  return prod;
}

DeterminantCheck determinant_check(const MCF& mcf, std::size_t n) {
  const Rational det = determinant(convergent_matrix_product(mcf, n));
  const std::size_t m = mcf.dim();
  Rational expected = ((n + 1) * m) % 2 == 0 ? 1 : -1;  // det A_j = (-1)^m a_j^(m+1)
  for (std::size_t j = 0; j <= n; ++j) expected *= mcf.column(j)[m];
  return {det, expected, det == expected};
}

ConditionReport check_convergence_conditions(const MCF& mcf, std::size_t upto, bool unit_numerators,
                                             const Prime& p) {
  ConditionReport report{unit_numerators, {}, std::nullopt};
  const std::size_t m = mcf.dim();
  const std::size_t last_other = unit_numerators ? m - 1 : m;  // 0-based coordinate bound
  for (std::size_t n = 1; n <= upto; ++n) {
    const Column& c = mcf.column(n);
    const Valuation v1 = valuation(c[0], p);
    ConditionAtIndex at{n, false, true, std::nullopt};
    // |a| >= 1 iff v(a) <= 0; |a| > 1 iff v(a) < 0.
    at.first_ok = unit_numerators ? v1 < Valuation(0) : v1 <= Valuation(0);
    for (std::size_t k = 1; k <= last_other; ++k) {
      if (!norm_less(valuation(c[k], p), v1)) {
        at.others_ok = false;
        at.failing = k;
        break;
      }
    }
    if (!(at.first_ok && at.others_ok) && !report.first_violation) report.first_violation = n;
    report.indices.push_back(at);
  }
  return report;
}

MCF rescale(const MCF& mcf, const std::vector<Rational>& w) {
  if (!mcf.is_finite()) throw Error(ErrorKind::InvalidArgument, "rescale needs a finite MCF (use prefix())");
  const std::size_t len = mcf.stored_length();
  if (w.size() < len) throw Error(ErrorKind::InvalidArgument, "not enough weights");
  for (std::size_t n = 0; n < len; ++n)
    if (w[n] == 0) throw Error(ErrorKind::ZeroWeight, "w_" + std::to_string(n) + " = 0");
  const auto weight = [&w](long k) -> Rational { return k < 0 ? Rational(1) : w[static_cast<std::size_t>(k)]; };
  std::vector<Column> cols;
  for (std::size_t n = 0; n < len; ++n) {
    Column c = mcf.column(n);
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] *= weight(static_cast<long>(n) - static_cast<long>(k + 1)) / w[n];
    cols.push_back(std::move(c));
  }
  return MCF::finite(mcf.dim(), std::move(cols));
}

std::vector<Rational> dehomogenizing_weights(const MCF& mcf) {
  const std::size_t len = mcf.stored_length();
  const std::size_t stride = mcf.dim() + 1;
  std::vector<Rational> w(len);
  for (std::size_t n = 0; n < len; ++n) {
    const Rational prev = n >= stride ? w[n - stride] : Rational(1);
    w[n] = mcf.column(n)[mcf.dim()] * prev;
  }
  return w;
}

MCF dehomogenize(const MCF& mcf) { return rescale(mcf, dehomogenizing_weights(mcf)); }

std::vector<Rational> evaluate_finite(const MCF& mcf) {
  if (!mcf.is_finite()) throw Error(ErrorKind::InvalidArgument, "evaluate_finite needs a finite MCF");
  const std::size_t m = mcf.dim();
  const std::size_t r = mcf.stored_length() - 1;

  // Route 1: backward substitution. alpha holds (alpha_n^(1..m), a_n^(m+1)).
  Column alpha = mcf.column(r);
  for (std::size_t n = r; n-- > 0;) {
    const Column& a = mcf.column(n);
    if (alpha[0] == 0)
      throw Error(ErrorKind::ZeroIntermediate, "alpha_" + std::to_string(n + 1) + "^(1) = 0");
    Column prev(m + 1);
    for (std::size_t k = 0; k < m; ++k) prev[k] = a[k] + alpha[k + 1] / alpha[0];
    prev[m] = a[m];
    alpha = std::move(prev);
  }
  // Homogeneous coordinates: the value is alpha_0^(i) / alpha_0^(m+1).
  for (std::size_t k = 0; k < m; ++k) alpha[k] /= alpha[m];
  alpha.pop_back();

  // Route 2: final convergent.
  ConvergentsTable table(m);
  for (std::size_t n = 0; n <= r; ++n) table.push(mcf.column(n));
  const auto conv = table.convergents();
  if (conv != alpha) throw Error(ErrorKind::InternalMismatch, "backward evaluation disagrees with final convergent");
  return alpha;
}

bool denominator_norm_identity(const MCF& mcf, std::size_t upto, const Prime& p) {
  ConvergentsTable table(mcf.dim());
  Valuation product(0);
  table.push(mcf.column(0));
  for (std::size_t n = 1; n <= upto; ++n) {
    table.push(mcf.column(n));
    product = product + valuation(mcf.column(n)[0], p);
    if (valuation(table.numerator(mcf.dim()), p) != product) return false;
  }
  return true;
}

bool StrongConvergenceSeq::norms_strictly_decrease() const {
  const long last = static_cast<long>(values.size()) - static_cast<long>(m) - 2;
  for (long n = 1; n <= last; ++n)
    for (std::size_t k = 0; k < m; ++k) {
      Valuation best = Valuation::infinity();
      for (long j = 1; j <= static_cast<long>(m) + 1; ++j) best = std::min(best, valuation_at(n - j)[k]);
      // |V_n| < max |V_{n-j}|  <=>  v(V_n) > min v(V_{n-j}); an all-zero window forces V_n = 0.
      const Valuation vn = valuation_at(n)[k];
      if (best.is_infinite() ? !vn.is_infinite() : !(vn > best)) return false;
    }
  return true;
}

StrongConvergenceSeq strong_convergence_sequence(const MCF& mcf, const std::vector<PAdicValue>& targets,
                                                 const Prime& p) {
  const std::size_t m = mcf.dim();
  if (targets.size() != m) throw Error(ErrorKind::InvalidArgument, "need m targets");
  ConvergentsTable table(m, true);
  for (std::size_t n = 0; n < mcf.stored_length(); ++n) table.push(mcf.column(n));
  StrongConvergenceSeq seq{m, {}, {}, true};
  for (const Column& a_col : table.history()) {
    std::vector<PAdicValue> v;
    std::vector<Valuation> vals;
    for (std::size_t k = 0; k < m; ++k) {
      v.push_back(PAdicValue(a_col[k]) - targets[k] * PAdicValue(a_col[m]));
      if (!v.back().known_zero().has_value())
        throw Error(ErrorKind::PrecisionExhausted, "V_n indistinguishable from 0 at the targets' precision");
      vals.push_back(valuation(v.back(), p));
    }
    seq.values.push_back(std::move(v));
    seq.valuations.push_back(std::move(vals));
  }
  const bool exact = std::all_of(targets.begin(), targets.end(), [](const auto& t) { return t.is_exact(); });
  if (!exact) {
    seq.recurrence_verified = false;
    return seq;
  }
  for (long n = 0; n < static_cast<long>(mcf.stored_length()); ++n) {
    const Column& a = mcf.column(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < m; ++k) {
      PAdicValue rhs = Rational(0);
      for (std::size_t j = 0; j <= m; ++j) rhs = rhs + PAdicValue(a[j]) * seq.at(n - static_cast<long>(j) - 1)[k];
      if (!exactly_equal(rhs, seq.at(n)[k])) seq.recurrence_verified = false;
    }
  }
  return seq;
}

}  // namespace pmcf

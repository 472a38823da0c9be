#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "pmcf/linalg.hpp"
#include "pmcf/padic.hpp"
#include "pmcf/rational.hpp"
#include "pmcf/value.hpp"

namespace pmcf {

/// Partial quotients at one index n: (a_n^(1), ..., a_n^(m+1)).
/// Coordinates are 0-based in code: column[k] is a_n^(k+1).
using Column = std::vector<Rational>;

/// A multidimensional continued fraction of dimension m: either a finite
/// list of columns (indices 0..r) or an eventually periodic infinite one.
///
/// Every a_n^(m+1) must be nonzero. The algorithmic layer always produces
/// a_n^(m+1) = 1; the formal layer also admits general numerators, including
/// a_0^(m+1) != 1 as produced by rescale() with w_0 != 1.
class MCF {
 public:
  static MCF finite(std::size_t m, std::vector<Column> columns);
  static MCF periodic(std::size_t m, std::vector<Column> preperiod, std::vector<Column> period);
  /// From sequences a[k][n] = a_n^(k+1), k = 0..m; all sequences share a length.
  static MCF from_sequences(const std::vector<std::vector<Rational>>& sequences);

  std::size_t dim() const noexcept { return m_; }
  bool is_finite() const noexcept { return period_.empty(); }
  /// Finite: r + 1. Periodic: preperiod + period (one full cycle stored).
  std::size_t stored_length() const noexcept { return prefix_.size() + period_.size(); }
  std::size_t preperiod() const noexcept { return prefix_.size(); }
  std::size_t period() const noexcept { return period_.size(); }

  /// Column n; periodic MCFs are unbounded.
  const Column& column(std::size_t n) const;
  const Rational& quotient(std::size_t k, std::size_t n) const { return column(n)[k]; }

  /// Stored sequences a[k][n] (one cycle for periodic MCFs).
  std::vector<std::vector<Rational>> sequences() const;

  /// The first `count` columns as a finite MCF.
  MCF prefix(std::size_t count) const;

  bool has_unit_numerators() const;

  friend bool operator==(const MCF&, const MCF&) = default;

 private:
  MCF(std::size_t m, std::vector<Column> prefix, std::vector<Column> period);
  void validate() const;

  std::size_t m_;
  std::vector<Column> prefix_;
  std::vector<Column> period_;
};

/// Rolling numerators/denominators A_n^(i) of the convergents, seeded with
/// A_{-j}^(i) = delta_ij, advanced by A_n^(i) = sum_j a_n^(j) A_{n-j}^(i).
/// Keeps the current column plus the m+1 preceding ones; the full history is
/// kept only when recording is requested.
class ConvergentsTable {
 public:
  explicit ConvergentsTable(std::size_t m, bool record_history = false);

  std::size_t dim() const noexcept { return m_; }
  /// Index n of the most recent column; -1 before any push.
  long index() const noexcept { return n_; }

  void push(const Column& a);

  /// A_{n-lag}^(k+1) for lag in [0, m+1].
  const Rational& numerator(std::size_t k, std::size_t lag = 0) const;

  /// Q_n^(k+1); throws ZeroDenominatorConvergent when A_n^(m+1) = 0.
  Rational convergent(std::size_t k) const;
  std::vector<Rational> convergents() const;

  /// Columns A_n for n = -(m+1) .. index() (recording tables only).
  const std::vector<Column>& history() const;

 private:
  std::size_t m_;
  long n_ = -1;
  std::deque<Column> window_;  // window_[lag] = A_{n-lag}
  bool record_;
  std::vector<Column> history_;
};

struct DeterminantCheck {
  Rational det;
  Rational expected;
  bool matches;
};

/// det(A_0 ... A_n) computed from the matrix product and compared with
/// (-1)^{(n+1)m} prod_{j<=n} a_j^(m+1), since each factor has det (-1)^m a_j^(m+1).
DeterminantCheck determinant_check(const MCF& mcf, std::size_t n);

/// The (m+1)x(m+1) matrix product A_0 ... A_n; its columns are A_n .. A_{n-m}.
RationalMatrix convergent_matrix_product(const MCF& mcf, std::size_t n);

struct ConditionAtIndex {
  std::size_t n;
  bool first_ok;                       // |a_n^(1)| >= 1, or > 1 in unit form
  bool others_ok;                      // |a_n^(i)| < |a_n^(1)| for the relevant i
  std::optional<std::size_t> failing;  // 0-based coordinate of the first failure in others
};

struct ConditionReport {
  bool unit_numerators;
  std::vector<ConditionAtIndex> indices;  // n = 1 .. upto
  std::optional<std::size_t> first_violation;

  bool ok() const noexcept { return !first_violation.has_value(); }
};

/// Convergence conditions on a_n for 1 <= n <= upto. The general form checks
/// |a_n^(1)| >= 1 and |a_n^(i)| < |a_n^(1)| for i = 2..m+1; the unit-numerator
/// form checks |a_n^(1)| > 1 and i = 2..m.
ConditionReport check_convergence_conditions(const MCF& mcf, std::size_t upto, bool unit_numerators,
                                             const Prime& p);

/// a~_n^(i) = (w_{n-i} / w_n) a_n^(i), w_k = 1 for k < 0. Convergents are
/// unchanged and A_n = w_n A~_n. Throws ZeroWeight.
MCF rescale(const MCF& mcf, const std::vector<Rational>& w);

/// The weights used by dehomogenize: w_n = a_n^(m+1) w_{n-(m+1)}, w_k = 1 for k < 0.
std::vector<Rational> dehomogenizing_weights(const MCF& mcf);

/// Rescales to unit numerators a~_n^(m+1) = 1.
MCF dehomogenize(const MCF& mcf);

/// Value of a finite MCF by backward substitution through the complete
/// quotients, cross-checked against the final convergent.
/// ZeroIntermediate / InternalMismatch.
std::vector<Rational> evaluate_finite(const MCF& mcf);

/// |A_n^(m+1)| == prod_{h=1}^{n} |a_h^(1)| for every 1 <= n <= upto.
bool denominator_norm_identity(const MCF& mcf, std::size_t upto, const Prime& p);

/// V_n^(k) = A_n^(k) - alpha^(k) A_n^(m+1) for n = -(m+1) .. last stored index.
struct StrongConvergenceSeq {
  std::size_t m;
  std::vector<std::vector<PAdicValue>> values;  // values[n + m + 1][k]
  std::vector<std::vector<Valuation>> valuations;
  bool recurrence_verified;  // exact backends only

  const std::vector<PAdicValue>& at(long n) const { return values[static_cast<std::size_t>(n + static_cast<long>(m) + 1)]; }
  const std::vector<Valuation>& valuation_at(long n) const {
    return valuations[static_cast<std::size_t>(n + static_cast<long>(m) + 1)];
  }
  /// |V_n| < max_{1<=j<=m+1} |V_{n-j}| for every n >= 1 and every coordinate.
  bool norms_strictly_decrease() const;
};

StrongConvergenceSeq strong_convergence_sequence(const MCF& mcf, const std::vector<PAdicValue>& targets,
                                                 const Prime& p);

}  // namespace pmcf

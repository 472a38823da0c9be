#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmcf/mcf.hpp"
#include "pmcf/value.hpp"

namespace pmcf {

/// Digit map s_n^(k): complete quotient -> partial quotient. The coordinate k
/// is 0-based and n is the step index. Maps other than Browkin's are checked
/// on every application against
///   s(0) = 0,  |gamma - s(gamma)| < 1,  |gamma - s(gamma)| < |gamma| if s(gamma) != 0.
using DigitMap = std::function<Rational(const PAdicValue& gamma, std::size_t k, std::size_t n, const Prime& p)>;

/// Browkin's s, independent of k and n.
DigitMap browkin_digit_map();

/// Throws DigitMapViolation when (gamma, s) breaks the contract above, or
/// InsufficientPrecision when an approximation cannot decide it.
void validate_digit(const PAdicValue& gamma, const Rational& s, const Prime& p);

/// Complete quotients alpha_n^(1..m) at step n.
struct JPState {
  Prime p;
  std::vector<PAdicValue> alpha;
  std::size_t n = 0;

  std::size_t dim() const noexcept { return alpha.size(); }
};

struct JPStep {
  std::vector<Rational> quotients;  // a_n^(1..m)
  std::optional<JPState> next;      // empty when alpha_n^(m) - a_n^(m) = 0
};

/// One step: a_n^(i) = s(alpha_n^(i)); stop iff alpha_n^(m) = a_n^(m);
/// otherwise alpha_{n+1}^(1) = 1/(alpha_n^(m) - a_n^(m)) and
/// alpha_{n+1}^(i) = alpha_{n+1}^(1) (alpha_n^(i-1) - a_n^(i-1)).
/// Approximations that cannot decide the stop test raise InsufficientPrecision.
JPStep jp_step(const JPState& state, const DigitMap& digits = {});

enum class ExpansionStatus { Finite, Truncated, Periodic };

std::string to_string(ExpansionStatus s);

struct ExpansionResult {
  MCF mcf;  // unit numerators; periodic MCFs store preperiod + one period
  ExpansionStatus status;
  std::size_t steps = 0;
  /// Periodic: alpha_{preperiod} == alpha_{preperiod + period} exactly.
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

struct JPOptions {
  std::size_t max_steps = 10'000;
  bool detect_period = true;
  /// Check the reconstruction of alpha_0 from alpha_n and A_{n-j} exactly at
  /// every step (exact backends only). VerificationFailed on mismatch.
  bool verify_identity = false;
  DigitMap digit_map;  // empty: Browkin
};

ExpansionResult jp_expand(const std::vector<PAdicValue>& inputs, const Prime& p, const JPOptions& options = {});

/// Tuple x_n^(1..m+1) of the generalized Euclidean algorithm.
struct EuclideanState {
  std::vector<PAdicValue> x;
};

struct EuclidResult {
  ExpansionResult expansion;
  std::vector<EuclideanState> trace;  // x_0, x_1, ..., including the final state
};

/// x_{n+1}^(1) = x_n^(m+1), x_{n+1}^(i) = x_n^(i-1) - a_n^(i-1) x_n^(m+1),
/// a_n^(i) = s(x_n^(i) / x_n^(m+1)); stops when x^(m+1) vanishes.
EuclidResult euclid_expand(const std::vector<PAdicValue>& x, const Prime& p, std::size_t max_steps = 10'000);

/// |x_{n+1}^(m+1)| < |x_n^(m+1)| along the whole trace.
bool euclid_norms_decrease(const std::vector<EuclideanState>& trace, const Prime& p);

/// The integer tuple (n_1 l/d_1, ..., n_m l/d_m, l), l = lcm of the denominators.
std::vector<Integer> integer_lift(const std::vector<Rational>& alphas);

/// For a finite expansion: a primitive integral (c_1..c_{m+1}) with
/// c_1 alpha^(1) + ... + c_m alpha^(m) + c_{m+1} = 0. VerificationFailed if
/// no dependency exists.
std::vector<Rational> verify_termination_dependence(const ExpansionResult& result,
                                                    const std::vector<PAdicValue>& inputs);

struct ReexpandReport {
  bool matches = false;
  std::vector<Rational> value;
  std::optional<ExpansionResult> reexpansion;
  /// First violated uniqueness hypothesis, if any.
  std::optional<std::string> failed_hypothesis;
};

/// Evaluates a finite unit-numerator MCF and re-expands the value; matches
/// when the re-expansion reproduces every partial quotient.
ReexpandReport reexpand_check(const MCF& mcf, const Prime& p);

}  // namespace pmcf

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmcf/app/json_io.hpp"

namespace pmcf::app {

/// One worked example: inputs, prime and the expected expansion.
struct WorkedCase {
  std::string id;
  std::string description;
  long p;
  /// Minimal polynomial of theta when some input is algebraic.
  std::optional<std::string> minpoly;
  /// Rationals, or expressions in x when a minimal polynomial is given.
  std::vector<std::string> inputs;
  ExpansionStatus status = ExpansionStatus::Finite;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// Expected a^(1..m) sequences (a^(m+1) is 1 throughout).
  std::vector<std::vector<std::string>> quotients;
  /// Expected value of the finite expansion, when the example states one.
  std::optional<std::vector<std::string>> value;
};

struct CaseOutcome {
  std::string id;
  std::string description;
  bool passed = false;
  std::vector<std::string> mismatches;
  std::optional<ExpansionResult> result;
  std::optional<std::vector<Rational>> value;
};

/// The built-in table of worked examples.
std::vector<WorkedCase> worked_cases();

/// Builds the p-adic inputs of a case (embedding via the root of largest norm).
std::vector<PAdicValue> case_inputs(const WorkedCase& c, long precision = 64);

CaseOutcome run_case(const WorkedCase& c);

/// Runs every case concurrently; outcomes are sorted by id.
std::vector<CaseOutcome> run_cases(const std::vector<WorkedCase>& cases);

std::string text_report(const std::vector<CaseOutcome>& outcomes);
Json json_report(const std::vector<CaseOutcome>& outcomes);

}  // namespace pmcf::app

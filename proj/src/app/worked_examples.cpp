#include "pmcf/app/worked_examples.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "pmcf/errors.hpp"

namespace pmcf::app {

std::vector<WorkedCase> worked_cases() {
  using S = ExpansionStatus;
  return {
      {"q11-triple-a", "(-5/4, 29/11, 3/4) in Q_11", 11, {}, {"-5/4", "29/11", "3/4"}, S::Finite, 0, 0,
       {{"-4", "4/11"}, {"29/11", "1"}, {"-2", "0"}}, {}},
      {"q11-triple-b", "(-7/4, 2/5, 1/3) in Q_11", 11, {}, {"-7/4", "2/5", "1/3"}, S::Finite, 0, 0,
       {{"1", "-3/11", "-5/11", "4/11"}, {"-4", "-2", "0", "0"}, {"4", "1", "-4", "0"}}, {}},
      {"q5-cbrt2", "(2^(1/3), 5/4) in Q_5", 5, "x^3-2", {"x", "5/4"}, S::Finite, 0, 0,
       {{"1", "4/5", "12/5"}, {"0", "1", "0"}}, std::vector<std::string>{"133/48", "5/4"}},
      {"q5-cubic-periodic", "(alpha, 1+1/alpha), alpha^3 - 8/5 alpha^2 - alpha - 1 = 0 in Q_5", 5,
       "x^3-8/5*x^2-x-1", {"x", "1+1/x"}, S::Periodic, 0, 1, {{"8/5"}, {"1"}}, {}},
      {"q5-pair-a", "(23/5, 14/19) in Q_5", 5, {}, {"23/5", "14/19"}, S::Finite, 0, 0,
       {{"-2/5", "6/5", "6/5", "4/5"}, {"1", "1", "-1", "-1"}}, {}},
      {"q5-pair-b", "(7/3, 11/20) in Q_5", 5, {}, {"7/3", "11/20"}, S::Finite, 0, 0,
       {{"-1", "-4/5", "-3/5"}, {"9/5", "-1", "0"}}, {}},
      {"q5-termination", "(1 + p/(p^2+1), 1 - p/(p^2+1)) at p = 5", 5, {}, {"31/26", "21/26"}, S::Finite, 0, 0,
       {{"1", "-1/5"}, {"1", "-1"}}, std::vector<std::string>{"6", "-4"}},
      {"q7-cubic-periodic", "(gamma, -2+1/gamma), gamma^3 + 3/7 gamma^2 + 2 gamma - 1 = 0 in Q_7", 7,
       "x^3+3/7*x^2+2*x-1", {"x", "-2+1/x"}, S::Periodic, 0, 1, {{"-3/7"}, {"-2"}}, {}},
      {"q7-pair", "(31/16, 123/7) in Q_7", 7, {}, {"31/16", "123/7"}, S::Finite, 0, 0,
       {{"-2", "-16/7", "13/7", "17/7", "2/7"}, {"-24/7", "-2", "2", "-2", "-1"}}, {}},
  };
}

std::vector<PAdicValue> case_inputs(const WorkedCase& c, long precision) {
  const Prime p(c.p);
  std::vector<PAdicValue> out;
  if (!c.minpoly) {
    for (const auto& s : c.inputs) out.emplace_back(parse_rational(s));
    return out;
  }
  const FieldPtr field = make_field(parse_polynomial(*c.minpoly));
  const PAdicEmbedding emb = PAdicEmbedding::largest_root(field, p, precision);
  for (const auto& s : c.inputs) {
    AlgebraicNumber x = parse_element(s, field);
    if (auto r = x.as_rational()) out.emplace_back(*r);
    else out.emplace_back(std::move(x), emb);
  }
  return out;
}

namespace {

std::string join(const std::vector<Rational>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + ")";
}

}  // namespace

CaseOutcome run_case(const WorkedCase& c) {
  CaseOutcome out;
  out.id = c.id;
  out.description = c.description;
  try {
    const Prime p(c.p);
    const auto inputs = case_inputs(c);
    ExpansionResult r = jp_expand(inputs, p);
    out.result = r;
    if (r.status != c.status)
      out.mismatches.push_back("status: expected " + to_string(c.status) + ", got " + to_string(r.status));
    if (c.status == ExpansionStatus::Periodic && r.status == c.status &&
        (r.preperiod != c.preperiod || r.period != c.period))
      out.mismatches.push_back("period: expected (" + std::to_string(c.preperiod) + ", " +
                               std::to_string(c.period) + "), got (" + std::to_string(r.preperiod) + ", " +
                               std::to_string(r.period) + ")");
    const auto seqs = r.mcf.sequences();
    for (std::size_t k = 0; k < c.quotients.size(); ++k) {
      std::vector<Rational> want;
      for (const auto& s : c.quotients[k]) want.push_back(parse_rational(s));
      const std::vector<Rational> got = k < seqs.size() ? seqs[k] : std::vector<Rational>{};
      if (want != got)
        out.mismatches.push_back("a^(" + std::to_string(k + 1) + "): expected " + join(want) + ", got " + join(got));
    }
    if (c.quotients.size() + 1 != seqs.size())
      out.mismatches.push_back("dimension: expected " + std::to_string(c.quotients.size()) + ", got " +
                               std::to_string(seqs.size() - 1));
    if (c.value) {
      std::vector<Rational> want;
      for (const auto& s : *c.value) want.push_back(parse_rational(s));
      if (r.status == ExpansionStatus::Finite) {
        out.value = evaluate_finite(r.mcf);
        if (*out.value != want)
          out.mismatches.push_back("value: expected " + join(want) + ", got " + join(*out.value));
      } else {
        out.mismatches.push_back("value: expected " + join(want) + ", expansion is not finite");
      }
    }
  } catch (const std::exception& e) {
    out.mismatches.push_back(std::string("error: ") + e.what());
  }
  out.passed = out.mismatches.empty();
  return out;
}

std::vector<CaseOutcome> run_cases(const std::vector<WorkedCase>& cases) {
  std::vector<std::future<CaseOutcome>> jobs;
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [&c] { return run_case(c); }));
  std::vector<CaseOutcome> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string text_report(const std::vector<CaseOutcome>& outcomes) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed;
    os << (o.passed ? "PASS " : "FAIL ") << o.id << "  " << o.description << "\n";
    for (const auto& m : o.mismatches) os << "     " << m << "\n";
  }
  os << passed << "/" << outcomes.size() << " cases passed\n";
  return os.str();
}

Json json_report(const std::vector<CaseOutcome>& outcomes) {
  Json cases = Json::array();
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed;
    Json c;
    c["id"] = o.id;
    c["description"] = o.description;
    c["passed"] = o.passed;
    c["mismatches"] = o.mismatches;
    if (o.result) c["expansion"] = to_json(*o.result);
    if (o.value) c["value"] = to_json(*o.value);
    cases.push_back(std::move(c));
  }
  Json out;
  out["passed"] = passed;
  out["total"] = outcomes.size();
  out["cases"] = std::move(cases);
  return out;
}

}  // namespace pmcf::app

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pmcf/app/cli.hpp"
#include "pmcf/app/json_io.hpp"
#include "pmcf/app/worked_examples.hpp"
#include "pmcf/errors.hpp"

using namespace pmcf;
using namespace pmcf::app;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

/// Exit status of the installed binary.
int binary_exit(const std::string& args) {
  const std::string cmd = std::string(PMCF_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const WorkedCase& find_case(const std::vector<WorkedCase>& cases, const std::string& id) {
  for (const auto& c : cases)
    if (c.id == id) return c;
  throw std::runtime_error("no case " + id);
}

}  // namespace

TEST(Json, RationalAndDigits) {
  EXPECT_EQ(to_json(parse_rational("-6/4")), Json("-3/2"));
  EXPECT_EQ(rational_from_json(Json(7)), 7);
  EXPECT_THROW((void)rational_from_json(Json(1.5)), Error);
  const BalancedDigits d{-1, {-2, 0, 1}};
  EXPECT_EQ(dump(to_json(d)), "{\n  \"k\": -1,\n  \"x\": [\n    -2,\n    0,\n    1\n  ]\n}");
  EXPECT_EQ(digits_from_json(to_json(d)), d);
}

TEST(Json, ExpansionRoundTripIsByteIdentical) {
  const auto r = run({"expand", "-p", "7", "--format", "json", "31/16", "123/7"});
  ASSERT_EQ(r.code, 0);
  const std::string text = r.out.substr(0, r.out.size() - 1);
  EXPECT_EQ(dump(parse_json(text)), text);
  EXPECT_EQ(dump(to_json(expansion_from_json(parse_json(text)))), text);

  const auto per = run({"expand", "-p", "5", "--format", "json", "--minpoly", "x^3-8/5*x^2-x-1", "--elem", "0,1,0",
                        "--elem-expr", "1+1/x"});
  ASSERT_EQ(per.code, 0);
  const std::string ptext = per.out.substr(0, per.out.size() - 1);
  const auto parsed = expansion_from_json(parse_json(ptext));
  EXPECT_EQ(parsed.status, ExpansionStatus::Periodic);
  EXPECT_FALSE(parsed.mcf.is_finite());
  EXPECT_EQ(dump(to_json(parsed)), ptext);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW((void)parse_json("{"), Error);
  EXPECT_THROW((void)mcf_from_json(parse_json(R"({"m": 1, "a": [["1"]], "finite": true})")), Error);
  EXPECT_THROW((void)mcf_from_json(parse_json(R"({"m": 1, "a": [["1"], ["x"]], "finite": true})")), Error);
  EXPECT_THROW((void)expansion_from_json(parse_json(R"({"status": "odd"})")), Error);
}

TEST(Cli, ExpandText) {
  const auto r = run({"expand", "-p", "5", "-m", "2", "23/5", "14/19"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: finite"), std::string::npos);
  EXPECT_NE(r.out.find("a^(1): -2/5, 6/5, 6/5, 4/5"), std::string::npos);
  EXPECT_NE(r.out.find("a^(2): 1, 1, -1, -1"), std::string::npos);
}

TEST(Cli, ExpandPeriodic) {
  const auto r = run({"expand", "-p", "5", "-m", "2", "--minpoly", "x^3-8/5*x^2-x-1", "--elem", "0,1,0", "--elem-expr",
                      "1+1/x", "--root", "largest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: periodic (preperiod 0, period 1)"), std::string::npos);
  EXPECT_NE(r.out.find("a^(1): 8/5"), std::string::npos);
}

TEST(Cli, InputOrderFollowsCommandLine) {
  const auto a = run({"expand", "-p", "5", "--format", "json", "--minpoly", "x^3-2", "5/4", "--elem", "0,1,0"});
  const auto b = run({"expand", "-p", "5", "--format", "json", "--minpoly", "x^3-2", "--elem", "0,1,0", "5/4"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(expansion_from_json(parse_json(b.out)).mcf.quotient(0, 0), -2);
  EXPECT_EQ(expansion_from_json(parse_json(a.out)).mcf.quotient(0, 0), 0);  // v(5/4) = 1
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"expand", "-p", "4", "1/2", "1/3"}).code, kExitError);
  EXPECT_EQ(run({"expand", "-p", "5", "--max-steps", "2", "23/5", "14/19"}).code, kExitTruncated);
  EXPECT_EQ(run({"expand", "-p", "5", "-m", "3", "23/5", "14/19"}).code, kExitError);
  EXPECT_EQ(run({"expand", "-p", "5", "2/x"}).code, kExitError);
  EXPECT_EQ(run({"expand", "-p", "5"}).code, kExitError);
  EXPECT_EQ(run({"expand", "23/5"}).code, kExitError);
  EXPECT_EQ(run({"expand", "-p", "5", "--backend", "rational", "--minpoly", "x^3-2", "--elem", "0,1"}).code,
            kExitError);
  EXPECT_EQ(run({"expand", "-p", "5", "--minpoly", "x^2-4", "--elem", "0,1"}).code, kExitError);
  EXPECT_EQ(run({"expand", "-p", "5", "--elem", "0,1"}).code, kExitError);
  EXPECT_EQ(run({"expand", "-p", "5", "--format", "xml", "1/2"}).code, kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
  EXPECT_EQ(run({}).code, kExitError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  // An approximation cannot decide the stop test of a rational input.
  EXPECT_EQ(run({"expand", "-p", "5", "--backend", "approx", "--precision", "10", "23/5", "14/19"}).code, kExitError);
  EXPECT_EQ(run({"evaluate"}, "not json").code, kExitError);
  EXPECT_EQ(run({"evaluate", "/nonexistent/file.json"}).code, kExitError);
  const auto err = run({"expand", "-p", "9", "1/2"});
  EXPECT_NE(err.err.find("NotOddPrime"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(binary_exit("expand -p 5 -m 2 23/5 14/19"), 0);
  EXPECT_EQ(binary_exit("expand -p 4 1/2 1/3"), 1);
  EXPECT_EQ(binary_exit("expand -p 5 --max-steps 1 23/5 14/19"), 2);
  EXPECT_EQ(binary_exit("digits -p 5 23"), 0);
  EXPECT_EQ(binary_exit("--bogus"), 1);
}

TEST(Cli, EvaluateAndCheck) {
  const std::string mcf = R"({"m": 2, "a": [["1", "4/5", "12/5"], ["0", "1", "0"], ["1", "1", "1"]], "finite": true})";
  const auto e = run({"evaluate"}, mcf);
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "(133/48, 5/4)\n");
  const auto ej = run({"evaluate", "--format", "json", "-"}, mcf);
  EXPECT_EQ(parse_json(ej.out)["value"], Json::parse(R"(["133/48", "5/4"])"));

  const auto c = run({"check", "-p", "5", "--format", "json"}, mcf);
  EXPECT_EQ(c.code, 0);
  const Json j = parse_json(c.out);
  EXPECT_TRUE(j["conditions_ok"].get<bool>());
  EXPECT_TRUE(j["determinants_ok"].get<bool>());
  EXPECT_TRUE(j["denominator_norms_ok"].get<bool>());

  // Expansion output feeds straight into evaluate.
  const auto x = run({"expand", "-p", "11", "--format", "json", "-7/4", "2/5", "1/3"});
  EXPECT_EQ(run({"evaluate"}, x.out).out, "(-7/4, 2/5, 1/3)\n");
}

TEST(Cli, DigitsAndEuclid) {
  const auto d = run({"digits", "-p", "5", "--precision", "4", "--format", "json", "23/5"});
  ASSERT_EQ(d.code, 0);
  const Json j = parse_json(d.out);
  EXPECT_EQ(j["s"], "-2/5");
  EXPECT_EQ(j["digits"]["k"], -1);
  EXPECT_EQ(j["digits"]["x"], Json::parse("[-2, 0, 1, 0, 0]"));

  const auto e = run({"euclid", "-p", "5", "437", "70", "95"});
  const auto f = run({"euclid", "-p", "5", "--from-ratios", "23/5", "14/19"});
  const auto g = run({"expand", "-p", "5", "23/5", "14/19"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, g.out);
  EXPECT_EQ(f.out, g.out);
  EXPECT_EQ(run({"euclid", "-p", "5", "1", "0"}).code, kExitError);
}

TEST(Cli, VerboseShowsDigits) {
  const auto r = run({"expand", "-p", "5", "--verbose", "23/5", "14/19"});
  EXPECT_NE(r.out.find("-2/5 = {k=-1, x=[-2,0]}"), std::string::npos);
}

TEST(WorkedExamples, AgreeingCasesPass) {
  const auto cases = worked_cases();
  EXPECT_EQ(cases.size(), 9u);
  for (const char* id : {"q11-triple-a", "q11-triple-b", "q5-cubic-periodic", "q5-pair-a", "q5-pair-b",
                         "q5-termination", "q7-cubic-periodic", "q7-pair"}) {
    const auto o = run_case(find_case(cases, id));
    EXPECT_TRUE(o.passed) << id << ": " << (o.mismatches.empty() ? "" : o.mismatches.front());
  }
}

TEST(WorkedExamples, CorruptedExpectationIsReported) {
  auto cases = worked_cases();
  for (auto& c : cases)
    if (c.id == "q7-pair") c.quotients[1][2] = "3";
  std::vector<WorkedCase> subset = {find_case(cases, "q7-pair"), find_case(cases, "q5-pair-a")};
  const auto out = run_cases(subset);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].id, "q5-pair-a");  // sorted by id
  EXPECT_TRUE(out[0].passed);
  EXPECT_FALSE(out[1].passed);
  const std::string text = text_report(out);
  EXPECT_NE(text.find("FAIL q7-pair"), std::string::npos);
  EXPECT_NE(text.find("a^(2): expected (-24/7, -2, 3, -2, -1)"), std::string::npos);
  EXPECT_NE(text.find("1/2 cases passed"), std::string::npos);
  const Json j = json_report(out);
  EXPECT_EQ(j["passed"], 1);
  EXPECT_EQ(j["cases"][1]["id"], "q7-pair");
  EXPECT_FALSE(j["cases"][1]["passed"].get<bool>());
}

TEST(WorkedExamples, JsonReportIsDeterministic) {
  const auto a = run({"paper-examples", "--format", "json"});
  const auto b = run({"paper-examples", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  const Json j = parse_json(a.out);
  EXPECT_EQ(j["total"], 9);
  EXPECT_EQ(a.code, j["passed"] == 9 ? 0 : 1);
}

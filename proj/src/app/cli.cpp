#include "pmcf/app/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pmcf/app/json_io.hpp"
#include "pmcf/app/worked_examples.hpp"
#include "pmcf/errors.hpp"

namespace pmcf::app {

namespace {

struct Settings {
  long p = 0;
  std::optional<std::size_t> dim;
  std::size_t max_steps = 10'000;
  long precision = 64;
  std::string format = "text";
  std::optional<std::string> backend;
  bool detect_period = true;
  bool verbose = false;
  std::optional<std::string> minpoly;
  std::vector<std::string> elems;
  std::vector<std::string> elem_exprs;
  std::string root = "largest";
  std::vector<std::string> values;
  bool from_ratios = false;
  std::string file = "-";
};

bool json_out(const Settings& s) { return s.format == "json"; }

std::string join(const std::vector<Rational>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + to_string(xs[i]);
  return out;
}

std::string digits_text(const BalancedDigits& d) {
  std::string s = "{k=" + std::to_string(d.start) + ", x=[";
  for (std::size_t i = 0; i < d.digits.size(); ++i) s += (i ? "," : "") + std::to_string(d.digits[i]);
  return s + "]}";
}

/// Quotients live in Z[1/p], so their expansion stops below exponent 1.
BalancedDigits quotient_digits(const Rational& q, const Prime& p) { return balanced_digit_expansion(q, p, 1); }

/// Inputs in command line order: --elem, --elem-expr and positionals interleave.
std::vector<PAdicValue> collect_inputs(const CLI::App& cmd, const Settings& s, const Prime& p) {
  std::vector<std::pair<char, std::string>> tokens;  // 'c' coefficients, 'e' expression, 'r' plain
  std::size_t ie = 0, ix = 0, iv = 0;
  for (const CLI::Option* opt : cmd.parse_order()) {
    if (opt->get_name() == "--elem") tokens.emplace_back('c', s.elems.at(ie++));
    else if (opt->get_name() == "--elem-expr") tokens.emplace_back('e', s.elem_exprs.at(ix++));
    else if (opt->get_name() == "values") tokens.emplace_back('r', s.values.at(iv++));
  }
  if (tokens.empty()) throw Error(ErrorKind::InvalidArgument, "no input values given");

  const std::string backend = s.backend.value_or(s.minpoly ? "numberfield" : "rational");
  std::optional<PAdicEmbedding> emb;
  FieldPtr field;
  if (s.minpoly) {
    field = make_field(parse_polynomial(*s.minpoly));
    emb = PAdicEmbedding::largest_root(field, p, s.precision);
  }

  std::vector<PAdicValue> out;
  for (const auto& [kind, text] : tokens) {
    if (kind == 'r') {
      out.emplace_back(parse_rational(text));
      continue;
    }
    if (!field) throw Error(ErrorKind::InvalidArgument, "--elem and --elem-expr need --minpoly");
    AlgebraicNumber x = kind == 'c' ? parse_coefficients(text, field) : parse_element(text, field);
    if (auto r = x.as_rational()) out.emplace_back(*r);
    else out.emplace_back(std::move(x), *emb);
  }
  if (backend == "rational") {
    for (const auto& v : out)
      if (!v.rational()) throw Error(ErrorKind::InvalidArgument, "the rational backend needs rational inputs");
  } else if (backend == "approx") {
    for (auto& v : out) v = v.to_approx(p, s.precision);
  }
  return out;
}

void print_expansion(std::ostream& out, const ExpansionResult& r, const Settings& s, const Prime& p) {
  if (json_out(s)) {
    out << dump(to_json(r)) << "\n";
    return;
  }
  out << "status: " << to_string(r.status);
  if (r.status == ExpansionStatus::Periodic) out << " (preperiod " << r.preperiod << ", period " << r.period << ")";
  out << "\nsteps: " << r.steps << "\n";
  const auto seqs = r.mcf.sequences();
  for (std::size_t k = 0; k + 1 < seqs.size(); ++k) {
    out << "a^(" << k + 1 << "): " << join(seqs[k]) << "\n";
    if (s.verbose)
      for (std::size_t n = 0; n < seqs[k].size(); ++n)
        out << "  n=" << n << "  " << to_string(seqs[k][n]) << " = " << digits_text(quotient_digits(seqs[k][n], p))
            << "\n";
  }
}

int expansion_exit(const ExpansionResult& r) {
  return r.status == ExpansionStatus::Truncated ? kExitTruncated : kExitOk;
}

int cmd_expand(const CLI::App& cmd, const Settings& s, std::ostream& out) {
  const Prime p(s.p);
  const auto inputs = collect_inputs(cmd, s, p);
  if (s.dim && *s.dim != inputs.size())
    throw Error(ErrorKind::InvalidArgument, "-m " + std::to_string(*s.dim) + " does not match " +
                                                std::to_string(inputs.size()) + " inputs");
  if (s.verbose && !json_out(s))
    for (std::size_t k = 0; k < inputs.size(); ++k) out << "alpha^(" << k + 1 << ") = " << inputs[k].to_string() << "\n";
  JPOptions opts;
  opts.max_steps = s.max_steps;
  opts.detect_period = s.detect_period;
  const auto r = jp_expand(inputs, p, opts);
  print_expansion(out, r, s, p);
  return expansion_exit(r);
}

int cmd_euclid(const CLI::App& cmd, const Settings& s, std::ostream& out) {
  const Prime p(s.p);
  auto inputs = collect_inputs(cmd, s, p);
  if (s.from_ratios) {
    std::vector<Rational> alphas;
    for (const auto& v : inputs) {
      if (!v.rational()) throw Error(ErrorKind::InvalidArgument, "--from-ratios needs rational inputs");
      alphas.push_back(*v.rational());
    }
    inputs.clear();
    for (const auto& x : integer_lift(alphas)) inputs.emplace_back(Rational(x));
  }
  if (s.dim && *s.dim + 1 != inputs.size())
    throw Error(ErrorKind::InvalidArgument, "-m " + std::to_string(*s.dim) + " needs " +
                                                std::to_string(*s.dim + 1) + " coordinates");
  const auto r = euclid_expand(inputs, p, s.max_steps);
  if (json_out(s)) {
    Json j = to_json(r.expansion);
    if (s.verbose) {
      Json trace = Json::array();
      for (const auto& st : r.trace) {
        Json row = Json::array();
        for (const auto& x : st.x) row.push_back(x.to_string());
        trace.push_back(std::move(row));
      }
      j["trace"] = std::move(trace);
    }
    out << dump(j) << "\n";
  } else {
    print_expansion(out, r.expansion, s, p);
    if (s.verbose)
      for (std::size_t n = 0; n < r.trace.size(); ++n) {
        out << "x_" << n << " = (";
        for (std::size_t k = 0; k < r.trace[n].x.size(); ++k) out << (k ? ", " : "") << r.trace[n].x[k].to_string();
        out << ")\n";
      }
  }
  return expansion_exit(r.expansion);
}

Json read_json_input(const std::string& file, std::istream& in) {
  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(file);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_json(text);
}

/// Accepts a bare MCF or an expansion result wrapping one.
MCF read_mcf(const std::string& file, std::istream& in) {
  const Json j = read_json_input(file, in);
  return j.contains("quotients") ? expansion_from_json(j).mcf : mcf_from_json(j);
}

int cmd_evaluate(const Settings& s, std::istream& in, std::ostream& out) {
  const MCF mcf = read_mcf(s.file, in);
  if (!mcf.is_finite()) throw Error(ErrorKind::InvalidArgument, "evaluate needs a finite MCF");
  const auto value = evaluate_finite(mcf);
  if (json_out(s)) {
    Json j;
    j["value"] = to_json(value);
    out << dump(j) << "\n";
  } else {
    out << "(" << join(value) << ")\n";
  }
  return kExitOk;
}

int cmd_digits(const Settings& s, std::ostream& out) {
  const Prime p(s.p);
  if (s.values.size() != 1) throw Error(ErrorKind::InvalidArgument, "digits takes exactly one rational");
  const Rational x = parse_rational(s.values.front());
  const auto d = balanced_digit_expansion(x, p, s.precision);
  const Rational sx = browkin_s(x, p);
  if (json_out(s)) {
    Json j;
    j["x"] = to_json(x);
    j["p"] = s.p;
    j["precision"] = s.precision;
    j["s"] = to_json(sx);
    j["digits"] = to_json(d);
    out << dump(j) << "\n";
  } else {
    out << "x = " << to_string(x) << "\n";
    out << "s(x) = " << to_string(sx) << "\n";
    out << "digits mod " << s.p << "^" << s.precision << " = " << digits_text(d) << "\n";
  }
  return kExitOk;
}

int cmd_check(const Settings& s, std::istream& in, std::ostream& out) {
  const Prime p(s.p);
  const MCF mcf = read_mcf(s.file, in);
  const std::size_t last = mcf.stored_length() - 1;
  const bool unit = mcf.has_unit_numerators();
  const auto report = check_convergence_conditions(mcf, last, unit, p);
  bool det_ok = true;
  Json dets = Json::array();
  for (std::size_t n = 0; n <= last; ++n) {
    const auto d = determinant_check(mcf, n);
    det_ok = det_ok && d.matches;
    Json row;
    row["n"] = n;
    row["det"] = to_json(d.det);
    row["expected"] = to_json(d.expected);
    row["matches"] = d.matches;
    dets.push_back(std::move(row));
  }
  const bool norms = unit ? denominator_norm_identity(mcf, last, p) : false;

  if (json_out(s)) {
    Json j;
    j["unit_numerators"] = unit;
    j["conditions_ok"] = report.ok();
    if (report.first_violation) j["first_violation"] = *report.first_violation;
    j["determinants_ok"] = det_ok;
    j["determinants"] = std::move(dets);
    if (unit) j["denominator_norms_ok"] = norms;
    out << dump(j) << "\n";
  } else {
    out << "unit numerators: " << (unit ? "yes" : "no") << "\n";
    out << "convergence conditions (n = 1.." << last << "): " << (report.ok() ? "ok" : "violated");
    if (report.first_violation) out << " at n = " << *report.first_violation;
    out << "\n";
    out << "determinant formula (n = 0.." << last << "): " << (det_ok ? "ok" : "mismatch") << "\n";
    if (unit) out << "|A_n^(m+1)| = prod |a_h^(1)|: " << (norms ? "ok" : "fails") << "\n";
    if (s.verbose)
      for (const auto& row : dets)
        out << "  det B_" << row["n"].get<std::size_t>() << " = " << row["det"].get<std::string>() << "\n";
  }
  return det_ok ? kExitOk : kExitError;
}

int cmd_worked(const Settings& s, std::ostream& out) {
  const auto outcomes = run_cases(worked_cases());
  if (json_out(s)) out << dump(json_report(outcomes)) << "\n";
  else out << text_report(outcomes);
  for (const auto& o : outcomes)
    if (!o.passed) return kExitError;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic multidimensional continued fractions", "pmcf"};
  app.require_subcommand(1);
  Settings s;

  const auto prime_opt = [&s](CLI::App* c) {
    c->add_option("-p,--prime", s.p, "odd prime p")->required();
  };
  const auto format_opt = [&s](CLI::App* c) {
    c->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
    c->add_flag("--verbose", s.verbose, "print digit expansions and intermediate values");
  };
  const auto input_opts = [&s](CLI::App* c) {
    c->add_option("-m,--dim", s.dim, "dimension m (checked against the inputs)")->check(CLI::PositiveNumber);
    c->add_option("--max-steps", s.max_steps, "step limit")->check(CLI::PositiveNumber);
    c->add_option("--precision", s.precision, "p-adic precision N for approximations and roots")
        ->check(CLI::PositiveNumber);
    c->add_option("--backend", s.backend, "rational | numberfield | approx")
        ->check(CLI::IsMember({"rational", "numberfield", "approx"}));
    c->add_option("--minpoly", s.minpoly, "minimal polynomial of theta, \"c0,c1,...\" or e.g. \"x^3-2\"");
    c->add_option("--elem", s.elems, "element of Q(theta) as coefficients c0,c1,...")->allow_extra_args(false);
    c->add_option("--elem-expr", s.elem_exprs, "element of Q(theta) as an expression in x")->allow_extra_args(false);
    c->add_option("--root", s.root, "embedding root")->check(CLI::IsMember({"largest"}));
    c->add_option("values", s.values, "rational inputs");
  };

  CLI::App* expand = app.add_subcommand("expand", "p-adic Jacobi-Perron expansion");
  prime_opt(expand);
  format_opt(expand);
  input_opts(expand);
  expand->add_flag("--detect-period,!--no-detect-period", s.detect_period, "detect exact periodicity (default on)");

  CLI::App* euclid = app.add_subcommand("euclid", "generalized p-adic Euclidean algorithm on (x^(1), ..., x^(m+1))");
  prime_opt(euclid);
  format_opt(euclid);
  input_opts(euclid);
  euclid->add_flag("--from-ratios", s.from_ratios, "inputs are alpha^(1..m); lift to an integer tuple first");

  CLI::App* evaluate = app.add_subcommand("evaluate", "value of a finite MCF given as JSON");
  evaluate->add_option("file", s.file, "JSON file, - for stdin");
  format_opt(evaluate);

  CLI::App* digits = app.add_subcommand("digits", "balanced p-adic digits and Browkin's s of a rational");
  prime_opt(digits);
  format_opt(digits);
  digits->add_option("--precision", s.precision, "expand modulo p^N")->check(CLI::PositiveNumber);
  digits->add_option("values", s.values, "rational")->required();

  CLI::App* check = app.add_subcommand("check", "convergence conditions and determinant identities of an MCF");
  prime_opt(check);
  format_opt(check);
  check->add_option("file", s.file, "JSON file, - for stdin");

  CLI::App* worked = app.add_subcommand("paper-examples", "run the built-in worked examples");
  worked->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (expand->parsed()) return cmd_expand(*expand, s, out);
    if (euclid->parsed()) return cmd_euclid(*euclid, s, out);
    if (evaluate->parsed()) return cmd_evaluate(s, in, out);
    if (digits->parsed()) return cmd_digits(s, out);
    if (check->parsed()) return cmd_check(s, in, out);
    if (worked->parsed()) return cmd_worked(s, out);
  } catch (const Error& e) {
    err << "pmcf: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "pmcf: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace pmcf::app

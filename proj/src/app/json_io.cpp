#include "pmcf/app/json_io.hpp"

#include "pmcf/errors.hpp"

namespace pmcf::app {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, "json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  bad("rational must be a \"num/den\" string or an integer");
}

Json to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const MCF& mcf) {
  Json out;
  out["m"] = mcf.dim();
  Json a = Json::array();
  for (const auto& seq : mcf.sequences()) a.push_back(to_json(seq));
  out["a"] = std::move(a);
  out["finite"] = mcf.is_finite();
  if (!mcf.is_finite()) {
    out["preperiod"] = mcf.preperiod();
    out["period"] = mcf.period();
  }
  return out;
}

MCF mcf_from_json(const Json& j) {
  const std::size_t m = size_field(j, "m");
  const Json& a = field(j, "a");
  if (!a.is_array() || a.size() != m + 1) bad("\"a\" must hold m+1 sequences");
  std::vector<std::vector<Rational>> seqs;
  for (const auto& s : a) seqs.push_back(rationals_from_json(s));
  const Json& fin = field(j, "finite");
  if (!fin.is_boolean()) bad("\"finite\" must be a boolean");
  if (fin.get<bool>()) return MCF::from_sequences(seqs);

  const std::size_t pre = size_field(j, "preperiod");
  const std::size_t per = size_field(j, "period");
  const std::size_t len = seqs.empty() ? 0 : seqs.front().size();
  if (pre + per != len || per == 0) bad("preperiod + period must equal the stored length");
  std::vector<Column> prefix, cycle;
  for (std::size_t n = 0; n < len; ++n) {
    Column c;
    for (const auto& s : seqs) {
      if (s.size() != len) bad("sequences differ in length");
      c.push_back(s[n]);
    }
    (n < pre ? prefix : cycle).push_back(std::move(c));
  }
  return MCF::periodic(m, std::move(prefix), std::move(cycle));
}

Json to_json(const ExpansionResult& r) {
  Json out;
  out["status"] = to_string(r.status);
  if (r.status == ExpansionStatus::Periodic) {
    out["preperiod"] = r.preperiod;
    out["period"] = r.period;
  }
  out["quotients"] = to_json(r.mcf);
  out["steps"] = r.steps;
  return out;
}

ExpansionResult expansion_from_json(const Json& j) {
  const Json& st = field(j, "status");
  if (!st.is_string()) bad("\"status\" must be a string");
  const std::string s = st.get<std::string>();
  ExpansionStatus status;
  if (s == "finite") status = ExpansionStatus::Finite;
  else if (s == "truncated") status = ExpansionStatus::Truncated;
  else if (s == "periodic") status = ExpansionStatus::Periodic;
  else bad("unknown status \"" + s + "\"");
  ExpansionResult r{mcf_from_json(field(j, "quotients")), status, size_field(j, "steps")};
  if (status == ExpansionStatus::Periodic) {
    r.preperiod = size_field(j, "preperiod");
    r.period = size_field(j, "period");
  }
  return r;
}

Json to_json(const BalancedDigits& d) {
  Json out;
  out["k"] = d.start;
  out["x"] = d.digits;
  return out;
}

BalancedDigits digits_from_json(const Json& j) {
  const Json& k = field(j, "k");
  const Json& x = field(j, "x");
  if (!k.is_number_integer() || !x.is_array()) bad("digits need integer \"k\" and array \"x\"");
  BalancedDigits d{k.get<long>(), {}};
  for (const auto& v : x) {
    if (!v.is_number_integer()) bad("digits must be integers");
    d.digits.push_back(v.get<long>());
  }
  return d;
}

std::string dump(const Json& j) { return j.dump(2); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace pmcf::app

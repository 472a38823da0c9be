#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pmcf/jacobi_perron.hpp"

namespace pmcf::app {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Rational>& xs);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"m", "a": [[a^(1)...], ..., [a^(m+1)...]], "finite"}; periodic MCFs also
/// carry "preperiod" and "period" so the stored cycle can be rebuilt.
Json to_json(const MCF& mcf);
MCF mcf_from_json(const Json& j);

/// {"status", "preperiod"?, "period"?, "quotients", "steps"}
Json to_json(const ExpansionResult& r);
ExpansionResult expansion_from_json(const Json& j);

/// {"k": first exponent, "x": [digits]}
Json to_json(const BalancedDigits& d);
BalancedDigits digits_from_json(const Json& j);

/// Canonical text form used by every emitter.
std::string dump(const Json& j);
/// Parses text; malformed input raises ParseError.
Json parse_json(const std::string& text);

}  // namespace pmcf::app

#pragma once

#include <json.hpp>

#include "mayer/identities.hpp"

namespace mayer {

// Stable report schema shared with the CLI:
// {command, params, computed, expected, match, work, millis}.
// Big integers become decimal strings, rationals "p/q" strings.
nlohmann::ordered_json report_to_json(const IdentityReport& report);

// Renders a report value per the schema (decimal string when integral).
std::string report_value_str(const Rational& value, bool integral);

} // namespace mayer

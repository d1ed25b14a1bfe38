#pragma once

#include <string>

#include "starq/connection.hpp"
#include "starq/normal_form.hpp"
#include "starq/scenarios.hpp"

namespace starq {

/// Connection document: {"dim": n, "christoffel": [{"upper": c,
/// "lower": [a, b], "poly": "expr"}, ...]} with 1-based indices; omitted
/// entries are zero, symmetry is completed, conflicts rejected.
ConnectionData load_connection(const std::string& path);
ConnectionData parse_connection(const std::string& text);

/// Ideal document: {"dim": n, "generators": ["expr", ...]}.
IdealSpec load_ideal(const std::string& path);
IdealSpec parse_ideal(const std::string& text);

/// Structured report document with a schema_version field.
std::string report_to_json(const ScenarioReport& rep);
std::string report_to_text(const ScenarioReport& rep);

}  // namespace starq

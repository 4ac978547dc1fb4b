#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "groth/verifier.hpp"

namespace groth {

/// {identity, params, points, failures:[{assignment, lhs, rhs[, check]}], verdict}
/// with every rational rendered as a "p/q" string.
nlohmann::ordered_json to_json(const IdentityReport& report);

/// Inverse of to_json; Error(InvalidArgument) on malformed input or a verdict
/// that contradicts the failure list.
IdentityReport report_from_json(const nlohmann::ordered_json& j);

/// One report renders as an object, several as an array.
std::string render_json(const std::vector<IdentityReport>& reports);
/// Header plus one row per (identity, parameter cell).
std::string render_csv(const std::vector<IdentityReport>& reports);
std::string render_text(const std::vector<IdentityReport>& reports);

}  // namespace groth

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groth/verifier.hpp"

namespace groth {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_n = 4;  // caps n, m and the chain sizes every criterion sweeps
};

struct CriterionResult {
  int criterion = 0;
  std::string title;
  std::vector<IdentityReport> reports;

  bool passed() const;
};

inline constexpr int kSuiteCriteria = 7;

/// Runs one acceptance sweep (1..kSuiteCriteria). Reports are in canonical
/// order: identity, then parameters, then construction order.
std::string criterion_title(int criterion);
CriterionResult run_criterion(int criterion, const SuiteOptions& opts);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

std::string render_suite_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts);
std::string render_suite_csv(const std::vector<CriterionResult>& results);
/// Table of identity x parameter cell x verdict; the first failing cell is
/// marked with "=>".
std::string render_suite_text(const std::vector<CriterionResult>& results);

}  // namespace groth

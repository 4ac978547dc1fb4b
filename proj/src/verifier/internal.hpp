#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "groth/sampling.hpp"
#include "groth/verifier.hpp"

namespace groth::detail {

NamedValues render_assignment(const EvaluationPoint& point);

/// Accumulates per-point comparisons into an IdentityReport.
class ReportBuilder {
 public:
  ReportBuilder(std::string identity, NamedValues params);

  void begin_point(const EvaluationPoint& point);
  /// Records a failure (with the current point) unless lhs == rhs.
  bool expect_equal(std::string_view check, const Scalar& lhs, const Scalar& rhs);
  bool expect(std::string_view check, bool ok, std::string lhs, std::string rhs);

  /// Salt for derive_seed: identity plus parameters.
  std::string salt() const;

  IdentityReport finish() &&;

 private:
  IdentityReport report_;
  NamedValues current_;
};

/// Sample point `index` for the builder's identity cell.
EvaluationPoint sample_indexed(const ReportBuilder& builder, const VerifyOptions& opts, int index,
                               const std::vector<std::string>& vars, const std::vector<Constraint>& constraints);

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b);

inline std::string str(int v) { return std::to_string(v); }

/// u_j^e products and similar small helpers.
Scalar product_of_powers(const std::vector<Scalar>& values, int exponent);

std::vector<Scalar> map_all(const std::vector<Scalar>& values, VariableMap direction);

}  // namespace groth::detail

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "groth/scalar.hpp"

namespace groth {

namespace constraint {

/// Every listed variable takes a different value.
struct Distinct {
  std::vector<std::string> vars;
};

/// None of the listed variables is zero.
struct Nonzero {
  std::vector<std::string> vars;
};

/// `var` never equals `value` (e.g. q != 1, z != 1).
struct Avoid {
  std::string var;
  Scalar value;
};

/// `a` and `b` take different values; Differ{x, x} can never hold.
struct Differ {
  std::string a;
  std::string b;
};

}  // namespace constraint

using Constraint =
    std::variant<constraint::Distinct, constraint::Nonzero, constraint::Avoid, constraint::Differ>;

std::string describe(const Constraint& c);

/// Ordered assignment of exact values to variable names, together with the
/// constraints it was sampled under. Insertion order is preserved so reports
/// list variables the way the caller declared them.
class EvaluationPoint {
 public:
  EvaluationPoint() = default;
  EvaluationPoint(std::vector<std::pair<std::string, Scalar>> assignments,
                  std::vector<Constraint> constraints = {});

  /// Throws Error(UnboundVariable) when `name` is not assigned.
  const Scalar& at(const std::string& name) const;
  std::optional<Scalar> find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }

  /// Values of name_prefix1 .. name_prefix<count>.
  std::vector<Scalar> family(const std::string& prefix, int count) const;

  const std::vector<std::pair<std::string, Scalar>>& assignments() const { return assignments_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Copy with `name` rebound (or appended). Constraints are not re-checked.
  EvaluationPoint with(const std::string& name, const Scalar& value) const;

  bool satisfies(const Constraint& c) const;
  bool satisfies_all() const;

  friend bool operator==(const EvaluationPoint& a, const EvaluationPoint& b) {
    return a.assignments_ == b.assignments_;
  }

 private:
  std::vector<std::pair<std::string, Scalar>> assignments_;
  std::vector<Constraint> constraints_;
};

/// Sampling pool: rationals p/q with 1 <= p <= max_numerator and
/// 1 <= q <= max_denominator.
struct SamplePool {
  std::uint32_t max_numerator = 97;
  std::uint32_t max_denominator = 97;
  int retry_budget = 10000;
};

/// Draws every variable from the pool, rejecting whole draws until all
/// constraints hold. Deterministic in (seed, vars, constraints, pool).
/// Throws Error(ConstraintUnsatisfiable) after pool.retry_budget draws.
EvaluationPoint sample_point(std::uint64_t seed, const std::vector<std::string>& vars,
                             const std::vector<Constraint>& constraints, const SamplePool& pool = {});

/// Seed for point `index` of a run labelled `salt`; keeps points independent
/// of the order in which they are evaluated.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt, std::uint64_t index);

/// "prefix1", ..., "prefix<count>".
std::vector<std::string> numbered(const std::string& prefix, int count, int first = 1);

}  // namespace groth

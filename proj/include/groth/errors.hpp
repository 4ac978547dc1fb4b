#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace groth {

enum class ErrorKind {
  DivisionByZero,
  ConstraintUnsatisfiable,
  UnboundVariable,
  BoxOverflow,
  ProfileViolation,
  SingularMap,
  AlphabetTooShort,
  CoincidentVariables,
  BudgetExceeded,
  InexactDivision,
  ZeroQ,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

/// Usage/validation failures (bad shapes, bounds, budgets) as opposed to
/// failures that only show up while computing at a specific point.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace groth

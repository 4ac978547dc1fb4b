#include "groth/scalar.hpp"

#include <ostream>
#include <utility>

#include "groth/errors.hpp"

namespace groth {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConstraintUnsatisfiable: return "ConstraintUnsatisfiable";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::BoxOverflow: return "BoxOverflow";
    case ErrorKind::ProfileViolation: return "ProfileViolation";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::AlphabetTooShort: return "AlphabetTooShort";
    case ErrorKind::CoincidentVariables: return "CoincidentVariables";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ZeroQ: return "ZeroQ";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundVariable:
    case ErrorKind::BoxOverflow:
    case ErrorKind::ProfileViolation:
    case ErrorKind::AlphabetTooShort:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(n, d));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, to_string() + " / 0");
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(int exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<long>(exponent) : exponent;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), e);
  return Scalar(mpq_class(num, den));
}

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace groth

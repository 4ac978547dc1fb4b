#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace groth {

/// Exact rational number backed by GMP. Always in lowest terms with a
/// positive denominator; there is no floating-point path anywhere.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws Error(InvalidArgument) on junk and
  /// Error(DivisionByZero) on a zero denominator.
  static Scalar parse(std::string_view text);

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Scalar inverse() const;
  /// Integer power; negative exponents invert (DivisionByZero on 0).
  Scalar pow(int exponent) const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace groth

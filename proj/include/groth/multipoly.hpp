#pragma once

#include <map>
#include <string>
#include <vector>

#include "groth/sampling.hpp"
#include "groth/scalar.hpp"

namespace groth {

/// Dense-keyed multivariate polynomial with exact rational coefficients.
///
/// Terms are stored as exponent vectors over an ordered variable list. Two
/// polynomials over different variable lists are aligned before arithmetic
/// or comparison, and zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Scalar>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(std::vector<std::string> variables, const TermMap& terms);

  static MultiPoly constant(const Scalar& c);
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Scalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const { return *this * Scalar(-1); }

  MultiPoly pow(unsigned exponent) const;

  /// Throws Error(UnboundVariable) if a variable that actually occurs in some
  /// term has no value in `point`.
  Scalar evaluate(const EvaluationPoint& point) const;

  /// Same polynomial re-expressed over `order`, which must contain every
  /// variable that occurs in a term (InvalidArgument otherwise).
  MultiPoly over(const std::vector<std::string>& order) const;

  unsigned degree_in(const std::string& var) const;

  /// Canonical rendering over `order` (defaults to the stored order): terms in
  /// descending lexicographic order of exponent vectors.
  std::string to_string() const { return to_string(variables_); }
  std::string to_string(const std::vector<std::string>& order) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void add_term(const Exponents& e, const Scalar& c);

  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Exact quotient p / (a - b). Throws Error(InexactDivision) when the
/// remainder p|_{a=b} is nonzero.
MultiPoly divide_by_difference(const MultiPoly& p, const std::string& a, const std::string& b);

/// Coefficients c_0..c_{N-1} of the unique polynomial of degree < N through
/// the N points (xs[i], ys[i]). xs must be pairwise distinct.
std::vector<Scalar> interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace groth

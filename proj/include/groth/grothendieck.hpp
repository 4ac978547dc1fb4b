#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groth/combinatorics.hpp"
#include "groth/multipoly.hpp"
#include "groth/scalar.hpp"

namespace groth {

/// Finite prefix alpha_1..alpha_M of the factorial alphabet plus beta.
struct FactorialAlphabet {
  std::vector<Scalar> alphas;
  Scalar beta = Scalar(-1);

  int length() const { return static_cast<int>(alphas.size()); }
};

/// Shortest alphabet prefix that G_lambda in lambda.length() variables reads:
/// the largest factorial exponent lambda_1 + n - 1 (0 for n = 0).
int required_alphabet_length(const Partition& lambda);

/// z (+) a = z + a + beta z a.
Scalar oplus(const Scalar& z, const Scalar& a, const Scalar& beta);

/// [z|alpha]^j = (z (+) alpha_1) ... (z (+) alpha_j).
/// Throws Error(AlphabetTooShort) when j > M.
Scalar factorial_power(const Scalar& z, const FactorialAlphabet& alphabet, int j);

/// Exact determinant by Gaussian elimination over Q.
Scalar determinant(std::vector<std::vector<Scalar>> matrix);

/// G_lambda(z|alpha) = det([z_i|alpha]^{lambda_j+n-j} (1+beta z_i)^{j-1}) / prod_{i<j}(z_i - z_j).
///
/// Throws Error(CoincidentVariables) if two z's coincide,
/// Error(AlphabetTooShort) if the alphabet is shorter than
/// required_alphabet_length(lambda), and Error(InvalidArgument) if
/// z.size() != lambda.length().
Scalar grothendieck_det(const Partition& lambda, std::span<const Scalar> z, const FactorialAlphabet& alphabet);

/// Variable names used by the symbolic route: z1..zn, a1..aM and b for a
/// symbolic beta.
std::vector<std::string> symbolic_variables(int n, int alphabet_length, bool symbolic_beta);

/// Budget on the number of variables a symbolic expansion may use.
inline constexpr int kSymbolicVariableBudget = 8;

/// Full expansion of the determinant formula as a polynomial in z1..zn and
/// a1..aM (and b when `beta` is nullopt), with the Vandermonde divided out
/// exactly. Throws Error(BudgetExceeded) beyond kSymbolicVariableBudget
/// variables and Error(AlphabetTooShort) when alphabet_length is too small.
MultiPoly grothendieck_symbolic(const Partition& lambda, int alphabet_length, std::optional<Scalar> beta);

/// Evaluation point binding z1..zn, a1..aM (and b) for use with the
/// symbolic polynomial.
EvaluationPoint bind_symbolic_point(std::span<const Scalar> z, const FactorialAlphabet& alphabet, bool include_beta);

}  // namespace groth

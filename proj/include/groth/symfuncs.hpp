#pragma once

#include <span>

#include "groth/combinatorics.hpp"
#include "groth/scalar.hpp"

namespace groth {

/// Largest symmetric-group size the permutation sums enumerate.
inline constexpr int kPermutationBudget = 6;

/// Permutation-sum symmetric function on the chain of length L = w.size():
///
///   sum_sigma prod_j prod_{i=x_j+1}^{L} (u_s(j) - q w_i)
///             prod_{i<j} (q u_s(i) - u_s(j)) / (u_s(i) - u_s(j))
///             prod_j prod_{i=1}^{x_j-1} (u_s(j) - w_i)  prod_j (1-q) u_s(j)
///
/// Throws Error(CoincidentVariables) for repeated u's and
/// Error(BudgetExceeded) for more than kPermutationBudget u's.
Scalar symmetric_F(std::span<const Scalar> u, std::span<const Scalar> w, const PositionVector& x, const Scalar& q);

/// Barred counterpart over the n - k column parameters w_bar and the n row
/// parameters u, with y on [1, n]:
///
///   sum_sigma prod_j prod_{i=y_j+1}^{n} q (u_i - wb_s(j))
///             prod_{i<j} (q wb_s(i) - wb_s(j)) / (q (wb_s(i) - wb_s(j)))
///             prod_j prod_{i=1}^{y_j-1} (u_i - q wb_s(j))  prod_j (1-q) u_{y_j}
///
/// Throws Error(ZeroQ) at q = 0 (the pair factor is singular term by term),
/// Error(CoincidentVariables) for repeated w_bar's.
Scalar symmetric_F_bar(std::span<const Scalar> w_bar, std::span<const Scalar> u, const PositionVector& y, const Scalar& q);

}  // namespace groth

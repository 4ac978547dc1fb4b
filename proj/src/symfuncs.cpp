#include "groth/symfuncs.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "groth/errors.hpp"

namespace groth {

namespace {

void require_distinct(std::span<const Scalar> values, const char* family) {
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) {
        throw Error(ErrorKind::CoincidentVariables, std::string(family) + std::to_string(i + 1) + " = " + family +
                                                        std::to_string(j + 1) + " = " + values[i].to_string());
      }
    }
  }
}

void require_budget(size_t n) {
  if (n > static_cast<size_t>(kPermutationBudget)) {
    throw Error(ErrorKind::BudgetExceeded, "permutation sum over S_" + std::to_string(n) + " exceeds S_" +
                                               std::to_string(kPermutationBudget));
  }
}

}  // namespace

Scalar symmetric_F(std::span<const Scalar> u, std::span<const Scalar> w, const PositionVector& x, const Scalar& q) {
  const int n = static_cast<int>(u.size());
  const int length = static_cast<int>(w.size());
  if (x.count() != n || x.chain_length() != length) {
    throw Error(ErrorKind::InvalidArgument, "F needs |x| = |u| and chain length |w|");
  }
  require_budget(u.size());
  require_distinct(u, "u");
  const Scalar one(1);

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Scalar total;
  do {
    Scalar term(1);
    for (int j = 0; j < n; ++j) {
      const Scalar& us = u[sigma[j]];
      for (int i = x[j] + 1; i <= length; ++i) term *= us - q * w[i - 1];
      for (int i = 1; i <= x[j] - 1; ++i) term *= us - w[i - 1];
      term *= (one - q) * us;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Scalar& a = u[sigma[i]];
        const Scalar& b = u[sigma[j]];
        term *= (q * a - b) / (a - b);
      }
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Scalar symmetric_F_bar(std::span<const Scalar> w_bar, std::span<const Scalar> u, const PositionVector& y, const Scalar& q) {
  const int width = static_cast<int>(w_bar.size());
  const int n = static_cast<int>(u.size());
  if (y.count() != width || y.chain_length() != n) {
    throw Error(ErrorKind::InvalidArgument, "F_bar needs |y| = |w_bar| and y within [1, |u|]");
  }
  if (q.is_zero()) throw Error(ErrorKind::ZeroQ, "F_bar is singular term by term at q = 0");
  require_budget(w_bar.size());
  require_distinct(w_bar, "w");
  const Scalar one(1);

  std::vector<int> sigma(width);
  std::iota(sigma.begin(), sigma.end(), 0);
  Scalar total;
  do {
    Scalar term(1);
    for (int j = 0; j < width; ++j) {
      const Scalar& ws = w_bar[sigma[j]];
      for (int i = y[j] + 1; i <= n; ++i) term *= q * (u[i - 1] - ws);
      for (int i = 1; i <= y[j] - 1; ++i) term *= u[i - 1] - q * ws;
      term *= (one - q) * u[y[j] - 1];
    }
    for (int i = 0; i < width; ++i) {
      for (int j = i + 1; j < width; ++j) {
        const Scalar& a = w_bar[sigma[i]];
        const Scalar& b = w_bar[sigma[j]];
        term *= (q * a - b) / (q * (a - b));
      }
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace groth

#include "groth/grothendieck.hpp"

#include <algorithm>
#include <numeric>

#include "groth/errors.hpp"

namespace groth {

int required_alphabet_length(const Partition& lambda) {
  if (lambda.length() == 0) return 0;
  return lambda.largest() + lambda.length() - 1;
}

Scalar oplus(const Scalar& z, const Scalar& a, const Scalar& beta) { return z + a + beta * z * a; }

Scalar factorial_power(const Scalar& z, const FactorialAlphabet& alphabet, int j) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "negative factorial exponent");
  if (j > alphabet.length()) {
    throw Error(ErrorKind::AlphabetTooShort,
                "[z|alpha]^" + std::to_string(j) + " needs " + std::to_string(j) + " alphas, have " +
                    std::to_string(alphabet.length()));
  }
  Scalar out(1);
  for (int i = 0; i < j; ++i) out *= oplus(z, alphabet.alphas[i], alphabet.beta);
  return out;
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const size_t n = m.size();
  Scalar det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar factor = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Scalar grothendieck_det(const Partition& lambda, std::span<const Scalar> z, const FactorialAlphabet& alphabet) {
  const int n = lambda.length();
  if (static_cast<int>(z.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "G" + lambda.to_string() + " needs " + std::to_string(n) + " variables, got " +
                                                std::to_string(z.size()));
  }
  if (alphabet.length() < required_alphabet_length(lambda)) {
    throw Error(ErrorKind::AlphabetTooShort, "G" + lambda.to_string() + " needs " +
                                                 std::to_string(required_alphabet_length(lambda)) + " alphas, have " +
                                                 std::to_string(alphabet.length()));
  }
  Scalar vandermonde(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Scalar d = z[i] - z[j];
      if (d.is_zero()) {
        throw Error(ErrorKind::CoincidentVariables,
                    "z" + std::to_string(i + 1) + " = z" + std::to_string(j + 1) + " = " + z[i].to_string());
      }
      vandermonde *= d;
    }
  }
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) {
    Scalar deform = Scalar(1) + alphabet.beta * z[i];
    for (int j = 0; j < n; ++j) {
      m[i][j] = factorial_power(z[i], alphabet, lambda[j] + n - 1 - j) * deform.pow(j);
    }
  }
  return determinant(std::move(m)) / vandermonde;
}

std::vector<std::string> symbolic_variables(int n, int alphabet_length, bool symbolic_beta) {
  auto vars = numbered("z", n);
  auto alphas = numbered("a", alphabet_length);
  vars.insert(vars.end(), alphas.begin(), alphas.end());
  if (symbolic_beta) vars.push_back("b");
  return vars;
}

MultiPoly grothendieck_symbolic(const Partition& lambda, int alphabet_length, std::optional<Scalar> beta) {
  const int n = lambda.length();
  const auto vars = symbolic_variables(n, alphabet_length, !beta.has_value());
  if (static_cast<int>(vars.size()) > kSymbolicVariableBudget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(vars.size()) + " variables exceed the symbolic budget of " +
                                               std::to_string(kSymbolicVariableBudget));
  }
  if (alphabet_length < required_alphabet_length(lambda)) {
    throw Error(ErrorKind::AlphabetTooShort, "symbolic G" + lambda.to_string() + " needs " +
                                                 std::to_string(required_alphabet_length(lambda)) + " alphas");
  }
  MultiPoly b = beta ? MultiPoly::constant(*beta) : MultiPoly::variable("b");
  MultiPoly one = MultiPoly::constant(Scalar(1));

  std::vector<std::vector<MultiPoly>> entry(n, std::vector<MultiPoly>(n));
  for (int i = 0; i < n; ++i) {
    MultiPoly z = MultiPoly::variable("z" + std::to_string(i + 1));
    MultiPoly deform = one + b * z;
    for (int j = 0; j < n; ++j) {
      MultiPoly fp = one;
      for (int a = 1; a <= lambda[j] + n - 1 - j; ++a) {
        MultiPoly alpha = MultiPoly::variable("a" + std::to_string(a));
        fp *= z + alpha + b * z * alpha;
      }
      entry[i][j] = (fp * deform.pow(j)).over(vars);
    }
  }

  // Leibniz expansion; n stays tiny under the variable budget.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(vars);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    MultiPoly term = one;
    for (int i = 0; i < n; ++i) term *= entry[i][perm[i]];
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) det = divide_by_difference(det, "z" + std::to_string(i), "z" + std::to_string(j));
  }
  return det.over(vars);
}

EvaluationPoint bind_symbolic_point(std::span<const Scalar> z, const FactorialAlphabet& alphabet, bool include_beta) {
  std::vector<std::pair<std::string, Scalar>> values;
  for (size_t i = 0; i < z.size(); ++i) values.emplace_back("z" + std::to_string(i + 1), z[i]);
  for (size_t i = 0; i < alphabet.alphas.size(); ++i) values.emplace_back("a" + std::to_string(i + 1), alphabet.alphas[i]);
  if (include_beta) values.emplace_back("b", alphabet.beta);
  return EvaluationPoint(std::move(values));
}

}  // namespace groth

#pragma once

#include <random>
#include <vector>

#include "groth/scalar.hpp"

namespace testing_support {

// Independent small-rational generator for property tests; kept apart from
// the library sampler on purpose.
inline groth::Scalar random_rational(std::mt19937_64& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return groth::Scalar(num(rng), den(rng));
}

inline std::vector<groth::Scalar> distinct_rationals(std::mt19937_64& rng, int count) {
  std::vector<groth::Scalar> out;
  while (static_cast<int>(out.size()) < count) {
    auto v = random_rational(rng);
    bool fresh = true;
    for (const auto& o : out) fresh = fresh && o != v;
    if (fresh) out.push_back(v);
  }
  return out;
}

// Leibniz expansion; independent of the library's elimination routine.
inline groth::Scalar leibniz_det(const std::vector<std::vector<groth::Scalar>>& m) {
  const size_t n = m.size();
  if (n == 0) return groth::Scalar(1);
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  groth::Scalar total(0);
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    groth::Scalar term(inversions % 2 ? -1 : 1);
    for (size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace testing_support

#include <doctest.h>

#include <algorithm>

#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/symfuncs.hpp"
#include "support.hpp"

using namespace groth;
using testing_support::distinct_rationals;
using testing_support::random_rational;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

Scalar nonzero_rational(std::mt19937_64& rng) {
  Scalar q;
  do q = random_rational(rng);
  while (q.is_zero());
  return q;
}

}  // namespace

TEST_CASE("F single site") {
  const Scalar u(5, 6), w(1, 3), q(3, 8);
  std::vector<Scalar> us{u}, ws{w};
  CHECK(symmetric_F(us, ws, PositionVector({1}, 1), q) == (Scalar(1) - q) * u);
}

TEST_CASE("F is symmetric in u") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 4; ++n) {
    const int L = n + 1;
    auto u = distinct_rationals(rng, n);
    auto w = distinct_rationals(rng, L);
    const Scalar q = random_rational(rng);
    for (const auto& x : all_positions(n, L)) {
      const Scalar base = symmetric_F(u, w, x, q);
      auto perm = u;
      std::sort(perm.begin(), perm.end());
      do {
        CHECK(symmetric_F(perm, w, x, q) == base);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("F equals the lattice wavefunction") {
  std::mt19937_64 rng(2);
  for (int L = 1; L <= 5; ++L) {
    for (int n = 0; n <= std::min(L, 3); ++n) {
      auto u = distinct_rationals(rng, n);
      auto w = distinct_rationals(rng, L);
      for (const Scalar& q : {Scalar(0), random_rational(rng)}) {
        for (const auto& x : all_positions(n, L)) CHECK(symmetric_F(u, w, x, q) == wavefunction(u, w, x, q));
      }
    }
  }
}

TEST_CASE("F bar base case") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    auto u = distinct_rationals(rng, n);
    std::vector<Scalar> wbar{random_rational(rng)};
    const Scalar q = nonzero_rational(rng);
    Scalar expected = (Scalar(1) - q) * u[n - 1];
    for (int j = 0; j < n - 1; ++j) expected *= u[j] - q * wbar[0];
    CHECK(symmetric_F_bar(wbar, u, PositionVector({n}, n), q) == expected);
  }
}

TEST_CASE("F bar vanishes at u_n = 0 when y ends at n") {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r <= std::min(n, 3); ++r) {
      auto u = distinct_rationals(rng, n);
      u[n - 1] = Scalar(0);
      auto wbar = distinct_rationals(rng, r);
      const Scalar q = nonzero_rational(rng);
      for (const auto& y : all_positions(r, n)) {
        if (y[r - 1] != n) continue;
        CHECK(symmetric_F_bar(wbar, u, y, q).is_zero());
      }
    }
  }
}

TEST_CASE("F bar is symmetric in w and matches the barred lattice") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= std::min(n, 3); ++r) {
      auto u = distinct_rationals(rng, n);
      auto wbar = distinct_rationals(rng, r);
      const Scalar q = nonzero_rational(rng);
      for (const auto& y : all_positions(r, n)) {
        const Scalar base = symmetric_F_bar(wbar, u, y, q);
        CHECK(base == barred_wavefunction(wbar, u, y, q));
        auto perm = wbar;
        std::sort(perm.begin(), perm.end());
        do {
          CHECK(symmetric_F_bar(perm, u, y, q) == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST_CASE("symfunc errors") {
  std::vector<Scalar> u{Scalar(1, 2), Scalar(1, 3)}, w{Scalar(1, 5), Scalar(1, 7), Scalar(2, 7)};
  CHECK(kind_of([&] { symmetric_F_bar(std::vector<Scalar>{Scalar(1, 4)}, u, PositionVector({2}, 2), Scalar(0)); }) ==
        ErrorKind::ZeroQ);
  std::vector<Scalar> same{Scalar(1, 2), Scalar(1, 2)};
  CHECK(kind_of([&] { symmetric_F(same, w, PositionVector({1, 2}, 3), Scalar(1, 3)); }) ==
        ErrorKind::CoincidentVariables);
  CHECK(kind_of([&] { symmetric_F_bar(same, u, PositionVector({1, 2}, 2), Scalar(1, 3)); }) ==
        ErrorKind::CoincidentVariables);
  std::vector<Scalar> many, chain;
  for (int i = 1; i <= 7; ++i) many.emplace_back(i);
  for (int i = 1; i <= 8; ++i) chain.emplace_back(Scalar(1, i + 1));
  CHECK(kind_of([&] { symmetric_F(many, chain, PositionVector({1, 2, 3, 4, 5, 6, 7}, 8), Scalar(1, 3)); }) ==
        ErrorKind::BudgetExceeded);
}

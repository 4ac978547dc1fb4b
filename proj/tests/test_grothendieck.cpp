#include <doctest.h>

#include <algorithm>

#include "groth/errors.hpp"
#include "groth/grothendieck.hpp"
#include "support.hpp"

using namespace groth;
using testing_support::distinct_rationals;
using testing_support::leibniz_det;
using testing_support::random_rational;

namespace {

FactorialAlphabet alphabet(std::vector<Scalar> alphas, Scalar beta = Scalar(-1)) {
  return FactorialAlphabet{std::move(alphas), beta};
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

// Hand expansion of G_{(1,0)} at beta = -1.
Scalar closed_form_g10(const Scalar& z1, const Scalar& z2, const Scalar& a1, const Scalar& a2) {
  return (a1 * a2 - a1 - a2 + Scalar(1)) * (z1 + z2 - z1 * z2) + a1 + a2 - a1 * a2;
}

// Bialternant formula for the Schur polynomial.
Scalar schur(const Partition& lambda, const std::vector<Scalar>& z) {
  const int n = lambda.length();
  std::vector<std::vector<Scalar>> num(n, std::vector<Scalar>(n)), den = num;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      num[i][j] = z[i].pow(lambda[j] + n - 1 - j);
      den[i][j] = z[i].pow(n - 1 - j);
    }
  }
  return leibniz_det(num) / leibniz_det(den);
}

}  // namespace

TEST_CASE("oplus") {
  const Scalar z(3, 7);
  CHECK(oplus(z, Scalar(0), Scalar(5, 2)) == z);
  CHECK(oplus(Scalar(1, 2), Scalar(1, 3), Scalar(-1)) == Scalar(2, 3));
  CHECK(oplus(z, Scalar(2, 9), Scalar(0)) == z + Scalar(2, 9));
}

TEST_CASE("factorial powers") {
  auto abc = alphabet({Scalar(1, 3), Scalar(1, 5)});
  const Scalar z(1, 2);
  CHECK(factorial_power(z, abc, 0) == Scalar(1));
  CHECK(factorial_power(z, abc, 1) == Scalar(2, 3));
  CHECK(factorial_power(z, abc, 2) == Scalar(2, 5));
  CHECK(kind_of([&] { factorial_power(z, abc, 3); }) == ErrorKind::AlphabetTooShort);
}

TEST_CASE("determinant matches Leibniz expansion") {
  std::mt19937_64 rng(17);
  for (int n = 0; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
      for (auto& row : m) {
        for (auto& e : row) e = t % 3 == 0 ? Scalar(static_cast<long>(rng() % 3)) : random_rational(rng);
      }
      CHECK(determinant(m) == leibniz_det(m));
    }
  }
}

TEST_CASE("G of the zero partition is 1") {
  std::mt19937_64 rng(2);
  for (int n = 0; n <= 4; ++n) {
    auto z = distinct_rationals(rng, n);
    auto abc = alphabet(distinct_rationals(rng, 3), random_rational(rng));
    CHECK(grothendieck_det(Partition(std::vector<int>(n, 0)), z, abc) == Scalar(1));
  }
  CHECK(grothendieck_symbolic(Partition({0, 0}), 1, Scalar(-1)) == MultiPoly::constant(Scalar(1)));
}

TEST_CASE("one variable gives the factorial power") {
  std::mt19937_64 rng(4);
  auto abc = alphabet(distinct_rationals(rng, 5), Scalar(2, 3));
  for (int l = 0; l <= 5; ++l) {
    std::vector<Scalar> z{random_rational(rng)};
    Scalar expected(1);
    for (int j = 0; j < l; ++j) expected *= z[0] + abc.alphas[j] + abc.beta * z[0] * abc.alphas[j];
    CHECK(grothendieck_det(Partition({l}), z, abc) == expected);
  }
}

TEST_CASE("worked example at a fixed point") {
  std::vector<Scalar> z{Scalar(1, 2), Scalar(1, 3)};
  auto abc = alphabet({Scalar(1, 5), Scalar(1, 7)});
  const Scalar expected = closed_form_g10(z[0], z[1], abc.alphas[0], abc.alphas[1]);
  CHECK(grothendieck_det(Partition({1, 0}), z, abc) == expected);
}

TEST_CASE("worked example symbolically") {
  MultiPoly g = grothendieck_symbolic(Partition({1, 0}), 2, Scalar(-1));
  auto z1 = MultiPoly::variable("z1"), z2 = MultiPoly::variable("z2");
  auto a1 = MultiPoly::variable("a1"), a2 = MultiPoly::variable("a2");
  auto one = MultiPoly::constant(Scalar(1));
  MultiPoly expected = (a1 * a2 - a1 - a2 + one) * (z1 + z2 - z1 * z2) + a1 + a2 - a1 * a2;
  CHECK(g == expected);
}

TEST_CASE("Schur degeneration") {
  MultiPoly g = grothendieck_symbolic(Partition({1, 0}), 2, Scalar(0));
  EvaluationPoint zero_alphabet({{"a1", Scalar(0)}, {"a2", Scalar(0)}});
  // Substitute alpha = 0 through evaluation at several z and compare to z1 + z2.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 6; ++t) {
    auto z = distinct_rationals(rng, 2);
    EvaluationPoint pt({{"z1", z[0]}, {"z2", z[1]}, {"a1", Scalar(0)}, {"a2", Scalar(0)}});
    CHECK(g.evaluate(pt) == z[0] + z[1]);
  }
  // Every shape in the 3x3 box against the bialternant.
  auto abc = alphabet(std::vector<Scalar>(6, Scalar(0)), Scalar(0));
  for (const auto& lambda : partitions_in_box(3, 3)) {
    auto z = distinct_rationals(rng, 3);
    CHECK(grothendieck_det(lambda, z, abc) == schur(lambda, z));
  }
}

TEST_CASE("G is symmetric in z") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : {Partition(std::vector<int>(n, 1)), Partition([&] {
                                 std::vector<int> p(n, 0);
                                 p[0] = 2;
                                 return p;
                               }())}) {
      auto z = distinct_rationals(rng, n);
      auto abc = alphabet(distinct_rationals(rng, required_alphabet_length(lambda)), random_rational(rng));
      const Scalar base = grothendieck_det(lambda, z, abc);
      std::sort(z.begin(), z.end());
      do {
        CHECK(grothendieck_det(lambda, z, abc) == base);
      } while (std::next_permutation(z.begin(), z.end()));
    }
  }
}

TEST_CASE("symbolic and numeric routes agree") {
  std::mt19937_64 rng(21);
  for (const auto& lambda : {Partition({1, 0}), Partition({2, 1}), Partition({2, 0, 0}), Partition({1, 1, 0})}) {
    const int M = required_alphabet_length(lambda);
    for (bool symbolic_beta : {false, true}) {
      if (lambda.length() + M + (symbolic_beta ? 1 : 0) > kSymbolicVariableBudget) continue;
      const Scalar beta = symbolic_beta ? random_rational(rng) : Scalar(-1);
      MultiPoly g = grothendieck_symbolic(lambda, M, symbolic_beta ? std::nullopt : std::optional<Scalar>(beta));
      for (int t = 0; t < 5; ++t) {
        auto z = distinct_rationals(rng, lambda.length());
        auto abc = alphabet(distinct_rationals(rng, M), beta);
        CHECK(g.evaluate(bind_symbolic_point(z, abc, symbolic_beta)) == grothendieck_det(lambda, z, abc));
      }
    }
  }
}

TEST_CASE("general beta against a direct determinant") {
  std::mt19937_64 rng(30);
  for (const auto& lambda : {Partition({2, 1, 0}), Partition({3, 1}), Partition({1, 1, 1})}) {
    const int n = lambda.length();
    auto z = distinct_rationals(rng, n);
    auto abc = alphabet(distinct_rationals(rng, required_alphabet_length(lambda)), random_rational(rng));
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Scalar e(1);
        for (int a = 0; a < lambda[j] + n - 1 - j; ++a) e *= z[i] + abc.alphas[a] + abc.beta * z[i] * abc.alphas[a];
        m[i][j] = e * (Scalar(1) + abc.beta * z[i]).pow(j);
      }
    }
    Scalar vandermonde(1);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) vandermonde *= z[i] - z[j];
    }
    CHECK(grothendieck_det(lambda, z, abc) == leibniz_det(m) / vandermonde);
  }
}

TEST_CASE("grothendieck errors") {
  std::vector<Scalar> z{Scalar(1, 2), Scalar(1, 2)};
  auto abc = alphabet({Scalar(1, 5), Scalar(1, 7)});
  CHECK(kind_of([&] { grothendieck_det(Partition({1, 0}), z, abc); }) == ErrorKind::CoincidentVariables);
  std::vector<Scalar> good{Scalar(1, 2), Scalar(1, 3)};
  CHECK(kind_of([&] { grothendieck_det(Partition({1, 0, 0}), good, abc); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { grothendieck_symbolic(Partition({4, 4, 4}), 6, std::nullopt); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("alphabet length is minimal") {
  std::mt19937_64 rng(40);
  for (const auto& lambda : {Partition({1, 0}), Partition({2, 1, 0}), Partition({3}), Partition({2, 2})}) {
    const int M = required_alphabet_length(lambda);
    CHECK(M == lambda.largest() + lambda.length() - 1);
    auto z = distinct_rationals(rng, lambda.length());
    auto alphas = distinct_rationals(rng, M);
    CHECK_NOTHROW(grothendieck_det(lambda, z, alphabet(alphas)));
    alphas.pop_back();
    CHECK(kind_of([&] { grothendieck_det(lambda, z, alphabet(alphas)); }) == ErrorKind::AlphabetTooShort);
  }
}

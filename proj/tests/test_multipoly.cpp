#include <doctest.h>

#include "groth/errors.hpp"
#include "groth/multipoly.hpp"
#include "support.hpp"

using namespace groth;

namespace {

MultiPoly v(const char* name) { return MultiPoly::variable(name); }
MultiPoly c(long value) { return MultiPoly::constant(Scalar(value)); }

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  MultiPoly p = MultiPoly::constant(testing_support::random_rational(rng, 9));
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> degree(0, 2);
  for (int t = terms(rng); t > 0; --t) {
    MultiPoly m = MultiPoly::constant(testing_support::random_rational(rng, 9));
    for (int d = degree(rng); d >= 0; --d) m *= MultiPoly::variable(vars[pick(rng)]);
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("multipoly: ring identity and rendering") {
  MultiPoly p = (v("z1") + v("z2")) * (v("z1") - v("z2"));
  CHECK(p == v("z1").pow(2) - v("z2").pow(2));
  CHECK(p.to_string({"z1", "z2"}) == "z1^2 - z2^2");
  CHECK((Scalar(-3, 2) * v("z1").pow(2) * v("a1")).to_string({"z1", "a1"}) == "-3/2*z1^2*a1");
  CHECK(MultiPoly().to_string() == "0");
}

TEST_CASE("multipoly: evaluation of z (+) alpha at beta = -1") {
  MultiPoly p = v("z1") + v("a1") - v("z1") * v("a1");
  EvaluationPoint pt({{"z1", Scalar(1, 2)}, {"a1", Scalar(1, 3)}});
  CHECK(p.evaluate(pt) == Scalar(2, 3));
}

TEST_CASE("multipoly: zero coefficients are stripped") {
  MultiPoly p = v("z1") * v("a1") + c(3);
  MultiPoly padded = p + Scalar(0) * v("z1");
  CHECK(p == padded);
  CHECK((p - p).is_zero());
  CHECK((p - p).term_count() == 0);
  CHECK(p.over({"a1", "z1", "b"}) == p);
}

TEST_CASE("multipoly: unbound variables") {
  MultiPoly p = v("z1") + v("z2");
  EvaluationPoint pt({{"z1", Scalar(1)}});
  try {
    (void)p.evaluate(pt);
    FAIL("expected UnboundVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
  // Variables that cancel are not required.
  MultiPoly q = v("z1") + v("z2") - v("z2");
  CHECK(q.evaluate(pt) == Scalar(1));
}

TEST_CASE("multipoly: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vars{"z1", "z2", "a1"};
  for (int t = 0; t < 200; ++t) {
    MultiPoly p = random_poly(rng, vars);
    MultiPoly q = random_poly(rng, vars);
    EvaluationPoint pt({{"z1", testing_support::random_rational(rng)},
                        {"z2", testing_support::random_rational(rng)},
                        {"a1", testing_support::random_rational(rng)}});
    const Scalar pv = p.evaluate(pt);
    const Scalar qv = q.evaluate(pt);
    CHECK((p + q).evaluate(pt) == pv + qv);
    CHECK((p - q).evaluate(pt) == pv - qv);
    CHECK((p * q).evaluate(pt) == pv * qv);
  }
}

TEST_CASE("multipoly: exact division by a difference") {
  MultiPoly p = v("z1").pow(3) - v("z2").pow(3);
  MultiPoly quotient = divide_by_difference(p, "z1", "z2");
  CHECK(quotient == v("z1").pow(2) + v("z1") * v("z2") + v("z2").pow(2));
  try {
    (void)divide_by_difference(p + c(1), "z1", "z2");
    FAIL("expected InexactDivision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
}

TEST_CASE("multipoly: interpolation recovers coefficients") {
  // 3 - x + 2x^3 through 5 nodes: the x^4 coefficient must vanish.
  std::vector<Scalar> xs{Scalar(0), Scalar(1), Scalar(-2), Scalar(1, 2), Scalar(5)};
  std::vector<Scalar> ys;
  for (const auto& x : xs) ys.push_back(Scalar(3) - x + Scalar(2) * x.pow(3));
  auto coeffs = interpolate(xs, ys);
  REQUIRE(coeffs.size() == 5);
  CHECK(coeffs[0] == Scalar(3));
  CHECK(coeffs[1] == Scalar(-1));
  CHECK(coeffs[2] == Scalar(0));
  CHECK(coeffs[3] == Scalar(2));
  CHECK(coeffs[4] == Scalar(0));
}

TEST_CASE("multipoly: degree") {
  MultiPoly p = v("z1").pow(3) * v("a1") + v("a1").pow(2);
  CHECK(p.degree_in("z1") == 3);
  CHECK(p.degree_in("a1") == 2);
  CHECK(p.degree_in("q") == 0);
}

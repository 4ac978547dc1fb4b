#include <doctest.h>

#include "groth/errors.hpp"
#include "groth/report.hpp"
#include "groth/suite.hpp"
#include "groth/verifier.hpp"
#include "support.hpp"
#include "verifier/internal.hpp"

using namespace groth;
using testing_support::distinct_rationals;

namespace {

VerifyOptions opts(int points, std::uint64_t seed = 0) { return VerifyOptions{points, seed}; }

void require_verified(const IdentityReport& r, int points) {
  INFO(render_text({r}));
  CHECK(r.verified());
  CHECK(r.points == points);
  CHECK(r.failures.empty());
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

Scalar lattice_oplus(const Scalar& z, const Scalar& a) { return z + a - z * a; }

}  // namespace

TEST_CASE("guo-sun: degenerate and figure instances") {
  require_verified(verify_guo_sun(Partition({1, 1}), 2, 3, Scalar(-1), opts(10)), 10);
  require_verified(verify_guo_sun(Partition({2, 1}), 5, 5, Scalar(-1), opts(3)), 3);
  require_verified(verify_guo_sun(Partition({1}), 2, 2, Scalar(-1), opts(25)), 25);
  require_verified(verify_guo_sun(Partition({2, 0}), 3, 4, Scalar(3, 7), opts(5)), 5);
  CHECK(kind_of([] { verify_guo_sun(Partition({2}), 2, 2, Scalar(-1), opts(1)); }) == ErrorKind::ProfileViolation);
}

TEST_CASE("guo-sun: k = n has a single term") {
  std::mt19937_64 rng(1);
  auto z = distinct_rationals(rng, 3);
  FactorialAlphabet abc{distinct_rationals(rng, 6), Scalar(-1)};
  const Partition lambda({2, 1, 1});
  CHECK(guo_sun_rhs(lambda, z, abc, 3) == grothendieck_det(lambda, z, abc));
}

TEST_CASE("guo-sun: rectangular-compatible shape agrees with the worked example") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 25; ++t) {
    auto z = distinct_rationals(rng, 2);
    auto a = distinct_rationals(rng, 2);
    FactorialAlphabet abc{a, Scalar(-1)};
    const Scalar closed = (a[0] * a[1] - a[0] - a[1] + Scalar(1)) * (z[0] + z[1] - z[0] * z[1]) + a[0] + a[1] - a[0] * a[1];
    // lambda = (0) with k = 1 gives mu = (1, 0).
    CHECK(guo_sun_rhs(Partition({0}), z, abc, 2) == closed);
  }
}

TEST_CASE("rectangular") {
  require_verified(verify_rectangular(3, 3, 1, opts(25)), 25);
  require_verified(verify_rectangular(3, 2, 2, opts(5)), 5);
  auto symbolic = verify_rectangular(2, 2, 1, opts(1), Mode::Symbolic);
  require_verified(symbolic, 1);
  CHECK(symbolic.params.back() == std::pair<std::string, std::string>{"mode", "symbolic"});
  CHECK(rectangular_rhs_symbolic(2, 2, 1) == worked_example_closed_form());
  // k = m: every product is empty.
  std::vector<Scalar> z{Scalar(1, 2), Scalar(1, 3)}, alpha{Scalar(1, 5), Scalar(1, 7)};
  CHECK(rectangular_rhs(z, alpha, 2, 2) == Scalar(1));
}

TEST_CASE("duality") {
  require_verified(verify_duality(2, 3, 1, opts(25)), 25);
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto z = distinct_rationals(rng, n);
      auto a = distinct_rationals(rng, n);
      CHECK(duality_z_side(z, a, n, k) == duality_z_side(a, z, n, k));
      CHECK(rectangular_rhs(z, a, n, k) == rectangular_rhs(a, z, n, k));
    }
  }
  // k = 0: one term on each side.
  auto z = distinct_rationals(rng, 2);
  auto a = distinct_rationals(rng, 3);
  Scalar product(1);
  for (const auto& zj : z) {
    for (const auto& ai : a) product *= lattice_oplus(zj, ai);
  }
  CHECK(duality_z_side(z, a, 3, 0) == product);
  CHECK(rectangular_rhs(z, a, 3, 0) == product);
}

TEST_CASE("consistency triangle and worked example") {
  require_verified(verify_consistency_triangle(3, 2, 1, opts(5)), 5);
  auto worked = verify_worked_example();
  CHECK(worked.identity == "worked-example");
  CHECK(worked.verified());
}

TEST_CASE("q-deformed identity") {
  require_verified(verify_q_deformed(2, 2, 1, PositionVector({1}, 2), opts(10)), 10);
  require_verified(verify_q_deformed(2, 2, 2, PositionVector({1, 2}, 2), opts(5)), 5);
  require_verified(verify_q_deformed(3, 2, 1, PositionVector({2}, 2), opts(3)), 3);
  require_verified(verify_q_deformed(3, 3, 2, PositionVector({1, 3}, 3), opts(3)), 3);
}

TEST_CASE("commutation relations") {
  RelationSizes sizes;
  sizes.length = 3;
  require_verified(verify_commutation(Relation::BB3_6, sizes, opts(5)), 5);
  sizes.n = 3;
  sizes.k = 1;
  sizes.m = 3;
  require_verified(verify_commutation(Relation::Multi3_8, sizes, opts(2)), 2);
  sizes.ell = 2;
  require_verified(verify_commutation(Relation::State5_14, sizes, opts(5)), 5);
  for (Relation r : all_relations()) {
    CHECK(parse_relation(relation_label(r)) == r);
    RelationSizes small;
    small.length = 2;
    small.n = 2;
    small.m = 2;
    small.k = 1;
    require_verified(verify_commutation(r, small, opts(2)), 2);
  }
  CHECK(kind_of([] { parse_relation("9.9"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("correspondences") {
  CorrespondenceSizes sizes;
  sizes.n = 2;
  sizes.length = 4;
  sizes.lambda = Partition({0, 0});
  auto empty = verify_correspondence(Correspondence::C2_12, sizes, opts(5));
  require_verified(empty, 5);
  CorrespondenceSizes box;
  box.n = 3;
  box.length = 6;
  CHECK(verify_correspondence(Correspondence::C2_12, box, opts(3)).verified());
  CorrespondenceSizes rect;
  rect.n = 2;
  rect.m = 2;
  rect.k = 1;
  CHECK(verify_correspondence(Correspondence::C4_3, rect, opts(10)).verified());
  CHECK(parse_correspondence(correspondence_label(Correspondence::C5_16)) == Correspondence::C5_16);
}

TEST_CASE("prop 5.1") {
  auto reports = verify_prop51(3, 1, 2, opts(5));
  CHECK(reports.size() == 6);
  for (const auto& r : reports) CHECK(r.verified());
  auto with_base = verify_prop51(3, 2, 2, opts(5));
  CHECK(with_base.size() == 8);
  for (const auto& r : with_base) CHECK(r.verified());
}

TEST_CASE("lattice self-checks") {
  require_verified(verify_yang_baxter(opts(25)), 25);
  require_verified(verify_ice_rule(opts(25)), 25);
}

TEST_CASE("reports are deterministic") {
  auto a = verify_guo_sun(Partition({1}), 3, 3, Scalar(-1), opts(5, 42));
  auto b = verify_guo_sun(Partition({1}), 3, 3, Scalar(-1), opts(5, 42));
  CHECK(render_json({a}) == render_json({b}));
  auto c = verify_guo_sun(Partition({1}), 3, 3, Scalar(-1), opts(5, 43));
  CHECK(a.verified() == c.verified());
}

TEST_CASE("a wrong formula is caught") {
  detail::ReportBuilder builder("mutant", {{"n", "2"}, {"m", "2"}});
  const VerifyOptions o = opts(10);
  auto zs = numbered("z", 2);
  auto as = numbered("a", 3);
  for (int p = 0; p < o.points; ++p) {
    auto point = detail::sample_indexed(builder, o, p, detail::concat(zs, as), {constraint::Distinct{zs}});
    builder.begin_point(point);
    FactorialAlphabet abc{point.family("a", 3), Scalar(-1)};
    auto z = point.family("z", 2);
    // Off-by-one m on the right-hand side.
    builder.expect_equal("guo-sun", grothendieck_det(build_mu(Partition({1}), 2, 2), z, abc),
                         guo_sun_rhs(Partition({1}), z, abc, 3));
  }
  IdentityReport r = std::move(builder).finish();
  CHECK(r.points == 10);
  CHECK(r.failures.size() == 10);
  CHECK(r.verdict() == Verdict::Failed);
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].check == "guo-sun");
  CHECK(r.failures[0].assignment.size() == 5);
  CHECK(r.failures[0].assignment[0].first == "z1");
  CHECK(r.failures[0].lhs != r.failures[0].rhs);
  // The failure reproduces from the report alone.
  std::vector<std::pair<std::string, Scalar>> values;
  for (const auto& [name, text] : r.failures[0].assignment) values.emplace_back(name, Scalar::parse(text));
  EvaluationPoint replay(values);
  FactorialAlphabet abc{replay.family("a", 3), Scalar(-1)};
  CHECK(grothendieck_det(Partition({1, 1}), replay.family("z", 2), abc).to_string() == r.failures[0].lhs);
}

TEST_CASE("verdict requires at least one point") {
  IdentityReport r;
  r.identity = "x";
  CHECK(r.verdict() == Verdict::Failed);
  r.points = 1;
  CHECK(r.verdict() == Verdict::Verified);
  r.failures.push_back(Failure{{{"z1", "1/2"}}, "1", "2", "c"});
  CHECK(r.verdict() == Verdict::Failed);
  CHECK(verdict_name(Verdict::Verified) == "verified-at-all-points");
  CHECK(verdict_name(Verdict::Failed) == "failed");
}

TEST_CASE("report JSON round trip") {
  IdentityReport failing;
  failing.identity = "guo-sun";
  failing.params = {{"n", "2"}, {"lambda", "1"}};
  failing.points = 3;
  failing.failures.push_back(Failure{{{"z1", "1/2"}, {"a1", "-3/4"}}, "5/6", "7/8", "lhs = rhs"});
  auto passing = verify_duality(2, 2, 1, opts(3));
  for (const auto& r : {failing, passing}) {
    auto j = to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(to_json(report_from_json(j)).dump() == j.dump());
  }
  auto j = to_json(failing);
  CHECK(j["verdict"] == "failed");
  CHECK(j["failures"][0]["assignment"]["a1"] == "-3/4");
  j["verdict"] = "verified-at-all-points";
  CHECK(kind_of([&] { report_from_json(j); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { report_from_json(nlohmann::ordered_json::parse(R"({"identity":1})")); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("renderers") {
  auto r = verify_duality(2, 2, 1, opts(2));
  CHECK(render_csv({r}) == "identity,params,points,failures,verdict\nduality,n=2;m=2;k=1,2,0,verified-at-all-points\n");
  CHECK(render_json({r}).front() == '{');
  CHECK(render_json({r, r}).front() == '[');
}

TEST_CASE("suite with a small cap") {
  SuiteOptions o;
  o.seed = 3;
  o.max_n = 1;
  auto results = run_suite(o);
  CHECK(results.size() == static_cast<size_t>(kSuiteCriteria));
  for (const auto& c : results) CHECK(c.passed());
  CHECK(render_suite_json(results, o) == render_suite_json(run_suite(o), o));
}

// Determinant-side identities: Guo-Sun, the rectangular expansion and the
// duality formula, all evaluated without touching the lattice.

#include <algorithm>

#include "groth/errors.hpp"
#include "groth/verifier.hpp"
#include "internal.hpp"

namespace groth {

using detail::ReportBuilder;
using detail::str;

namespace {

const Scalar kBetaLattice(-1);

std::vector<Scalar> pick(std::span<const Scalar> values, const std::vector<int>& one_based) {
  std::vector<Scalar> out;
  out.reserve(one_based.size());
  for (int i : one_based) out.push_back(values[i - 1]);
  return out;
}

// prod_{i in S, j in S-bar} (v_j - v_i)
Scalar cross_difference(std::span<const Scalar> v, const SubsetSplit& split) {
  Scalar out(1);
  for (int i : split.chosen) {
    for (int j : split.complement) out *= v[j - 1] - v[i - 1];
  }
  return out;
}

FactorialAlphabet lattice_alphabet(std::vector<Scalar> alphas) { return FactorialAlphabet{std::move(alphas), kBetaLattice}; }

Partition rectangle_shape(int n, int m, int k) {
  return Partition::rectangle(m - k, n - k).followed_by(Partition::rectangle(0, k));
}

void check_rectangular_sizes(int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0 || k > std::min(n, m)) {
    throw Error(ErrorKind::InvalidArgument, "need 0 <= k <= min(n, m), got n=" + str(n) + " m=" + str(m) + " k=" + str(k));
  }
}

}  // namespace

Scalar guo_sun_rhs(const Partition& lambda, std::span<const Scalar> z, const FactorialAlphabet& alphabet, int m) {
  const int n = static_cast<int>(z.size());
  const int k = lambda.length();
  Scalar total(0);
  for (const auto& split : k_subsets(n, k)) {
    auto zs = pick(z, split.chosen);
    Scalar term = grothendieck_det(lambda, zs, alphabet);
    for (const auto& zi : zs) term *= (Scalar(1) + alphabet.beta * zi).pow(n - k);
    for (int j : split.complement) term *= factorial_power(z[j - 1], alphabet, m);
    total += term / cross_difference(z, split);
  }
  return total;
}

Scalar rectangular_rhs(std::span<const Scalar> z, std::span<const Scalar> alpha, int m, int k) {
  if (static_cast<int>(alpha.size()) < m) throw Error(ErrorKind::AlphabetTooShort, "rectangular sum reads alpha_1..alpha_" + str(m));
  Scalar total(0);
  for (const auto& split : k_subsets(m, k)) {
    Scalar term(1);
    for (int i : split.chosen) term *= (Scalar(1) - alpha[i - 1]).pow(m - k);
    for (int j : split.complement) {
      for (const auto& zi : z) term *= oplus(zi, alpha[j - 1], kBetaLattice);
    }
    total += term / cross_difference(alpha, split);
  }
  return total;
}

Scalar duality_z_side(std::span<const Scalar> z, std::span<const Scalar> alpha, int m, int k) {
  if (static_cast<int>(alpha.size()) < m) throw Error(ErrorKind::AlphabetTooShort, "duality sum reads alpha_1..alpha_" + str(m));
  const int n = static_cast<int>(z.size());
  Scalar total(0);
  for (const auto& split : k_subsets(n, k)) {
    Scalar term(1);
    for (int i : split.chosen) term *= (Scalar(1) - z[i - 1]).pow(n - k);
    for (int j : split.complement) {
      for (int i = 0; i < m; ++i) term *= oplus(z[j - 1], alpha[i], kBetaLattice);
    }
    total += term / cross_difference(z, split);
  }
  return total;
}

MultiPoly rectangular_rhs_symbolic(int n, int m, int k) {
  check_rectangular_sizes(n, m, k);
  auto zs = numbered("z", n);
  auto as = numbered("a", m);
  if (n + m > kSymbolicVariableBudget) {
    throw Error(ErrorKind::BudgetExceeded, "symbolic expansion needs " + str(n + m) + " variables, budget is " +
                                               str(kSymbolicVariableBudget));
  }
  auto order = detail::concat(zs, as);
  auto var = [&](const std::string& name) { return MultiPoly::variable(name).over(order); };
  auto one = MultiPoly::constant(Scalar(1)).over(order);

  // Each denominator divides D = prod_{i<j}(a_j - a_i); sum the terms over D
  // and divide once at the end so every division is exact.
  MultiPoly numerator(order);
  for (const auto& split : k_subsets(m, k)) {
    MultiPoly term = one;
    for (int i : split.chosen) term *= (one - var(as[i - 1])).pow(static_cast<unsigned>(m - k));
    for (int j : split.complement) {
      for (const auto& z : zs) term *= var(z) + var(as[j - 1]) - var(z) * var(as[j - 1]);
    }
    std::vector<bool> in_s(m + 1, false);
    for (int i : split.chosen) in_s[i] = true;
    Scalar sign(1);
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        if (in_s[i] == in_s[j]) {
          term *= var(as[j - 1]) - var(as[i - 1]);
        } else if (!in_s[i]) {
          sign = -sign;  // pair appears as (a_i - a_j) in the denominator
        }
      }
    }
    numerator += sign * term;
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) numerator = divide_by_difference(numerator, as[j - 1], as[i - 1]);
  }
  return numerator.over(order);
}

MultiPoly worked_example_closed_form() {
  std::vector<std::string> order{"z1", "z2", "a1", "a2"};
  auto v = [&](const char* name) { return MultiPoly::variable(name).over(order); };
  auto one = MultiPoly::constant(Scalar(1)).over(order);
  MultiPoly alpha_part = v("a1") * v("a2") - v("a1") - v("a2") + one;
  MultiPoly z_part = v("z1") + v("z2") - v("z1") * v("z2");
  return (alpha_part * z_part + v("a1") + v("a2") - v("a1") * v("a2")).over(order);
}

IdentityReport verify_guo_sun(const Partition& lambda, int n, int m, const Scalar& beta, const VerifyOptions& opts) {
  const int k = lambda.length();
  Partition mu = build_mu(lambda, m, n);
  ReportBuilder report("guo-sun", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"lambda", lambda.to_list()},
                                   {"beta", beta.to_string()}});
  const int alphabet_length = m + n - k;
  auto zs = numbered("z", n);
  auto as = numbered("a", alphabet_length);
  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, detail::concat(zs, as), {constraint::Distinct{zs}});
    report.begin_point(point);
    auto z = point.family("z", n);
    FactorialAlphabet alphabet{point.family("a", alphabet_length), beta};
    report.expect_equal("G_mu = subset sum", grothendieck_det(mu, z, alphabet), guo_sun_rhs(lambda, z, alphabet, m));
  }
  return std::move(report).finish();
}

IdentityReport verify_rectangular(int n, int m, int k, const VerifyOptions& opts, Mode mode) {
  check_rectangular_sizes(n, m, k);
  Partition mu = rectangle_shape(n, m, k);
  const int alphabet_length = std::max(m, required_alphabet_length(mu));
  NamedValues params{{"n", str(n)}, {"m", str(m)}, {"k", str(k)}};
  if (mode == Mode::Symbolic) {
    params.emplace_back("mode", "symbolic");
    ReportBuilder report("rectangular", params);
    report.begin_point(EvaluationPoint{});
    MultiPoly lhs = grothendieck_symbolic(mu, alphabet_length, kBetaLattice);
    MultiPoly rhs = rectangular_rhs_symbolic(n, m, k);
    auto order = symbolic_variables(n, alphabet_length, false);
    report.expect("coefficient-wise", lhs == rhs, lhs.to_string(order), rhs.over(order).to_string(order));
    return std::move(report).finish();
  }
  ReportBuilder report("rectangular", params);
  auto zs = numbered("z", n);
  auto as = numbered("a", alphabet_length);
  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, detail::concat(zs, as),
                                        {constraint::Distinct{zs}, constraint::Distinct{numbered("a", m)}});
    report.begin_point(point);
    auto z = point.family("z", n);
    auto alpha = point.family("a", alphabet_length);
    report.expect_equal("G_rect = alpha subset sum", grothendieck_det(mu, z, lattice_alphabet(alpha)),
                        rectangular_rhs(z, alpha, m, k));
  }
  return std::move(report).finish();
}

IdentityReport verify_duality(int n, int m, int k, const VerifyOptions& opts) {
  check_rectangular_sizes(n, m, k);
  ReportBuilder report("duality", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}});
  auto zs = numbered("z", n);
  auto as = numbered("a", m);
  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, detail::concat(zs, as),
                                        {constraint::Distinct{zs}, constraint::Distinct{as}});
    report.begin_point(point);
    auto z = point.family("z", n);
    auto alpha = point.family("a", m);
    report.expect_equal("z-side = alpha-side", duality_z_side(z, alpha, m, k), rectangular_rhs(z, alpha, m, k));
  }
  return std::move(report).finish();
}

IdentityReport verify_consistency_triangle(int n, int m, int k, const VerifyOptions& opts) {
  check_rectangular_sizes(n, m, k);
  Partition mu = rectangle_shape(n, m, k);
  const int alphabet_length = std::max(m, required_alphabet_length(mu));
  ReportBuilder report("consistency-triangle", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}});
  auto zs = numbered("z", n);
  auto as = numbered("a", alphabet_length);
  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, detail::concat(zs, as),
                                        {constraint::Distinct{zs}, constraint::Distinct{numbered("a", m)}});
    report.begin_point(point);
    auto z = point.family("z", n);
    auto alpha = point.family("a", alphabet_length);
    auto alphabet = lattice_alphabet(alpha);
    Scalar det = grothendieck_det(mu, z, alphabet);
    report.expect_equal("determinant = Guo-Sun(0^k)", det, guo_sun_rhs(Partition::rectangle(0, k), z, alphabet, m));
    report.expect_equal("determinant = rectangular", det, rectangular_rhs(z, alpha, m, k));
    report.expect_equal("determinant = duality z-side", det, duality_z_side(z, alpha, m, k));
  }
  return std::move(report).finish();
}

IdentityReport verify_worked_example() {
  ReportBuilder report("worked-example", {{"n", "2"}, {"m", "2"}, {"k", "1"}, {"beta", "-1"}});
  report.begin_point(EvaluationPoint{});
  const auto order = symbolic_variables(2, 2, false);
  MultiPoly closed = worked_example_closed_form();
  MultiPoly rhs = rectangular_rhs_symbolic(2, 2, 1);
  MultiPoly det = grothendieck_symbolic(Partition({1, 0}), 2, kBetaLattice);
  report.expect("subset sum = closed form", rhs == closed, rhs.to_string(order), closed.to_string(order));
  report.expect("determinant = closed form", det == closed, det.to_string(order), closed.to_string(order));
  return std::move(report).finish();
}

}  // namespace groth

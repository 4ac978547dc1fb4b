// q-deformed expansion of F over y-vectors and nested index tuples.

#include <algorithm>
#include <functional>

#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/symfuncs.hpp"
#include "groth/verifier.hpp"
#include "internal.hpp"

namespace groth {

using detail::ReportBuilder;
using detail::str;

std::vector<NestedTerm> nested_expansion(std::span<const Scalar> u, std::span<const Scalar> w, const PositionVector& y,
                                         const Scalar& q) {
  const int steps = y.count();
  if (y.chain_length() != static_cast<int>(u.size())) {
    throw Error(ErrorKind::InvalidArgument, "y must lie in [1, |u|]");
  }
  std::vector<NestedTerm> out;
  std::vector<int> chosen;
  auto taken = [&](int b) { return std::find(chosen.begin(), chosen.end(), b) != chosen.end(); };

  std::function<void(int, Scalar)> descend = [&](int j, Scalar coefficient) {
    if (j == steps) {
      out.push_back(NestedTerm{coefficient, chosen});
      return;
    }
    const int bound = y[j];
    for (int a = 1; a <= bound; ++a) {
      if (taken(a)) continue;
      const Scalar& ua = u[a - 1];
      Scalar c = coefficient;
      for (const auto& wi : w) c *= ua - wi;
      // Numerator skips a_1..a_{j-1}; the denominator also skips a_j itself.
      for (int b = 1; b <= bound - 1; ++b) {
        if (!taken(b)) c *= ua - q * u[b - 1];
      }
      for (int b = 1; b <= bound; ++b) {
        if (b == a || taken(b)) continue;
        Scalar d = ua - u[b - 1];
        if (d.is_zero()) {
          throw Error(ErrorKind::CoincidentVariables, "u" + str(a) + " = u" + str(b) + " = " + ua.to_string());
        }
        c /= d;
      }
      chosen.push_back(a);
      descend(j + 1, c);
      chosen.pop_back();
    }
  };
  descend(0, Scalar(1));
  return out;
}

IdentityReport verify_q_deformed(int n, int m, int k, const PositionVector& x, const VerifyOptions& opts) {
  if (n < 0 || m < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::InvalidArgument, "need 0 <= k <= n, got n=" + str(n) + " k=" + str(k));
  }
  if (x.count() != k || x.chain_length() != m) {
    throw Error(ErrorKind::InvalidArgument, "x must have k=" + str(k) + " entries on [1, m=" + str(m) + "]");
  }
  const int length = m + n - k;
  std::vector<int> full = x.positions();
  for (int s = m + 1; s <= length; ++s) full.push_back(s);
  const PositionVector full_x(full, length);

  ReportBuilder report("q-deformed", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"x", x.to_string()}});
  auto us = numbered("u", n);
  auto ws = numbered("w", length);
  std::vector<std::string> vars = detail::concat(us, ws);
  vars.push_back("q");
  const std::vector<Constraint> constraints{constraint::Distinct{us}, constraint::Nonzero{us}, constraint::Distinct{ws},
                                            constraint::Avoid{"q", Scalar(0)}, constraint::Avoid{"q", Scalar(1)}};
  const auto y_vectors = all_positions(n - k, n);

  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, vars, constraints);
    report.begin_point(point);
    const auto u = point.family("u", n);
    const auto w = point.family("w", length);
    const Scalar& q = point.at("q");
    const std::span<const Scalar> w_left(w.data(), m);
    const std::span<const Scalar> w_right(w.data() + m, length - m);

    Scalar lhs = symmetric_F(u, w, full_x, q);
    report.expect_equal("F = W (lattice)", lhs, wavefunction(u, w, full_x, q));

    Scalar rhs(0);
    for (const auto& y : y_vectors) {
      Scalar f_bar = symmetric_F_bar(w_right, u, y, q);
      if (f_bar.is_zero()) continue;
      for (const auto& term : nested_expansion(u, w_left, y, q)) {
        std::vector<Scalar> rest;
        for (int i = 1; i <= n; ++i) {
          if (std::find(term.removed.begin(), term.removed.end(), i) == term.removed.end()) rest.push_back(u[i - 1]);
        }
        rhs += term.coefficient * f_bar * symmetric_F(rest, w_left, x, q);
      }
    }
    report.expect_equal("F = nested sum", lhs, rhs);
  }
  return std::move(report).finish();
}

}  // namespace groth

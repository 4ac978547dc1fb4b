// Izergin-Korepin characterization of the barred wavefunction, run against
// the lattice and the permutation sum separately.

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

namespace {

using BarredFn = std::function<Scalar(std::span<const Scalar>, std::span<const Scalar>, const PositionVector&, const Scalar&)>;

struct Route {
  const char* name;
  BarredFn f;
};

std::vector<Route> routes() {
  return {
      {"lattice", [](auto w, auto u, const PositionVector& y, const Scalar& q) { return barred_wavefunction(w, u, y, q); }},
      {"symfunc", [](auto w, auto u, const PositionVector& y, const Scalar& q) { return symmetric_F_bar(w, u, y, q); }},
  };
}

PositionVector drop_last(const PositionVector& y) {
  std::vector<int> head(y.positions().begin(), y.positions().end() - 1);
  return PositionVector(head, y.chain_length() - 1);
}

PositionVector shrink_chain(const PositionVector& y) { return PositionVector(y.positions(), y.chain_length() - 1); }

}  // namespace

std::vector<IdentityReport> verify_prop51(int n, int k, int m, const VerifyOptions& opts) {
  const int width = n - k;
  if (k < 0 || width < 1) throw Error(ErrorKind::InvalidArgument, "need n - k >= 1, got n=" + str(n) + " k=" + str(k));
  if (n > kMaxChainLength) throw Error(ErrorKind::BudgetExceeded, "n=" + str(n) + " exceeds the chain budget");
  const auto ys = all_positions(width, n);
  const int nodes = width + 2;

  auto us = numbered("u", n);
  auto ws = numbered("w", width, m + 1);
  auto ts = numbered("t", nodes);
  std::vector<std::string> vars = detail::concat(detail::concat(us, ws), ts);
  vars.push_back("q");
  const std::vector<Constraint> constraints{constraint::Distinct{ws}, constraint::Distinct{ts},
                                            constraint::Avoid{"q", Scalar(0)}, constraint::Avoid{"q", Scalar(1)}};

  std::vector<IdentityReport> out;
  for (const auto& route : routes()) {
    auto params = [&](int clause) {
      return NamedValues{{"n", str(n)}, {"k", str(k)}, {"m", str(m)}, {"clause", str(clause)}, {"route", route.name}};
    };
    ReportBuilder degree("prop51", params(1));
    ReportBuilder symmetry("prop51", params(2));
    ReportBuilder recursion("prop51", params(3));
    ReportBuilder base("prop51", params(4));
    // All clauses share one stream of points so the routes see identical inputs.
    ReportBuilder seeds("prop51", {{"n", str(n)}, {"k", str(k)}, {"m", str(m)}});

    for (int p = 0; p < opts.points; ++p) {
      auto point = detail::sample_indexed(seeds, opts, p, vars, constraints);
      const auto u = point.family("u", n);
      std::vector<Scalar> w;  // w_{m+1}..w_{m+n-k}
      for (const auto& name : ws) w.push_back(point.at(name));
      const Scalar& q = point.at("q");
      const Scalar& w_last = w.back();

      degree.begin_point(point);
      symmetry.begin_point(point);
      recursion.begin_point(point);
      if (width == 1) base.begin_point(point);

      for (const auto& y : ys) {
        const std::string tag = " y=" + y.to_string();
        const Scalar value = route.f(w, u, y, q);
        const bool ends_at_n = y[width - 1] == n;

        if (ends_at_n) {
          std::vector<Scalar> xs = point.family("t", nodes);
          std::vector<Scalar> values;
          for (const auto& t : xs) {
            auto shifted = u;
            shifted.back() = t;
            values.push_back(route.f(w, shifted, y, q));
          }
          auto coeffs = interpolate(xs, values);
          degree.expect("degree in u_n" + tag, coeffs[width + 1].is_zero() && !coeffs[width].is_zero(),
                        "c" + str(width + 1) + "=" + coeffs[width + 1].to_string() + " c" + str(width) + "=" +
                            coeffs[width].to_string(),
                        "degree " + str(width));
        }

        auto permuted = w;
        std::sort(permuted.begin(), permuted.end());
        do {
          if (permuted != w) symmetry.expect_equal("w-permutation" + tag, route.f(permuted, u, y, q), value);
        } while (std::next_permutation(permuted.begin(), permuted.end()));

        const std::span<const Scalar> u_head(u.data(), n - 1);
        if (ends_at_n) {
          auto at_zero = u;
          at_zero.back() = Scalar(0);
          recursion.expect_equal("u_n = 0" + tag, route.f(w, at_zero, y, q), Scalar(0));

          auto at_w = u;
          at_w.back() = w_last;
          Scalar factor = (Scalar(1) - q) * w_last;
          for (int j = 0; j + 1 < width; ++j) factor *= w_last - q * w[j];
          for (int j = 0; j + 1 < n; ++j) factor *= u[j] - q * w_last;
          const std::span<const Scalar> w_head(w.data(), width - 1);
          recursion.expect_equal("u_n = w_last" + tag, route.f(w, at_w, y, q),
                                 factor * route.f(w_head, u_head, drop_last(y), q));
        } else {
          Scalar factor(1);
          for (const auto& wj : w) factor *= q * (u.back() - wj);
          recursion.expect_equal("factorization" + tag, value, factor * route.f(w, u_head, shrink_chain(y), q));
        }

        if (width == 1 && ends_at_n) {
          Scalar expected = (Scalar(1) - q) * u.back();
          for (int j = 0; j + 1 < n; ++j) expected *= u[j] - q * w[0];
          base.expect_equal("base case" + tag, value, expected);
        }
      }
    }
    out.push_back(std::move(degree).finish());
    out.push_back(std::move(symmetry).finish());
    out.push_back(std::move(recursion).finish());
    if (width == 1) out.push_back(std::move(base).finish());
  }
  return out;
}

}  // namespace groth

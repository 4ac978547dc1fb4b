// Lattice wavefunctions against the symmetric-function and determinant
// routes, including the frozen-region factorizations used along the way.

#include <algorithm>
#include <array>

#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/symfuncs.hpp"
#include "groth/verifier.hpp"
#include "internal.hpp"

namespace groth {

using detail::ReportBuilder;
using detail::str;
using E = MonodromyEntry;

namespace {

struct CorrespondenceInfo {
  Correspondence which;
  const char* label;
};

constexpr std::array<CorrespondenceInfo, 8> kCorrespondences{{
    {Correspondence::C2_10, "2.10"},
    {Correspondence::C2_12, "2.12"},
    {Correspondence::C3_1, "3.1"},
    {Correspondence::C3_13, "3.13"},
    {Correspondence::C4_3, "4.3"},
    {Correspondence::C5_1, "5.1"},
    {Correspondence::C5_4, "5.4"},
    {Correspondence::C5_16, "5.16"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void require_chain(int length) {
  require(length >= 0 && length <= kMaxChainLength,
          "chain length " + str(length) + " outside [0, " + str(kMaxChainLength) + "]");
}

void require_nmk(const CorrespondenceSizes& s) {
  require(s.n >= 0 && s.m >= 0 && s.k >= 0 && s.k <= std::min(s.n, s.m),
          "need 0 <= k <= min(n, m), got n=" + str(s.n) + " m=" + str(s.m) + " k=" + str(s.k));
  require_chain(s.m + s.n - s.k);
}

std::vector<Scalar> pick(const std::vector<Scalar>& values, const std::vector<int>& one_based) {
  std::vector<Scalar> out;
  for (int i : one_based) out.push_back(values[i - 1]);
  return out;
}

FactorialAlphabet alphabet_from_w(const std::vector<Scalar>& w) {
  return FactorialAlphabet{detail::map_all(w, VariableMap::WToAlpha), Scalar(-1)};
}

// <x| (rows applied bottom to top) |Omega> on the chain w.
Scalar row_string(const std::vector<Scalar>& u, const std::vector<Scalar>& w, const std::vector<std::pair<E, int>>& rows,
                  const PositionVector& x, const Scalar& q) {
  SpinState v = SpinState::vacuum(static_cast<int>(w.size()));
  for (const auto& [entry, j] : rows) v = Monodromy::row(u[j - 1], w, q).apply(entry, v);
  return v.pair_with(configuration_bra(x));
}

PositionVector with_tail(const PositionVector& x, int m, int n, int k) {
  std::vector<int> full = x.positions();
  for (int s = m + 1; s <= m + n - k; ++s) full.push_back(s);
  return PositionVector(full, m + n - k);
}

struct Sampler {
  ReportBuilder& report;
  const VerifyOptions& opts;
  std::vector<std::string> vars;
  std::vector<Constraint> constraints;

  EvaluationPoint next(int p) const { return detail::sample_indexed(report, opts, p, vars, constraints); }
};

Sampler lattice_sampler(ReportBuilder& report, const VerifyOptions& opts, int us, int ws, bool with_q) {
  Sampler s{report, opts, {}, {}};
  auto u = numbered("u", us);
  s.vars = detail::concat(u, numbered("w", ws));
  s.constraints = {constraint::Distinct{u}, constraint::Nonzero{u}};
  if (with_q) {
    s.vars.push_back("q");
    s.constraints.push_back(constraint::Avoid{"q", Scalar(0)});
    s.constraints.push_back(constraint::Avoid{"q", Scalar(1)});
  }
  return s;
}

std::vector<Partition> shapes_or(const std::optional<Partition>& given, int length, int max_part) {
  if (given) {
    require(given->length() == length, "lambda must have " + str(length) + " parts");
    return {*given};
  }
  return partitions_in_box(length, max_part);
}

std::vector<PositionVector> positions_or(const std::optional<PositionVector>& given, int count, int chain) {
  if (given) {
    require(given->count() == count && given->chain_length() == chain,
            "x must have " + str(count) + " entries on [1, " + str(chain) + "]");
    return {*given};
  }
  return all_positions(count, chain);
}

std::string describe_shape(const std::optional<Partition>& lambda) { return lambda ? lambda->to_list() : "all"; }
std::string describe_x(const std::optional<PositionVector>& x) { return x ? x->to_string() : "all"; }

IdentityReport check_2_10(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require(s.n >= 0 && s.n <= s.length, "need 0 <= n <= L");
  require_chain(s.length);
  ReportBuilder report("correspondence:2.10", {{"n", str(s.n)}, {"L", str(s.length)}, {"x", describe_x(s.x)}});
  const auto xs = positions_or(s.x, s.n, s.length);
  auto sampler = lattice_sampler(report, opts, s.n, s.length, true);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", s.n);
    auto w = point.family("w", s.length);
    const Scalar& q = point.at("q");
    for (const auto& x : xs) report.expect_equal("W = F at x=" + x.to_string(), wavefunction(u, w, x, q), symmetric_F(u, w, x, q));
  }
  return std::move(report).finish();
}

IdentityReport check_2_12(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require(s.n >= 0 && s.n <= s.length, "need 0 <= n <= L");
  require_chain(s.length);
  ReportBuilder report("correspondence:2.12",
                       {{"n", str(s.n)}, {"L", str(s.length)}, {"lambda", describe_shape(s.lambda)}, {"q", "0"}});
  const auto shapes = shapes_or(s.lambda, s.n, s.length - s.n);
  auto sampler = lattice_sampler(report, opts, s.n, s.length, false);
  const Scalar q(0);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", s.n);
    auto w = point.family("w", s.length);
    auto z = detail::map_all(u, VariableMap::UToZ);
    auto alphabet = alphabet_from_w(w);
    const Scalar prefactor = detail::product_of_powers(u, s.length);
    for (const auto& lambda : shapes) {
      const auto x = positions_from_partition(lambda, s.length);
      Scalar g = prefactor * grothendieck_det(lambda, z, alphabet);
      report.expect_equal("W = prod u^L G at lambda=" + lambda.to_list(), wavefunction(u, w, x, q), g);
      report.expect_equal("F = prod u^L G at lambda=" + lambda.to_list(), symmetric_F(u, w, x, q), g);
    }
  }
  return std::move(report).finish();
}

IdentityReport check_3_1(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require_nmk(s);
  const int n = s.n, m = s.m, k = s.k, L = m + n - k;
  ReportBuilder report("correspondence:3.1",
                       {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"lambda", describe_shape(s.lambda)}, {"q", "0"}});
  const auto shapes = shapes_or(s.lambda, k, m - k);
  auto sampler = lattice_sampler(report, opts, n, L, false);
  const Scalar q(0);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", n);
    auto w = point.family("w", L);
    auto z = detail::map_all(u, VariableMap::UToZ);
    const std::vector<Scalar> w_left(w.begin(), w.begin() + m);
    for (const auto& lambda : shapes) {
      const Partition mu = build_mu(lambda, m, n);
      const auto x_left = positions_from_partition(lambda, m);
      const auto x = with_tail(x_left, m, n, k);
      const std::string tag = " at lambda=" + lambda.to_list();
      Scalar wave = wavefunction(u, w, x, q);
      report.expect_equal("W = prod u^L G_mu" + tag, wave,
                          detail::product_of_powers(u, L) * grothendieck_det(mu, z, alphabet_from_w(w)));
      // Frozen right block: the first k rows carry B, the rest D, on w_1..w_m.
      std::vector<std::pair<E, int>> rows;
      for (int j = 1; j <= k; ++j) rows.emplace_back(E::B, j);
      for (int j = k + 1; j <= n; ++j) rows.emplace_back(E::D, j);
      report.expect_equal("W = prod u^(n-k) <x|prod D prod B|Omega>" + tag, wave,
                          detail::product_of_powers(u, n - k) * row_string(u, w_left, rows, x_left, q));
    }
  }
  return std::move(report).finish();
}

IdentityReport check_3_13(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require_nmk(s);
  const int n = s.n, m = s.m, k = s.k;
  ReportBuilder report("correspondence:3.13",
                       {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"lambda", describe_shape(s.lambda)}, {"q", "0"}});
  const auto shapes = shapes_or(s.lambda, k, m - k);
  auto sampler = lattice_sampler(report, opts, n, m, false);
  const Scalar q(0);
  const auto splits = k_subsets(n, k);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", n);
    auto w = point.family("w", m);
    auto alphabet = alphabet_from_w(w);
    for (const auto& lambda : shapes) {
      const auto x = positions_from_partition(lambda, m);
      for (const auto& split : splits) {
        std::vector<std::pair<E, int>> rows;
        for (int i : split.chosen) rows.emplace_back(E::B, i);
        auto us = pick(u, split.chosen);
        Scalar rhs = detail::product_of_powers(us, m) * grothendieck_det(lambda, detail::map_all(us, VariableMap::UToZ), alphabet);
        report.expect_equal("lambda=" + lambda.to_list() + " S=" + PositionVector(split.chosen, n).to_string(),
                            row_string(u, w, rows, x, q), rhs);
      }
    }
  }
  return std::move(report).finish();
}

IdentityReport check_4_3(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require_nmk(s);
  const int n = s.n, m = s.m, k = s.k, L = m + n - k;
  ReportBuilder report("correspondence:4.3", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"q", "0"}});
  auto sampler = lattice_sampler(report, opts, n, L, false);
  sampler.constraints.push_back(constraint::Distinct{numbered("w", m)});
  const Scalar q(0);
  std::vector<int> left(k);
  for (int i = 0; i < k; ++i) left[i] = i + 1;
  const auto x = with_tail(PositionVector(left, m), m, n, k);
  const Partition mu = Partition::rectangle(m - k, n - k).followed_by(Partition::rectangle(0, k));
  Basis bra_bits = 0;
  for (int site = k + 1; site <= n; ++site) bra_bits |= Basis{1} << (site - 1);
  const Basis all_ones = n == 0 ? 0 : (Basis{1} << n) - 1;

  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", n);
    auto w = point.family("w", L);
    auto z = detail::map_all(u, VariableMap::UToZ);
    Scalar wave = wavefunction(u, w, x, q);
    report.expect_equal("W = prod u^L G_rect", wave,
                        detail::product_of_powers(u, L) * grothendieck_det(mu, z, alphabet_from_w(w)));

    // Column picture on the n auxiliary rows: C-bar for w_1..w_k, then A-bar.
    SpinState v = SpinState::basis(n, all_ones);
    for (int j = 1; j <= k; ++j) v = Monodromy::column(w[j - 1], u, q).apply(E::C, v);
    report.expect_equal("frozen <0^k 1^(n-k)|prod C|Omega-bar>", v.amplitude(bra_bits), detail::product_of_powers(u, k));
    for (int j = k + 1; j <= m; ++j) v = Monodromy::column(w[j - 1], u, q).apply(E::A, v);
    report.expect_equal("W = prod u^(n-k) <0^k 1^(n-k)|prod A prod C|Omega-bar>", wave,
                        detail::product_of_powers(u, n - k) * v.amplitude(bra_bits));

    Scalar sum(0);
    for (const auto& split : k_subsets(m, k)) {
      Scalar term(1);
      for (int i : split.chosen) {
        for (int j : split.complement) term *= w[i - 1] / (w[i - 1] - w[j - 1]);
      }
      for (int j : split.complement) {
        for (const auto& ui : u) term *= ui - w[j - 1];
      }
      sum += term;
    }
    report.expect_equal("W = prod u^n subset sum", wave, detail::product_of_powers(u, n) * sum);
  }
  return std::move(report).finish();
}

IdentityReport check_5_1(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require_nmk(s);
  const int n = s.n, m = s.m, k = s.k, L = m + n - k;
  ReportBuilder report("correspondence:5.1", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"x", describe_x(s.x)}});
  const auto xs = positions_or(s.x, k, m);
  auto sampler = lattice_sampler(report, opts, n, L, true);
  const auto ys = all_positions(n - k, n);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", n);
    auto w = point.family("w", L);
    const Scalar& q = point.at("q");
    const std::vector<Scalar> w_left(w.begin(), w.begin() + m);
    const std::vector<Scalar> w_right(w.begin() + m, w.end());
    for (const auto& x_left : xs) {
      const auto x = with_tail(x_left, m, n, k);
      Scalar wave = wavefunction(u, w, x, q);
      report.expect_equal("W = F at x=" + x.to_string(), wave, symmetric_F(u, w, x, q));
      Scalar split_sum(0);
      for (const auto& y : ys) {
        std::vector<std::pair<E, int>> rows;
        for (int j = 1; j <= n; ++j) rows.emplace_back(y.contains(j) ? E::D : E::B, j);
        split_sum += barred_wavefunction(w_right, u, y, q) * row_string(u, w_left, rows, x_left, q);
      }
      report.expect_equal("W = sum_y W-bar * <x|string|Omega> at x=" + x.to_string(), wave, split_sum);
    }
  }
  return std::move(report).finish();
}

IdentityReport check_5_4(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require(s.n >= 0 && s.k >= 0 && s.k <= s.n, "need 0 <= k <= n");
  require_chain(s.n);
  const int n = s.n, width = s.n - s.k;
  ReportBuilder report("correspondence:5.4", {{"n", str(n)}, {"k", str(s.k)}});
  auto us = numbered("u", n);
  auto ws = numbered("w", width);
  Sampler sampler{report, opts, detail::concat(us, ws),
                  {constraint::Distinct{ws}, constraint::Avoid{"q", Scalar(0)}, constraint::Avoid{"q", Scalar(1)}}};
  sampler.vars.push_back("q");
  const auto ys = all_positions(width, n);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", n);
    auto w = point.family("w", width);
    const Scalar& q = point.at("q");
    for (const auto& y : ys) {
      report.expect_equal("W-bar = F-bar at y=" + y.to_string(), barred_wavefunction(w, u, y, q), symmetric_F_bar(w, u, y, q));
    }
  }
  return std::move(report).finish();
}

IdentityReport check_5_16(const CorrespondenceSizes& s, const VerifyOptions& opts) {
  require_nmk(s);
  const int n = s.n, m = s.m, k = s.k;
  ReportBuilder report("correspondence:5.16", {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"x", describe_x(s.x)}});
  const auto xs = positions_or(s.x, k, m);
  auto sampler = lattice_sampler(report, opts, n, m, true);
  const auto removals = k_subsets(n, n - k);
  for (int p = 0; p < opts.points; ++p) {
    auto point = sampler.next(p);
    report.begin_point(point);
    auto u = point.family("u", n);
    auto w = point.family("w", m);
    const Scalar& q = point.at("q");
    for (const auto& split : removals) {
      // split.chosen are the removed rows; the rest carry B, applied top row first.
      std::vector<std::pair<E, int>> rows;
      for (auto it = split.complement.rbegin(); it != split.complement.rend(); ++it) rows.emplace_back(E::B, *it);
      auto rest = pick(u, split.complement);
      for (const auto& x : xs) {
        const std::string tag = " removed=" + PositionVector(split.chosen, n).to_string() + " x=" + x.to_string();
        Scalar lhs = row_string(u, w, rows, x, q);
        report.expect_equal("<x|prod B|Omega> = W" + tag, lhs, wavefunction(rest, w, x, q));
        report.expect_equal("<x|prod B|Omega> = F" + tag, lhs, symmetric_F(rest, w, x, q));
      }
    }
  }
  return std::move(report).finish();
}

}  // namespace

std::string correspondence_label(Correspondence c) {
  for (const auto& info : kCorrespondences) {
    if (info.which == c) return info.label;
  }
  return "?";
}

Correspondence parse_correspondence(const std::string& label) {
  for (const auto& info : kCorrespondences) {
    if (label == info.label) return info.which;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown correspondence '" + label + "'");
}

IdentityReport verify_correspondence(Correspondence which, const CorrespondenceSizes& sizes, const VerifyOptions& opts) {
  switch (which) {
    case Correspondence::C2_10: return check_2_10(sizes, opts);
    case Correspondence::C2_12: return check_2_12(sizes, opts);
    case Correspondence::C3_1: return check_3_1(sizes, opts);
    case Correspondence::C3_13: return check_3_13(sizes, opts);
    case Correspondence::C4_3: return check_4_3(sizes, opts);
    case Correspondence::C5_1: return check_5_1(sizes, opts);
    case Correspondence::C5_4: return check_5_4(sizes, opts);
    case Correspondence::C5_16: return check_5_16(sizes, opts);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown correspondence");
}

}  // namespace groth

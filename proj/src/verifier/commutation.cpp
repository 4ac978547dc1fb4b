// Exchange relations between monodromy entries, checked entry by entry on
// small chains.

#include <algorithm>
#include <array>

#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/verifier.hpp"
#include "internal.hpp"

namespace groth {

using detail::ReportBuilder;
using detail::str;
using E = MonodromyEntry;

namespace {

struct RelationInfo {
  Relation relation;
  const char* label;
};

constexpr std::array<RelationInfo, 18> kRelations{{
    {Relation::DB3_4, "3.4"},       {Relation::DB3_5, "3.5"},       {Relation::BB3_6, "3.6"},
    {Relation::DD3_7, "3.7"},       {Relation::Multi3_8, "3.8"},    {Relation::DVacuum3_11, "3.11"},
    {Relation::AC4_6, "4.6"},       {Relation::AC4_7, "4.7"},       {Relation::AA4_8, "4.8"},
    {Relation::CC4_9, "4.9"},       {Relation::Multi4_10, "4.10"},  {Relation::AVacuum4_11, "4.11"},
    {Relation::Frozen4_13, "4.13"}, {Relation::DB5_11, "5.11"},     {Relation::BB5_12, "5.12"},
    {Relation::DVacuum5_13, "5.13"}, {Relation::State5_14, "5.14"}, {Relation::State5_15, "5.15"},
}};

void compare(ReportBuilder& report, const std::string& check, const SpinOperator& lhs, const SpinOperator& rhs) {
  if (auto diff = lhs.first_difference(rhs)) {
    report.expect(check + " <" + basis_string(diff->out, lhs.length()) + "|.|" + basis_string(diff->in, lhs.length()) + ">",
                  false, diff->lhs.to_string(), diff->rhs.to_string());
  }
}

void compare(ReportBuilder& report, const std::string& check, const SpinState& lhs, const SpinState& rhs) {
  if (lhs == rhs) return;
  std::vector<Basis> keys;
  for (const auto& [b, c] : lhs.amplitudes()) keys.push_back(b);
  for (const auto& [b, c] : rhs.amplitudes()) keys.push_back(b);
  std::sort(keys.begin(), keys.end());
  for (Basis b : keys) {
    if (lhs.amplitude(b) != rhs.amplitude(b)) {
      report.expect(check + " <" + basis_string(b, lhs.length()) + "|", false, lhs.amplitude(b).to_string(),
                    rhs.amplitude(b).to_string());
      return;
    }
  }
}

bool is_general_q(Relation r) {
  return r == Relation::DB5_11 || r == Relation::BB5_12 || r == Relation::DVacuum5_13 || r == Relation::State5_14 ||
         r == Relation::State5_15;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void require_chain(int length) {
  require(length >= 1 && length <= kMaxChainLength,
          "chain length " + str(length) + " outside [1, " + str(kMaxChainLength) + "]");
}

// Shape of one relation's sampled variables.
struct Layout {
  NamedValues params;
  int us = 0;         // row spectral parameters u1..
  int ws = 0;         // w1..
  bool distinct_u = false;
  bool distinct_w = false;
};

Layout layout_for(Relation r, const RelationSizes& s) {
  Layout l;
  switch (r) {
    case Relation::DB3_4: case Relation::DB3_5: case Relation::BB3_6: case Relation::DD3_7:
    case Relation::DB5_11: case Relation::BB5_12:
      require_chain(s.length);
      l.params = {{"L", str(s.length)}};
      l.us = 2;
      l.ws = s.length;
      l.distinct_u = r == Relation::DB3_4 || r == Relation::DB5_11;
      break;
    case Relation::Multi3_8:
      require_chain(s.m);
      require(s.k >= 0 && s.k <= s.n, "need 0 <= k <= n");
      l.params = {{"n", str(s.n)}, {"k", str(s.k)}, {"m", str(s.m)}};
      l.us = s.n;
      l.ws = s.m;
      l.distinct_u = true;
      break;
    case Relation::DVacuum3_11:
      require_chain(s.m);
      l.params = {{"n", str(s.n)}, {"m", str(s.m)}};
      l.us = s.n;
      l.ws = s.m;
      break;
    case Relation::DVacuum5_13:
      require_chain(s.m);
      l.params = {{"m", str(s.m)}};
      l.us = 1;
      l.ws = s.m;
      break;
    case Relation::AC4_6: case Relation::AC4_7: case Relation::AA4_8: case Relation::CC4_9:
      require_chain(s.n);
      l.params = {{"n", str(s.n)}};
      l.us = s.n;
      l.ws = 2;
      l.distinct_w = r == Relation::AC4_6;
      break;
    case Relation::Multi4_10:
      require_chain(s.n);
      require(s.k >= 0 && s.k <= s.m, "need 0 <= k <= m");
      l.params = {{"n", str(s.n)}, {"k", str(s.k)}, {"m", str(s.m)}};
      l.us = s.n;
      l.ws = s.m;
      l.distinct_w = true;
      break;
    case Relation::AVacuum4_11:
      require_chain(s.n);
      l.params = {{"n", str(s.n)}, {"m", str(s.m)}};
      l.us = s.n;
      l.ws = s.m;
      break;
    case Relation::Frozen4_13:
      require_chain(s.n);
      require(s.k >= 0 && s.k <= s.n, "need 0 <= k <= n");
      l.params = {{"n", str(s.n)}, {"k", str(s.k)}};
      l.us = s.n;
      l.ws = s.k;
      break;
    case Relation::State5_14:
      require_chain(s.m);
      require(s.ell >= 0, "need ell >= 0");
      l.params = {{"ell", str(s.ell)}, {"m", str(s.m)}};
      l.us = s.ell + 1;
      l.ws = s.m;
      l.distinct_u = true;
      break;
    case Relation::State5_15:
      require_chain(s.m);
      require(s.k >= 0 && s.k <= s.n, "need 0 <= k <= n");
      l.params = {{"n", str(s.n)}, {"k", str(s.k)}, {"m", str(s.m)}};
      l.us = s.n;
      l.ws = s.m;
      l.distinct_u = true;
      break;
  }
  return l;
}

SpinOperator product(const std::vector<SpinOperator>& leftmost_first, int length) {
  SpinOperator out = SpinOperator::identity(length);
  for (const auto& op : leftmost_first) out = out * op;
  return out;
}

struct Context {
  std::vector<Scalar> u;
  std::vector<Scalar> w;
  Scalar q;

  SpinOperator row(E e, int j) const { return monodromy_element(e, u[j - 1], w, q); }
  SpinOperator col(E e, int j) const { return barred_monodromy_element(e, w[j - 1], u, q); }
  int row_length() const { return static_cast<int>(w.size()); }
  int col_length() const { return static_cast<int>(u.size()); }
};

SpinState apply_row(const Context& c, E e, int j, const SpinState& v) {
  return Monodromy::row(c.u[j - 1], c.w, c.q).apply(e, v);
}

void check_two_operator(ReportBuilder& report, Relation r, const Context& c) {
  // Row relations sample u1, u2; column relations sample w1, w2.
  const Scalar& u1 = c.u.size() > 0 ? c.u[0] : c.q;
  const Scalar& u2 = c.u.size() > 1 ? c.u[1] : c.q;
  switch (r) {
    case Relation::DB3_4: {
      auto lhs = c.row(E::D, 1) * c.row(E::B, 2);
      auto rhs = (u1 / (u1 - u2)) * (c.row(E::B, 2) * c.row(E::D, 1)) -
                 (u2 / (u1 - u2)) * (c.row(E::B, 1) * c.row(E::D, 2));
      compare(report, "D(u1)B(u2)", lhs, rhs);
      return;
    }
    case Relation::DB3_5:
      compare(report, "D(u1)B(u2) = D(u2)B(u1)", c.row(E::D, 1) * c.row(E::B, 2), c.row(E::D, 2) * c.row(E::B, 1));
      return;
    case Relation::BB3_6: case Relation::BB5_12:
      compare(report, "B(u1)B(u2) = B(u2)B(u1)", c.row(E::B, 1) * c.row(E::B, 2), c.row(E::B, 2) * c.row(E::B, 1));
      return;
    case Relation::DD3_7:
      compare(report, "D(u1)D(u2) = D(u2)D(u1)", c.row(E::D, 1) * c.row(E::D, 2), c.row(E::D, 2) * c.row(E::D, 1));
      return;
    case Relation::DB5_11: {
      const Scalar& q = c.q;
      auto lhs = c.row(E::D, 1) * c.row(E::B, 2);
      auto rhs = ((u1 - q * u2) / (u1 - u2)) * (c.row(E::B, 2) * c.row(E::D, 1)) +
                 ((q - Scalar(1)) * u2 / (u1 - u2)) * (c.row(E::B, 1) * c.row(E::D, 2));
      compare(report, "D(u1)B(u2)", lhs, rhs);
      return;
    }
    case Relation::AC4_6: {
      const Scalar& w1 = c.w[0];
      const Scalar& w2 = c.w[1];
      auto lhs = c.col(E::A, 1) * c.col(E::C, 2);
      auto rhs = (w2 / (w2 - w1)) * (c.col(E::C, 2) * c.col(E::A, 1)) -
                 (w1 / (w2 - w1)) * (c.col(E::C, 1) * c.col(E::A, 2));
      compare(report, "A(w1)C(w2)", lhs, rhs);
      return;
    }
    case Relation::AC4_7:
      compare(report, "A(w1)C(w2) = A(w2)C(w1)", c.col(E::A, 1) * c.col(E::C, 2), c.col(E::A, 2) * c.col(E::C, 1));
      return;
    case Relation::AA4_8:
      compare(report, "A(w1)A(w2) = A(w2)A(w1)", c.col(E::A, 1) * c.col(E::A, 2), c.col(E::A, 2) * c.col(E::A, 1));
      return;
    case Relation::CC4_9:
      compare(report, "C(w1)C(w2) = C(w2)C(w1)", c.col(E::C, 1) * c.col(E::C, 2), c.col(E::C, 2) * c.col(E::C, 1));
      return;
    default:
      return;
  }
}

void check_multi_row(ReportBuilder& report, const Context& c, int n, int k) {
  const int L = c.row_length();
  std::vector<SpinOperator> lhs_ops;
  for (int j = n; j >= k + 1; --j) lhs_ops.push_back(c.row(E::D, j));
  for (int j = k; j >= 1; --j) lhs_ops.push_back(c.row(E::B, j));
  SpinOperator lhs = product(lhs_ops, L);

  SpinOperator rhs(L);
  for (const auto& split : k_subsets(n, k)) {
    Scalar coefficient(1);
    for (int i : split.chosen) {
      for (int j : split.complement) coefficient *= c.u[j - 1] / (c.u[j - 1] - c.u[i - 1]);
    }
    std::vector<SpinOperator> ops;
    for (int i : split.chosen) ops.push_back(c.row(E::B, i));
    for (int j : split.complement) ops.push_back(c.row(E::D, j));
    rhs += coefficient * product(ops, L);
  }
  compare(report, "prod D prod B", lhs, rhs);
}

void check_multi_column(ReportBuilder& report, const Context& c, int m, int k) {
  const int N = c.col_length();
  std::vector<SpinOperator> lhs_ops;
  for (int j = m; j >= k + 1; --j) lhs_ops.push_back(c.col(E::A, j));
  for (int j = k; j >= 1; --j) lhs_ops.push_back(c.col(E::C, j));
  SpinOperator lhs = product(lhs_ops, N);

  SpinOperator rhs(N);
  for (const auto& split : k_subsets(m, k)) {
    Scalar coefficient(1);
    for (int i : split.chosen) {
      for (int j : split.complement) coefficient *= c.w[i - 1] / (c.w[i - 1] - c.w[j - 1]);
    }
    std::vector<SpinOperator> ops;
    for (int i : split.chosen) ops.push_back(c.col(E::C, i));
    for (int j : split.complement) ops.push_back(c.col(E::A, j));
    rhs += coefficient * product(ops, N);
  }
  compare(report, "prod A prod C", lhs, rhs);
}

void check_state(ReportBuilder& report, Relation r, const Context& c, const RelationSizes& s) {
  const int L = c.row_length();
  const int N = c.col_length();
  const SpinState vacuum = SpinState::vacuum(L);
  switch (r) {
    case Relation::DVacuum3_11: case Relation::DVacuum5_13: {
      SpinState lhs = vacuum;
      Scalar factor(1);
      for (int j = 1; j <= static_cast<int>(c.u.size()); ++j) {
        lhs = apply_row(c, E::D, j, lhs);
        for (const auto& wi : c.w) factor *= c.u[j - 1] - wi;
      }
      compare(report, "prod D |Omega>", lhs, factor * vacuum);
      return;
    }
    case Relation::AVacuum4_11: {
      const SpinState full = SpinState::basis(N, (Basis{1} << N) - 1);
      SpinState lhs = full;
      Scalar factor(1);
      for (int j = 1; j <= static_cast<int>(c.w.size()); ++j) {
        lhs = Monodromy::column(c.w[j - 1], c.u, c.q).apply(E::A, lhs);
        for (const auto& ui : c.u) factor *= ui - c.w[j - 1];
      }
      compare(report, "prod A |Omega-bar>", lhs, factor * full);
      return;
    }
    case Relation::Frozen4_13: {
      SpinState v = SpinState::basis(N, (Basis{1} << N) - 1);
      for (int j = 1; j <= s.k; ++j) v = Monodromy::column(c.w[j - 1], c.u, c.q).apply(E::C, v);
      Basis target = 0;
      for (int site = s.k + 1; site <= N; ++site) target |= Basis{1} << (site - 1);
      report.expect_equal("<0^k 1^(n-k)| prod C |Omega-bar>", v.amplitude(target), detail::product_of_powers(c.u, s.k));
      return;
    }
    case Relation::State5_14: {
      const int ell = s.ell;
      SpinState lhs = vacuum;
      for (int j = 1; j <= ell; ++j) lhs = apply_row(c, E::B, j, lhs);
      lhs = apply_row(c, E::D, ell + 1, lhs);
      SpinState rhs(L);
      for (int k = 1; k <= ell + 1; ++k) {
        const Scalar& uk = c.u[k - 1];
        Scalar coefficient(1);
        for (const auto& wi : c.w) coefficient *= uk - wi;
        for (int j = 1; j <= ell; ++j) coefficient *= uk - c.q * c.u[j - 1];
        for (int j = 1; j <= ell + 1; ++j) {
          if (j != k) coefficient /= uk - c.u[j - 1];
        }
        SpinState v = vacuum;
        for (int j = 1; j <= ell + 1; ++j) {
          if (j != k) v = apply_row(c, E::B, j, v);
        }
        rhs += coefficient * v;
      }
      compare(report, "D prod B |Omega>", lhs, rhs);
      return;
    }
    case Relation::State5_15: {
      for (const auto& y : all_positions(s.n - s.k, s.n)) {
        SpinState lhs = vacuum;
        for (int j = 1; j <= s.n; ++j) lhs = apply_row(c, y.contains(j) ? E::D : E::B, j, lhs);
        SpinState rhs(L);
        for (const auto& term : nested_expansion(c.u, c.w, y, c.q)) {
          SpinState v = vacuum;
          for (int j = 1; j <= s.n; ++j) {
            if (std::find(term.removed.begin(), term.removed.end(), j) == term.removed.end()) {
              v = apply_row(c, E::B, j, v);
            }
          }
          rhs += term.coefficient * v;
        }
        compare(report, "y=" + y.to_string(), lhs, rhs);
      }
      return;
    }
    default:
      return;
  }
}

}  // namespace

std::string relation_label(Relation r) {
  for (const auto& info : kRelations) {
    if (info.relation == r) return info.label;
  }
  return "?";
}

Relation parse_relation(const std::string& label) {
  for (const auto& info : kRelations) {
    if (label == info.label) return info.relation;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown relation '" + label + "'");
}

std::vector<Relation> all_relations() {
  std::vector<Relation> out;
  for (const auto& info : kRelations) out.push_back(info.relation);
  return out;
}

IdentityReport verify_commutation(Relation relation, const RelationSizes& sizes, const VerifyOptions& opts) {
  const Layout layout = layout_for(relation, sizes);
  const bool general_q = is_general_q(relation);
  NamedValues params = layout.params;
  if (!general_q) params.emplace_back("q", "0");
  ReportBuilder report("commutation:" + relation_label(relation), params);

  auto us = numbered("u", layout.us);
  auto ws = numbered("w", layout.ws);
  std::vector<std::string> vars = detail::concat(us, ws);
  std::vector<Constraint> constraints;
  if (layout.distinct_u) constraints.push_back(constraint::Distinct{us});
  if (layout.distinct_w) constraints.push_back(constraint::Distinct{ws});
  if (general_q) {
    vars.push_back("q");
    constraints.push_back(constraint::Avoid{"q", Scalar(0)});
    constraints.push_back(constraint::Avoid{"q", Scalar(1)});
  }

  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, vars, constraints);
    report.begin_point(point);
    Context c{point.family("u", layout.us), point.family("w", layout.ws), general_q ? point.at("q") : Scalar(0)};
    switch (relation) {
      case Relation::Multi3_8:
        check_multi_row(report, c, sizes.n, sizes.k);
        break;
      case Relation::Multi4_10:
        check_multi_column(report, c, sizes.m, sizes.k);
        break;
      case Relation::DVacuum3_11: case Relation::DVacuum5_13: case Relation::AVacuum4_11:
      case Relation::Frozen4_13: case Relation::State5_14: case Relation::State5_15:
        check_state(report, relation, c, sizes);
        break;
      default:
        check_two_operator(report, relation, c);
        break;
    }
  }
  return std::move(report).finish();
}

IdentityReport verify_yang_baxter(const VerifyOptions& opts) {
  ReportBuilder report("yang-baxter", {{"sites", "3"}});
  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, {"u", "v", "w", "q"}, {});
    report.begin_point(point);
    auto [lhs, rhs] = yang_baxter_sides(point.at("u"), point.at("v"), point.at("w"), point.at("q"));
    compare(report, "R_ab R_ac R_bc = R_bc R_ac R_ab", lhs, rhs);
  }
  return std::move(report).finish();
}

IdentityReport verify_ice_rule(const VerifyOptions& opts) {
  ReportBuilder report("ice-rule", {});
  for (int p = 0; p < opts.points; ++p) {
    auto point = detail::sample_indexed(report, opts, p, {"u", "w", "q"}, {});
    report.begin_point(point);
    const Scalar& u = point.at("u");
    const Scalar& w = point.at("w");
    const Scalar& q = point.at("q");
    const std::pair<const char*, RMatrix> cases[] = {
        {"six-vertex", RMatrix::six_vertex(u, w, q)},   {"q=0", RMatrix::six_vertex(u, w, Scalar(0))},
        {"q=1", RMatrix::six_vertex(u, w, Scalar(1))},  {"u=w", RMatrix::six_vertex(u, u, q)},
        {"five-vertex", RMatrix::five_vertex(u, w)},
    };
    for (const auto& [name, r] : cases) report.expect(std::string("ice rule ") + name, r.satisfies_ice_rule(), "violated", "conserved");
    const RMatrix five = RMatrix::five_vertex(u, w);
    const RMatrix degenerate = RMatrix::six_vertex(u, w, Scalar(0));
    for (int out = 0; out < 4; ++out) {
      for (int in = 0; in < 4; ++in) {
        report.expect_equal("five-vertex table [" + str(out) + "][" + str(in) + "]", five(out, in), degenerate(out, in));
      }
    }
  }
  return std::move(report).finish();
}

}  // namespace groth

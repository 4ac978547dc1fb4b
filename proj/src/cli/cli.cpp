#include "groth/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "groth/errors.hpp"
#include "groth/grothendieck.hpp"
#include "groth/lattice.hpp"
#include "groth/report.hpp"
#include "groth/suite.hpp"
#include "groth/symfuncs.hpp"
#include "groth/verifier.hpp"

namespace groth::cli {

namespace {

struct EvalConfig {
  std::string route = "det";
  std::string lambda;
  std::optional<int> n;
  std::optional<std::string> beta;
  std::string q = "0";
  std::string z, alpha, u, w, x;
  bool symbolic = false;
};

struct VerifyConfig {
  std::string identity;
  std::optional<int> n, m, k, length, ell;
  std::optional<std::string> lambda, beta, x;
  int points = 25;
  bool symbolic = false;
  std::string format = "json";
};

struct SuiteConfig {
  int max_n = 4;
  std::string format = "json";
};

std::vector<Scalar> parse_scalars(const std::string& text) {
  std::vector<Scalar> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GROTH_SEED")) {
    try {
      size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, std::string("GROTH_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

Partition padded(const Partition& lambda, int length) {
  if (lambda.length() > length) {
    throw Error(ErrorKind::InvalidArgument, "lambda " + lambda.to_string() + " has more than " + std::to_string(length) + " parts");
  }
  return lambda.followed_by(Partition::rectangle(0, length - lambda.length()));
}

int eval(const EvalConfig& c, std::uint64_t seed, std::ostream& out) {
  if (c.route == "det") {
    Partition lambda = parse_partition(c.lambda);
    if (c.n) lambda = padded(lambda, *c.n);
    const int n = lambda.length();
    const int length = required_alphabet_length(lambda);
    if (c.symbolic) {
      std::optional<Scalar> beta;
      if (c.beta) beta = Scalar::parse(*c.beta);
      MultiPoly g = grothendieck_symbolic(lambda, length, beta);
      out << g.to_string(symbolic_variables(n, length, !beta)) << '\n';
      return kPass;
    }
    FactorialAlphabet alphabet{parse_scalars(c.alpha), c.beta ? Scalar::parse(*c.beta) : Scalar(-1)};
    std::vector<Scalar> z = parse_scalars(c.z);
    if (c.z.empty() || c.alpha.empty()) {
      auto zs = numbered("z", n);
      auto as = numbered("a", length);
      std::vector<std::string> vars = zs;
      vars.insert(vars.end(), as.begin(), as.end());
      auto point = sample_point(derive_seed(seed, "eval", 0), vars, {constraint::Distinct{zs}});
      if (c.z.empty()) z = point.family("z", n);
      if (c.alpha.empty()) alphabet.alphas = point.family("a", length);
    }
    out << grothendieck_det(lambda, z, alphabet).to_string() << '\n';
    return kPass;
  }
  if (c.route == "lattice" || c.route == "symfunc") {
    if (c.symbolic) throw Error(ErrorKind::InvalidArgument, "--symbolic is only available on the det route");
    std::vector<Scalar> u = parse_scalars(c.u);
    std::vector<Scalar> w = parse_scalars(c.w);
    const Scalar q = Scalar::parse(c.q);
    const int length = static_cast<int>(w.size());
    PositionVector x;
    if (!c.x.empty()) {
      x = PositionVector(parse_int_list(c.x), length);
    } else if (!c.lambda.empty()) {
      x = positions_from_partition(parse_partition(c.lambda), length);
    } else {
      throw Error(ErrorKind::InvalidArgument, "lattice and symfunc routes need --x or --lambda");
    }
    if (x.count() != static_cast<int>(u.size())) {
      throw Error(ErrorKind::InvalidArgument, "need one u per particle: |u|=" + std::to_string(u.size()) +
                                                  ", |x|=" + std::to_string(x.count()));
    }
    Scalar v = c.route == "lattice" ? wavefunction(u, w, x, q) : symmetric_F(u, w, x, q);
    out << v.to_string() << '\n';
    return kPass;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown route '" + c.route + "' (det, lattice, symfunc)");
}

std::string render(const std::vector<IdentityReport>& reports, const std::string& format) {
  if (format == "json") return render_json(reports);
  if (format == "csv") return render_csv(reports);
  return render_text(reports);
}

std::vector<IdentityReport> verify(const VerifyConfig& c, std::uint64_t seed) {
  const VerifyOptions opts{c.points, seed};
  if (c.points < 1) throw Error(ErrorKind::InvalidArgument, "--points must be at least 1");
  const int n = c.n.value_or(2);
  const int m = c.m.value_or(2);
  const std::string& id = c.identity;
  auto lambda_or = [&](int length) {
    return c.lambda ? padded(parse_partition(*c.lambda), length) : Partition::rectangle(0, length);
  };

  if (id == "guo-sun") {
    Partition lambda = c.lambda ? parse_partition(*c.lambda) : Partition::rectangle(0, c.k.value_or(1));
    if (c.k) lambda = padded(lambda, *c.k);
    return {verify_guo_sun(lambda, n, m, c.beta ? Scalar::parse(*c.beta) : Scalar(-1), opts)};
  }
  if (id == "rectangular") return {verify_rectangular(n, m, c.k.value_or(1), opts, c.symbolic ? Mode::Symbolic : Mode::Numeric)};
  if (id == "duality") return {verify_duality(n, m, c.k.value_or(1), opts)};
  if (id == "consistency") return {verify_consistency_triangle(n, m, c.k.value_or(1), opts)};
  if (id == "q-deformed") {
    const int k = c.k.value_or(1);
    if (c.x) return {verify_q_deformed(n, m, k, PositionVector(parse_int_list(*c.x), m), opts)};
    std::vector<IdentityReport> out;
    for (const auto& x : all_positions(k, m)) out.push_back(verify_q_deformed(n, m, k, x, opts));
    return out;
  }
  if (id == "prop51") return verify_prop51(n, c.k.value_or(1), m, opts);
  if (id == "yang-baxter") return {verify_yang_baxter(opts)};
  if (id == "ice-rule") return {verify_ice_rule(opts)};
  if (id == "worked-example") return {verify_worked_example()};
  if (id.rfind("commutation:", 0) == 0) {
    RelationSizes sizes;
    if (c.length) sizes.length = *c.length;
    if (c.n) sizes.n = *c.n;
    if (c.m) sizes.m = *c.m;
    if (c.k) sizes.k = *c.k;
    if (c.ell) sizes.ell = *c.ell;
    return {verify_commutation(parse_relation(id.substr(12)), sizes, opts)};
  }
  if (id.rfind("correspondence:", 0) == 0) {
    const Correspondence which = parse_correspondence(id.substr(15));
    CorrespondenceSizes sizes;
    sizes.n = n;
    sizes.m = m;
    if (c.k) sizes.k = *c.k;
    if (c.length) sizes.length = *c.length;
    const bool shape_has_k_parts = which == Correspondence::C3_1 || which == Correspondence::C3_13;
    if (c.lambda) sizes.lambda = lambda_or(shape_has_k_parts ? sizes.k : sizes.n);
    if (c.x) {
      const int chain = which == Correspondence::C2_10 ? sizes.length : sizes.m;
      sizes.x = PositionVector(parse_int_list(*c.x), chain);
    }
    return {verify_correspondence(which, sizes, opts)};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown identity '" + id + "'");
}

bool all_verified(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.verified()) return false;
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of factorial Grothendieck polynomial identities", "groth"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;

  EvalConfig ec;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate G_lambda, the lattice wavefunction or F");
  eval_cmd->add_option("--route", ec.route, "det | lattice | symfunc")->check(CLI::IsMember({"det", "lattice", "symfunc"}));
  eval_cmd->add_option("--lambda", ec.lambda, "Partition as a comma list");
  eval_cmd->add_option("--n", ec.n, "Number of variables (pads lambda with zeros)");
  eval_cmd->add_option("--beta", ec.beta, "Deformation parameter (det route)");
  eval_cmd->add_option("--q", ec.q, "Six-vertex parameter (lattice/symfunc routes)");
  eval_cmd->add_option("--z", ec.z, "z_1..z_n as p/q values");
  eval_cmd->add_option("--alpha", ec.alpha, "alpha_1..alpha_M as p/q values");
  eval_cmd->add_option("--u", ec.u, "Row spectral parameters");
  eval_cmd->add_option("--w", ec.w, "Column parameters (chain length = count)");
  eval_cmd->add_option("--x", ec.x, "Particle positions");
  eval_cmd->add_flag("--symbolic", ec.symbolic, "Expand symbolically (det route)");
  eval_cmd->add_option("--seed", seed, "Seed for unspecified values");

  VerifyConfig vc;
  auto* verify_cmd = app.add_subcommand("verify", "Check one identity at sampled exact points");
  verify_cmd->add_option("identity", vc.identity,
                         "guo-sun | rectangular | duality | q-deformed | commutation:<id> | correspondence:<id> | prop51")
      ->required();
  verify_cmd->add_option("--n", vc.n);
  verify_cmd->add_option("--m", vc.m);
  verify_cmd->add_option("--k", vc.k);
  verify_cmd->add_option("--lambda", vc.lambda);
  verify_cmd->add_option("--beta", vc.beta);
  verify_cmd->add_option("--x", vc.x);
  verify_cmd->add_option("--L", vc.length, "Chain length");
  verify_cmd->add_option("--ell", vc.ell);
  verify_cmd->add_option("--points", vc.points, "Sample points (default 25)");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_flag("--symbolic", vc.symbolic);
  verify_cmd->add_option("--format", vc.format)->check(CLI::IsMember({"json", "csv", "text"}));

  SuiteConfig sc;
  auto* suite_cmd = app.add_subcommand("suite", "Run every acceptance sweep");
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--max-n", sc.max_n, "Cap on n, m and chain sizes");
  suite_cmd->add_option("--format", sc.format)->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  try {
    const std::uint64_t s = seed ? *seed : default_seed();
    if (*eval_cmd) return eval(ec, s, out);
    if (*verify_cmd) {
      auto reports = verify(vc, s);
      out << render(reports, vc.format);
      return all_verified(reports) ? kPass : kIdentityFailure;
    }
    SuiteOptions opts{s, sc.max_n};
    auto results = run_suite(opts);
    if (sc.format == "json") {
      out << render_suite_json(results, opts);
    } else if (sc.format == "csv") {
      out << render_suite_csv(results);
    } else {
      out << render_suite_text(results);
    }
    for (const auto& r : results) {
      if (!r.passed()) return kIdentityFailure;
    }
    return kPass;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_validation_error(e.kind()) ? kValidation : kComputation;
  }
}

}  // namespace groth::cli

#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <cstdlib>

#include "groth/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = groth::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: eval") {
  CHECK(run({"eval", "--route", "det", "--lambda", "0,0", "--n", "2"}).out == "1\n");
  auto symbolic = run({"eval", "--route", "det", "--lambda", "1,0", "--beta", "-1", "--symbolic"});
  CHECK(symbolic.code == 0);
  CHECK(symbolic.out.find("z1") != std::string::npos);
  auto numeric = run({"eval", "--route", "det", "--lambda", "1,0", "--z", "1/2,1/3", "--alpha", "1/5,1/7"});
  CHECK(numeric.code == 0);
  // (a1 a2 - a1 - a2 + 1)(z1 + z2 - z1 z2) + a1 + a2 - a1 a2 at the same point.
  CHECK(numeric.out == "27/35\n");
  CHECK(run({"eval", "--route", "lattice", "--u", "1/2", "--w", "1/3", "--x", "1", "--q", "1/4"}).out == "3/8\n");
  CHECK(run({"eval", "--route", "symfunc", "--u", "1/2", "--w", "1/3", "--x", "1", "--q", "1/4"}).out == "3/8\n");
}

TEST_CASE("cli: error exit codes") {
  auto coincident = run({"eval", "--route", "det", "--lambda", "1,0", "--z", "1/2,1/2", "--alpha", "1/5,1/7"});
  CHECK(coincident.code == groth::cli::kComputation);
  CHECK(coincident.err.find("CoincidentVariables") != std::string::npos);
  auto profile = run({"verify", "guo-sun", "--n", "2", "--m", "2", "--k", "1", "--lambda", "2"});
  CHECK(profile.code == groth::cli::kValidation);
  CHECK(profile.err.find("ProfileViolation") != std::string::npos);
  CHECK(run({"verify", "bogus"}).code == groth::cli::kValidation);
  CHECK(run({"verify", "guo-sun", "--points", "0"}).code == groth::cli::kValidation);
  CHECK(run({"frobnicate"}).code == groth::cli::kValidation);
  CHECK(run({"verify", "guo-sun", "--format", "xml"}).code == groth::cli::kValidation);
}

TEST_CASE("cli: verify formats") {
  auto json = run({"verify", "guo-sun", "--n", "2", "--m", "2", "--k", "1", "--lambda", "1"});
  CHECK(json.code == groth::cli::kPass);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["identity"] == "guo-sun");
  CHECK(j["points"] == 25);
  CHECK(j["verdict"] == "verified-at-all-points");
  auto csv = run({"verify", "commutation:3.6", "--L", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("identity,params,points,failures,verdict\n", 0) == 0);
  auto text = run({"verify", "rectangular", "--n", "2", "--m", "2", "--k", "1", "--symbolic", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("mode=symbolic") != std::string::npos);
  auto prop = run({"verify", "prop51", "--n", "3", "--k", "1", "--m", "2", "--points", "3"});
  CHECK(prop.code == 0);
  CHECK(nlohmann::json::parse(prop.out).is_array());
}

TEST_CASE("cli: seeds") {
  const std::vector<std::string> args{"verify", "duality", "--n", "2", "--m", "2", "--k", "1", "--points", "2"};
  auto base = run(args);
  auto explicit_seed = run({"verify", "duality", "--n", "2", "--m", "2", "--k", "1", "--points", "2", "--seed", "9"});
  ::setenv("GROTH_SEED", "9", 1);
  auto from_env = run(args);
  ::setenv("GROTH_SEED", "nine", 1);
  auto bad_env = run(args);
  ::unsetenv("GROTH_SEED");
  CHECK(base.code == 0);
  CHECK(from_env.out == explicit_seed.out);
  CHECK(bad_env.code == groth::cli::kValidation);
  CHECK(run(args).out == base.out);
}

TEST_CASE("cli: small suite") {
  auto r = run({"suite", "--max-n", "1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["max_n"] == 1);
}

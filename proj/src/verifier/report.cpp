#include "groth/report.hpp"

#include <sstream>

#include "groth/errors.hpp"
#include "internal.hpp"

namespace groth {

std::string_view verdict_name(Verdict v) { return v == Verdict::Verified ? "verified-at-all-points" : "failed"; }

namespace detail {

NamedValues render_assignment(const EvaluationPoint& point) {
  NamedValues out;
  for (const auto& [k, v] : point.assignments()) out.emplace_back(k, v.to_string());
  return out;
}

ReportBuilder::ReportBuilder(std::string identity, NamedValues params) {
  report_.identity = std::move(identity);
  report_.params = std::move(params);
}

void ReportBuilder::begin_point(const EvaluationPoint& point) {
  ++report_.points;
  current_ = render_assignment(point);
}

bool ReportBuilder::expect_equal(std::string_view check, const Scalar& lhs, const Scalar& rhs) {
  return expect(check, lhs == rhs, lhs.to_string(), rhs.to_string());
}

bool ReportBuilder::expect(std::string_view check, bool ok, std::string lhs, std::string rhs) {
  if (!ok) report_.failures.push_back(Failure{current_, std::move(lhs), std::move(rhs), std::string(check)});
  return ok;
}

std::string ReportBuilder::salt() const {
  std::string s = report_.identity;
  for (const auto& [k, v] : report_.params) s += "|" + k + "=" + v;
  return s;
}

IdentityReport ReportBuilder::finish() && { return std::move(report_); }

EvaluationPoint sample_indexed(const ReportBuilder& builder, const VerifyOptions& opts, int index,
                               const std::vector<std::string>& vars, const std::vector<Constraint>& constraints) {
  return sample_point(derive_seed(opts.seed, builder.salt(), static_cast<std::uint64_t>(index)), vars, constraints);
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Scalar product_of_powers(const std::vector<Scalar>& values, int exponent) {
  Scalar out(1);
  for (const auto& v : values) out *= v.pow(exponent);
  return out;
}

std::vector<Scalar> map_all(const std::vector<Scalar>& values, VariableMap direction) {
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(variable_map(direction, v));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::ordered_json named_to_json(const NamedValues& values) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) obj[k] = v;
  return obj;
}

NamedValues named_from_json(const nlohmann::ordered_json& obj) {
  NamedValues out;
  for (const auto& [k, v] : obj.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

std::string params_inline(const NamedValues& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["params"] = named_to_json(report.params);
  j["points"] = report.points;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json fj;
    fj["assignment"] = named_to_json(f.assignment);
    fj["lhs"] = f.lhs;
    fj["rhs"] = f.rhs;
    if (!f.check.empty()) fj["check"] = f.check;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["verdict"] = verdict_name(report.verdict());
  return j;
}

IdentityReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    IdentityReport r;
    r.identity = j.at("identity").get<std::string>();
    r.params = named_from_json(j.at("params"));
    r.points = j.at("points").get<int>();
    for (const auto& fj : j.at("failures")) {
      Failure f;
      f.assignment = named_from_json(fj.at("assignment"));
      f.lhs = fj.at("lhs").get<std::string>();
      f.rhs = fj.at("rhs").get<std::string>();
      if (fj.contains("check")) f.check = fj.at("check").get<std::string>();
      r.failures.push_back(std::move(f));
    }
    if (j.at("verdict").get<std::string>() != verdict_name(r.verdict())) {
      throw Error(ErrorKind::InvalidArgument, "verdict field disagrees with failures/points");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string render_json(const std::vector<IdentityReport>& reports) {
  if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string render_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << "identity,params,points,failures,verdict\n";
  for (const auto& r : reports) {
    os << csv_field(r.identity) << ',' << csv_field(params_inline(r.params)) << ',' << r.points << ','
       << r.failures.size() << ',' << verdict_name(r.verdict()) << '\n';
  }
  return os.str();
}

std::string render_text(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.identity << " [" << params_inline(r.params) << "] points=" << r.points << " -> " << verdict_name(r.verdict())
       << '\n';
    for (const auto& f : r.failures) {
      os << "  failure";
      if (!f.check.empty()) os << " (" << f.check << ")";
      os << ": lhs=" << f.lhs << " rhs=" << f.rhs << " at {" << params_inline(f.assignment) << "}\n";
    }
  }
  return os.str();
}

}  // namespace groth

#include "groth/sampling.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "groth/errors.hpp"

namespace groth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string describe(const Constraint& c) {
  return std::visit(overloaded{
                        [](const constraint::Distinct& d) { return "distinct(" + join(d.vars) + ")"; },
                        [](const constraint::Nonzero& d) { return "nonzero(" + join(d.vars) + ")"; },
                        [](const constraint::Avoid& d) { return d.var + "!=" + d.value.to_string(); },
                        [](const constraint::Differ& d) { return d.a + "!=" + d.b; },
                    },
                    c);
}

EvaluationPoint::EvaluationPoint(std::vector<std::pair<std::string, Scalar>> assignments,
                                 std::vector<Constraint> constraints)
    : assignments_(std::move(assignments)), constraints_(std::move(constraints)) {}

std::optional<Scalar> EvaluationPoint::find(const std::string& name) const {
  for (const auto& [k, v] : assignments_) {
    if (k == name) return v;
  }
  return std::nullopt;
}

const Scalar& EvaluationPoint::at(const std::string& name) const {
  for (const auto& [k, v] : assignments_) {
    if (k == name) return v;
  }
  throw Error(ErrorKind::UnboundVariable, "no value for '" + name + "'");
}

std::vector<Scalar> EvaluationPoint::family(const std::string& prefix, int count) const {
  std::vector<Scalar> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(at(prefix + std::to_string(i)));
  return out;
}

EvaluationPoint EvaluationPoint::with(const std::string& name, const Scalar& value) const {
  EvaluationPoint copy = *this;
  for (auto& [k, v] : copy.assignments_) {
    if (k == name) {
      v = value;
      return copy;
    }
  }
  copy.assignments_.emplace_back(name, value);
  return copy;
}

bool EvaluationPoint::satisfies(const Constraint& c) const {
  return std::visit(overloaded{
                        [&](const constraint::Distinct& d) {
                          std::set<Scalar> seen;
                          for (const auto& v : d.vars) {
                            if (!seen.insert(at(v)).second) return false;
                          }
                          return true;
                        },
                        [&](const constraint::Nonzero& d) {
                          return std::none_of(d.vars.begin(), d.vars.end(),
                                              [&](const std::string& v) { return at(v).is_zero(); });
                        },
                        [&](const constraint::Avoid& d) { return at(d.var) != d.value; },
                        [&](const constraint::Differ& d) { return d.a != d.b && at(d.a) != at(d.b); },
                    },
                    c);
}

bool EvaluationPoint::satisfies_all() const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const Constraint& c) { return satisfies(c); });
}

EvaluationPoint sample_point(std::uint64_t seed, const std::vector<std::string>& vars,
                             const std::vector<Constraint>& constraints, const SamplePool& pool) {
  // mt19937_64 output is fixed by the standard; plain modulo keeps the
  // reduction portable (std distributions are implementation-defined).
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint32_t bound) { return static_cast<long>(1 + rng() % bound); };
  for (int attempt = 0; attempt < pool.retry_budget; ++attempt) {
    std::vector<std::pair<std::string, Scalar>> values;
    values.reserve(vars.size());
    for (const auto& v : vars) {
      long p = draw(pool.max_numerator);
      long q = draw(pool.max_denominator);
      values.emplace_back(v, Scalar(p, q));
    }
    EvaluationPoint point(std::move(values), constraints);
    if (point.satisfies_all()) return point;
  }
  std::string what;
  for (const auto& c : constraints) what += (what.empty() ? "" : " & ") + describe(c);
  throw Error(ErrorKind::ConstraintUnsatisfiable,
              "no point satisfying " + what + " after " + std::to_string(pool.retry_budget) + " draws");
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : salt) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed ^ h) + index);
}

std::vector<std::string> numbered(const std::string& prefix, int count, int first) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

}  // namespace groth

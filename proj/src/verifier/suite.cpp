#include "groth/suite.hpp"

#include <algorithm>
#include <sstream>

#include "groth/errors.hpp"
#include "groth/report.hpp"

namespace groth {

namespace {

void add(std::vector<IdentityReport>& out, IdentityReport r) { out.push_back(std::move(r)); }

void add(std::vector<IdentityReport>& out, std::vector<IdentityReport> rs) {
  for (auto& r : rs) out.push_back(std::move(r));
}

VerifyOptions points(const SuiteOptions& s, int count) { return VerifyOptions{count, s.seed}; }

void worked_example(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  if (s.max_n >= 2) add(out, verify_worked_example());
}

void triple_route(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  const int n = std::min(3, s.max_n);
  CorrespondenceSizes sizes;
  sizes.n = n;
  sizes.length = 2 * n;
  add(out, verify_correspondence(Correspondence::C2_12, sizes, points(s, 10)));
  add(out, verify_correspondence(Correspondence::C2_10, sizes, points(s, 10)));
}

void guo_sun(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  const int cap = std::min(4, s.max_n);
  for (int n = 1; n <= cap; ++n) {
    for (int m = 1; m <= cap; ++m) {
      for (int k = 1; k <= std::min(n, m); ++k) {
        for (const auto& lambda : partitions_in_box(k, m - k)) add(out, verify_guo_sun(lambda, n, m, Scalar(-1), points(s, 5)));
        CorrespondenceSizes sizes;
        sizes.n = n;
        sizes.m = m;
        sizes.k = k;
        add(out, verify_correspondence(Correspondence::C3_1, sizes, points(s, 5)));
        add(out, verify_correspondence(Correspondence::C3_13, sizes, points(s, 5)));
      }
    }
  }
}

void rectangular(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  const int cap = std::min(4, s.max_n);
  for (int n = 1; n <= cap; ++n) {
    for (int m = 1; m <= cap; ++m) {
      for (int k = 0; k <= std::min(n, m); ++k) {
        add(out, verify_rectangular(n, m, k, points(s, 10)));
        add(out, verify_duality(n, m, k, points(s, 10)));
        add(out, verify_consistency_triangle(n, m, k, points(s, 10)));
        CorrespondenceSizes sizes;
        sizes.n = n;
        sizes.m = m;
        sizes.k = k;
        add(out, verify_correspondence(Correspondence::C4_3, sizes, points(s, 10)));
      }
    }
  }
}

void q_deformed(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  const int cap = std::min(3, s.max_n);
  for (int n = 1; n <= cap; ++n) {
    for (int m = 1; m <= cap; ++m) {
      for (int k = 0; k <= std::min(n, m); ++k) {
        for (const auto& x : all_positions(k, m)) add(out, verify_q_deformed(n, m, k, x, points(s, 5)));
        CorrespondenceSizes sizes;
        sizes.n = n;
        sizes.m = m;
        sizes.k = k;
        add(out, verify_correspondence(Correspondence::C5_1, sizes, points(s, 5)));
        add(out, verify_correspondence(Correspondence::C5_16, sizes, points(s, 5)));
      }
    }
  }
  for (int n = 1; n <= cap; ++n) {
    for (int k = 0; k < n; ++k) {
      CorrespondenceSizes sizes;
      sizes.n = n;
      sizes.k = k;
      add(out, verify_correspondence(Correspondence::C5_4, sizes, points(s, 5)));
    }
  }
}

void structural(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  add(out, verify_yang_baxter(points(s, 25)));
  add(out, verify_ice_rule(points(s, 25)));
  const int chain = std::clamp(s.max_n + 1, 1, 5);
  const int small = std::min(3, s.max_n);
  for (Relation r : all_relations()) {
    for (int size = 1; size <= chain; ++size) {
      RelationSizes sizes;
      sizes.length = size;
      sizes.m = size;
      sizes.n = size;
      switch (r) {
        case Relation::AC4_6: case Relation::AC4_7: case Relation::AA4_8: case Relation::CC4_9:
        case Relation::AVacuum4_11:
          sizes.m = std::min(size, small);
          add(out, verify_commutation(r, sizes, points(s, 5)));
          break;
        case Relation::Multi3_8: case Relation::State5_15:
          sizes.n = small;
          for (int k = 0; k <= sizes.n; ++k) {
            sizes.k = k;
            add(out, verify_commutation(r, sizes, points(s, 3)));
          }
          break;
        case Relation::Multi4_10:
          sizes.m = small;
          for (int k = 0; k <= sizes.m; ++k) {
            sizes.k = k;
            add(out, verify_commutation(r, sizes, points(s, 3)));
          }
          break;
        case Relation::Frozen4_13:
          for (int k = 0; k <= size; ++k) {
            sizes.k = k;
            add(out, verify_commutation(r, sizes, points(s, 5)));
          }
          break;
        case Relation::State5_14:
          for (int ell = 0; ell <= small; ++ell) {
            sizes.ell = ell;
            add(out, verify_commutation(r, sizes, points(s, 5)));
          }
          break;
        case Relation::DVacuum3_11:
          sizes.n = small;
          add(out, verify_commutation(r, sizes, points(s, 5)));
          break;
        default:
          add(out, verify_commutation(r, sizes, points(s, 5)));
          break;
      }
    }
  }
}

void prop51(const SuiteOptions& s, std::vector<IdentityReport>& out) {
  const int cap = std::min(4, s.max_n);
  for (int n = 1; n <= cap; ++n) {
    for (int width = 1; width <= std::min(3, n); ++width) add(out, verify_prop51(n, n - width, n - width, points(s, 5)));
  }
}

struct CriterionSpec {
  const char* title;
  void (*run)(const SuiteOptions&, std::vector<IdentityReport>&);
};

constexpr CriterionSpec kCriteria[kSuiteCriteria] = {
    {"worked example: symbolic rectangular expansion at n=2, k=1, m=2", worked_example},
    {"triple-route agreement: determinant, lattice and F", triple_route},
    {"Guo-Sun identity at beta=-1", guo_sun},
    {"rectangular expansion and duality", rectangular},
    {"q-deformed expansion", q_deformed},
    {"Yang-Baxter, ice rule and exchange relations", structural},
    {"Izergin-Korepin properties of the barred wavefunction", prop51},
};

std::string params_inline(const NamedValues& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + k + "=" + v;
  return out;
}

}  // namespace

bool CriterionResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.verified(); });
}

std::string criterion_title(int criterion) {
  if (criterion < 1 || criterion > kSuiteCriteria) {
    throw Error(ErrorKind::InvalidArgument, "criterion must be in 1.." + std::to_string(kSuiteCriteria));
  }
  return kCriteria[criterion - 1].title;
}

CriterionResult run_criterion(int criterion, const SuiteOptions& opts) {
  criterion_title(criterion);
  if (opts.max_n < 0) throw Error(ErrorKind::InvalidArgument, "max-n must be nonnegative");
  const auto& spec = kCriteria[criterion - 1];
  CriterionResult result{criterion, spec.title, {}};
  spec.run(opts, result.reports);
  std::stable_sort(result.reports.begin(), result.reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.params < b.params;
  });
  return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (int c = 1; c <= kSuiteCriteria; ++c) out.push_back(run_criterion(c, opts));
  return out;
}

std::string render_suite_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts) {
  nlohmann::ordered_json j;
  j["seed"] = std::to_string(opts.seed);
  j["max_n"] = opts.max_n;
  nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& c : results) {
    nlohmann::ordered_json cj;
    cj["criterion"] = c.criterion;
    cj["title"] = c.title;
    cj["verdict"] = c.passed() ? "pass" : "fail";
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& r : c.reports) reports.push_back(to_json(r));
    cj["reports"] = std::move(reports);
    criteria.push_back(std::move(cj));
    all = all && c.passed();
  }
  j["criteria"] = std::move(criteria);
  j["verdict"] = all ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string render_suite_csv(const std::vector<CriterionResult>& results) {
  std::vector<IdentityReport> all;
  for (const auto& c : results) all.insert(all.end(), c.reports.begin(), c.reports.end());
  return render_csv(all);
}

std::string render_suite_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  bool marked = false;
  for (const auto& c : results) {
    os << "criterion " << c.criterion << ": " << c.title << " -> " << (c.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& r : c.reports) {
      const bool first_failure = !marked && !r.verified();
      marked = marked || first_failure;
      os << (first_failure ? "=> " : "   ") << r.identity << " [" << params_inline(r.params) << "] points=" << r.points
         << ' ' << verdict_name(r.verdict()) << '\n';
      if (first_failure) {
        for (const auto& f : r.failures) {
          os << "     " << (f.check.empty() ? "failure" : f.check) << ": lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
        }
      }
    }
  }
  return os.str();
}

}  // namespace groth

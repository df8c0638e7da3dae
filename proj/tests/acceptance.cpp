// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "unitri/suites.hpp"

using namespace unitri;

namespace {

struct Criterion {
  const char* id;
  const char* title;
  std::vector<std::string> suites;
  /// Wall-clock bound in seconds for all suites together; 0 means unbounded.
  double max_seconds;
};

// Degree cap and working cap pinned for every layer computation below.
constexpr int kCap = 5;
constexpr int kWorkingCap = 10;
constexpr int kTrials = 8;

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "group axioms", {"group-axioms"}, 60.0},
      {"AC2", "U_2 closed forms", {"lemma1"}, 0},
      {"AC3", "center of U_2", {"lemma2"}, 0},
      {"AC4", "commutator subgroup and centralizers of U_2", {"lemma3"}, 0},
      {"AC5", "hypercenter descent in U_2", {"lemma4"}, 0},
      {"AC6", "invariance of c_k and the center of U_3", {"lemma5", "theorem1"}, 0},
      {"AC7", "commutator identity and non-invariance", {"proposition1"}, 120.0},
      {"AC8", "truncated U_3 classification", {"theorem2-trunc"}, 0},
      {"AC9", "abelianized layers", {"remark-pi"}, 0},
      {"AC10", "c-products inside S_1", {"hypothesis1"}, 0},
      {"AC11", "Specht straightening", {"specht"}, 0},
      {"AC12", "derived series", {"derived-series"}, 0},
  };

  SuiteOptions opts;
  opts.seed = 1;
  opts.cap = kCap;
  opts.pit.trials = kTrials;
  opts.pit.working_cap = kWorkingCap;

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    double seconds = 0;
    std::string detail;
    for (const auto& name : c.suites) {
      const SuiteReport r = run_suite(name, opts);
      seconds += r.seconds;
      for (const auto& check : r.checks) {
        if (!check.passed) {
          ok = false;
          if (detail.empty()) detail = name + "/" + check.name + ": " + check.detail;
        }
      }
      if (name == "hypothesis1") {
        for (const auto& check : r.checks) {
          if (!check.detail.empty()) std::printf("  %s: %s\n", check.name.c_str(), check.detail.c_str());
        }
      }
    }
    if (c.max_seconds > 0 && seconds >= c.max_seconds) {
      ok = false;
      detail = "took " + std::to_string(seconds) + " s, bound " + std::to_string(c.max_seconds) + " s";
    }
    std::printf("%s %s: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds, detail.empty() ? "" : " ",
                detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

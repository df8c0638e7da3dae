#pragma once

// Named verification suites. Each suite is a list of exact or seeded randomized checks over
// the library operations; the CLI `verify` command and the acceptance binary both run them.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unitri/invariants.hpp"
#include "unitri/serialize.hpp"

namespace unitri {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  PitConfig pit;
  /// Degree cap for truncated layer computations.
  int cap = 5;
};

/// group-axioms, lemma1..lemma5, theorem1, theorem2-trunc, theorem3, proposition1, remark-pi,
/// followed by hypothesis1, specht, derived-series.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws AlgebraError for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

Json to_json(const SuiteReport& report);

}  // namespace unitri

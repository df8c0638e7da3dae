#pragma once

#include <string>
#include <vector>

#include "unitri/autgroup.hpp"

namespace unitri {

/// Outcome of a check that may rest on random sampling.
///
/// Fails is certain and carries the substitution(s) that exhibit the failure; Holds is an
/// exact certificate; ProbablyHolds records how many independent random trials passed.
struct Verdict {
  enum class Kind { Fails = 0, ProbablyHolds = 1, Holds = 2 };

  Kind kind = Kind::ProbablyHolds;
  std::vector<UniAut> witness;
  int trials = 0;

  static Verdict holds() { return Verdict{Kind::Holds, {}, 0}; }
  static Verdict probably_holds(int trials) { return Verdict{Kind::ProbablyHolds, {}, trials}; }
  static Verdict fails(std::vector<UniAut> witness) { return Verdict{Kind::Fails, std::move(witness), 0}; }
  static Verdict fails(UniAut witness) { return fails(std::vector<UniAut>{std::move(witness)}); }

  bool failed() const { return kind == Kind::Fails; }
  /// Holds or ProbablyHolds.
  bool passed() const { return kind != Kind::Fails; }
};

std::string to_string(Verdict::Kind kind);

}  // namespace unitri

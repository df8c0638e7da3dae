#pragma once

// Centers, centralizers and hypercenter levels of U_2 and U_3.

#include <compare>
#include <string>
#include <string_view>

#include "unitri/autgroup.hpp"
#include "unitri/invariants.hpp"
#include "unitri/verdict.hpp"

namespace unitri {

/// The ordinal a*w + b.
struct OrdinalLevel {
  int omega_coeff = 0;
  int finite_part = 0;

  static constexpr OrdinalLevel finite(int b) { return {0, b}; }
  static constexpr OrdinalLevel omega(int a, int b = 0) { return {a, b}; }

  friend constexpr auto operator<=>(const OrdinalLevel&, const OrdinalLevel&) = default;
};

/// "k", "w", "w+k", "2w", "2w+k", ...
std::string to_string(const OrdinalLevel& level);
/// Inverse of to_string; throws ParseError.
OrdinalLevel parse_ordinal(std::string_view text);

enum class CentralizerClass { WholeGroup, FirstRow, ConstantPairs, Generic };

std::string to_string(CentralizerClass c);

bool commutes(const UniAut& phi, const UniAut& psi);

/// phi is central in U_2 iff f_2 = 0 and f_1 is constant.
bool u2_center_test(const UniAut& phi);
CentralizerClass u2_centralizer_classify(const UniAut& phi);

/// Least L with phi in Z_L(U_2).
OrdinalLevel u2_hypercenter_level(const UniAut& phi);
bool u2_hypercenter_contains(const UniAut& phi, const OrdinalLevel& level);

/// Center test in U_n, n >= 3. f_1 must be fixed by U_{n-1} acting on x_2, ..., x_n.
Verdict un_center_test(const UniAut& phi, const PitConfig& cfg);

struct LevelResult {
  OrdinalLevel level;
  Verdict confidence;
  /// True when no computed layer certified membership and level is only the least band
  /// consistent with the evidence.
  bool banded = false;
};

/// Hypercenter level in U_3, with S_m membership decided on truncated layers of degree <= cap.
LevelResult u3_hypercenter_level_truncated(const UniAut& phi, int cap, const PitConfig& cfg);

}  // namespace unitri

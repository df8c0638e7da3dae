#pragma once

// The invariant algebra S inside Q<x2, x3> and its tower S_1 = S, S_{m+1} = { f : f^phi - f in S_m }.
//
// Everything here works in rank 3 with polynomials supported on x2, x3, and U_2 acting by
// x2 -> x2 + g(x3), x3 -> x3 + h. Such a substitution is represented as the rank-3
// unitriangular automorphism (x1, x2 + g, x3 + h).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitri/autgroup.hpp"
#include "unitri/freealg.hpp"
#include "unitri/linalg.hpp"
#include "unitri/verdict.hpp"

namespace unitri {

inline constexpr int kInvariantRank = 3;

/// Sampling parameters for randomized invariance checks.
struct PitConfig {
  std::uint64_t seed = 1;
  /// Random trials per check; for layer bases, the number of consecutive samples that must
  /// leave the kernel unchanged before it is accepted.
  int trials = 8;
  /// Largest degree of g in sampled substitutions x2 -> x2 + g(x3).
  int subst_degree = 2;
  /// Bound on numerators and denominators of sampled coefficients.
  int height = 10;
  /// Degree bound for everything a degree-D polynomial can reach under one substitution.
  int working_cap = 10;
  /// Largest layer index tried by the truncated U_3 classification.
  int max_layer = 3;
};

/// Throws CapExceeded unless working_cap >= degree_cap * subst_degree.
void check_caps(const PitConfig& cfg, int degree_cap);

/// (x1, x2 + g, x3 + h) in rank 3. g must be a polynomial in x3.
UniAut u2_substitution(const NcPoly& g, const Rational& h);
UniAut random_u2_substitution(const PitConfig& cfg, Rng& rng);

/// f(x2 + g, x3 + h) - f(x2, x3).
NcPoly invariance_defect(const NcPoly& f, const NcPoly& g, const Rational& h);

/// Delta_{phi_m} ... Delta_{phi_1} f where Delta_phi f = f^phi - f. f lies in S_m exactly
/// when this vanishes for every choice of phi_1, ..., phi_m in U_2.
NcPoly iterated_defect(const NcPoly& f, std::span<const UniAut> substitutions);

/// c_k = [..[[x2, x3], x3].., x3] in rank 3.
NcPoly c_poly(int k);
/// c_1, ..., c_count.
std::vector<NcPoly> c_generators(int count);

/// Q-linear combination of products of generators.
struct SubalgebraExpr {
  struct Term {
    Rational coeff;
    /// Generator indices, left to right; empty for the unit.
    std::vector<std::size_t> factors;
  };
  std::vector<Term> terms;

  NcPoly evaluate(std::span<const NcPoly> gens, int rank) const;
  /// Generators are printed as names[i]; default names are g1, g2, ...
  std::string format(std::span<const std::string> names = {}) const;
};

/// Writes f as an element of the unital subalgebra generated by homogeneous gens, or
/// returns nullopt if f is outside it. Generator words are enumerated by total degree and
/// then lexicographically; pivoting keeps the earliest usable words.
std::optional<SubalgebraExpr> subalgebra_membership(const NcPoly& f, std::span<const NcPoly> gens);

/// True when f lies in the subalgebra generated by c_1, c_2, ... (an exact invariance certificate).
bool in_c_subalgebra(const NcPoly& f);

Verdict is_invariant_pit(const NcPoly& f, const PitConfig& cfg);

/// Echelon basis of a computed truncation of S_m within polynomials of degree <= degree_cap.
/// Basis vectors have distinct leading words and are scaled so their lowest-order term is 1.
class GradedSubspace {
 public:
  GradedSubspace(int level, int degree_cap, const PitConfig& cfg, int samples, std::vector<NcPoly> vectors);

  int level() const { return level_; }
  int degree_cap() const { return degree_cap_; }
  int working_cap() const { return working_cap_; }
  int subst_degree() const { return subst_degree_; }
  int samples() const { return samples_; }
  Verdict verdict() const { return Verdict::probably_holds(samples_); }

  const std::vector<NcPoly>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  NcPoly reduce(const NcPoly& p) const;
  bool contains(const NcPoly& p) const { return reduce(p).is_zero(); }

  /// Entry d is dim(subspace ∩ polynomials of degree <= d), for d = 0..degree_cap.
  std::vector<int> dimension_by_degree() const;

 private:
  int level_;
  int degree_cap_;
  int working_cap_;
  int subst_degree_;
  int samples_;
  std::vector<NcPoly> basis_;
  WordEchelon echelon_;
};

/// Words over {x2, x3} of length <= degree_cap, in ascending graded-lex order.
std::vector<Word> ambient_words(int degree_cap);

GradedSubspace s_layer_basis(int m, int degree_cap, const PitConfig& cfg);

/// Coefficients r_{alpha,beta} in the commutator (Specht) subalgebra R with
/// f = sum r_{alpha,beta} x2^alpha x3^beta. Zero coefficients are omitted.
using StraightenMap = std::map<std::pair<int, int>, NcPoly>;

/// Precomputed bases of R by bidegree (deg_x2, deg_x3) up to a total degree cap.
class SpechtStraightener {
 public:
  explicit SpechtStraightener(int degree_cap);

  int degree_cap() const { return degree_cap_; }
  /// shuffle_seed permutes the internal column order; the result does not depend on it.
  StraightenMap straighten(const NcPoly& f, std::optional<std::uint64_t> shuffle_seed = std::nullopt) const;
  /// Basis of R in bidegree (p, q).
  const std::vector<NcPoly>& r_basis(int p, int q) const;

 private:
  int degree_cap_;
  std::map<std::pair<int, int>, std::vector<NcPoly>> r_basis_;
};

StraightenMap specht_straighten(const NcPoly& f, int degree_cap);
/// sum r_{alpha,beta} x2^alpha x3^beta.
NcPoly specht_recompose(const StraightenMap& parts);

/// [c_k, x3^N] == sum_{p+q=N-1} x3^p c_{k+1} x3^q, checked exactly.
bool proposition_identity_check(int k, int n);

/// Attempts to refute [c_k, x2] in S_m. Fails (the expected outcome) carries m substitutions
/// whose iterated defect on [c_k, x2] is nonzero, which refutes membership exactly; the
/// polynomial is also reduced against the truncated layer basis. cap = 0 means k + 2.
Verdict proposition_noninvariance_probe(int k, int m, const PitConfig& cfg, int cap = 0);

struct DimensionRow {
  int degree;
  int computed;
  int expected;
};

struct PiReport {
  int level;
  int degree_cap;
  std::vector<DimensionRow> rows;
  std::vector<std::string> image_basis;
  bool matches;
};

/// Compares the abelianized S_m layer with span{1, x3, ..., x3^(m-1)}.
PiReport remark_pi_check(int m, int degree_cap, const PitConfig& cfg);

struct ContainmentRow {
  int degree;
  /// Dimensions cut at degree <= degree.
  int span_dim;
  int layer_dim;
};

struct ContainmentReport {
  int degree_cap;
  std::vector<ContainmentRow> rows;
  bool contained;
  bool equal;
};

/// Span of products of c-generators versus the computed S_1 layer at the same cap.
ContainmentReport hypothesis1_report(int degree_cap, const PitConfig& cfg);

}  // namespace unitri

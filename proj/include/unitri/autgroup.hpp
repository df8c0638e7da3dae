#pragma once

// Unitriangular automorphisms x_i -> x_i + f_i(x_{i+1}, ..., x_n) of Q<x_1, ..., x_n>.
//
// Product convention: x^(phi psi) = (x^phi)^psi. The left factor acts first, and applying
// psi to a polynomial substitutes psi's variable images into it. Under this convention
// conjugate(phi, psi) = psi^-1 phi psi reproduces the classical U_2 conjugation formula
// (x + h(y) - h(y + b) + f(y + c), y + b).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitri/freealg.hpp"
#include "unitri/rng.hpp"

namespace unitri {

class UniAut {
 public:
  /// Validating constructor. Throws VariableLeak(i) if f_i mentions some x_j with j <= i
  /// (for i < n) and NonConstantLast if f_n is not a constant.
  UniAut(int rank, std::vector<NcPoly> offsets);

  static UniAut identity(int rank);
  /// The elementary automorphism x_i -> x_i + offset, other variables fixed.
  static UniAut elementary(int rank, int index, const NcPoly& offset);

  int rank() const { return rank_; }
  const std::vector<NcPoly>& offsets() const { return offsets_; }
  /// 1-based.
  const NcPoly& offset(int index) const { return offsets_.at(static_cast<std::size_t>(index - 1)); }
  NcPoly image(int index) const;
  std::vector<NcPoly> images() const;
  bool is_identity() const;

  friend bool operator==(const UniAut&, const UniAut&) = default;

 private:
  struct Unchecked {};
  UniAut(int rank, std::vector<NcPoly> offsets, Unchecked);
  friend UniAut compose(const UniAut&, const UniAut&);
  friend UniAut invert(const UniAut&);

  int rank_;
  std::vector<NcPoly> offsets_;
};

/// Same as the validating constructor.
UniAut aut_new(int rank, std::vector<NcPoly> offsets);

/// sigma(i, alpha, f): x_i -> alpha x_i + f. Only alpha = 1 gives an element of U_n.
struct ElementarySpec {
  ElementarySpec(int index, Rational scale, NcPoly offset);

  int index;
  Rational scale;
  NcPoly offset;

  bool is_unitriangular() const;
  /// Throws unless scale = 1 and offset only uses variables above index.
  UniAut to_uniaut() const;
};

NcPoly apply(const UniAut& phi, const NcPoly& p);
/// phi psi: phi acts first.
UniAut compose(const UniAut& phi, const UniAut& psi);
UniAut invert(const UniAut& phi);
/// psi^-1 phi psi.
UniAut conjugate(const UniAut& phi, const UniAut& psi);
/// phi^-1 psi^-1 phi psi.
UniAut group_commutator(const UniAut& phi, const UniAut& psi);

/// Elementary factors g_1, ..., g_n (returned in index order) with g_i : x_i -> x_i + f_i.
/// Composing g_n first, then g_{n-1}, ..., then g_1 gives phi back.
std::vector<UniAut> factor_semidirect(const UniAut& phi);
/// compose(g_n, g_{n-1}, ..., g_1) for factors listed in index order.
UniAut recompose_semidirect(const std::vector<UniAut>& factors);

/// Largest k in [0, n] with f_{n-k+1} = ... = f_n = 0.
int derived_level_shape(const UniAut& phi);

struct RandomAutOptions {
  int max_degree = 3;
  int coeff_height = 10;
  int max_terms = 3;
};

/// Deterministic in (rank, options, rng state).
UniAut random_aut(int rank, const RandomAutOptions& options, Rng& rng);
UniAut random_aut(int rank, int max_degree, int coeff_height, std::uint64_t seed);

/// Random polynomial with support in variables [lo, hi] (lo > hi gives a constant).
NcPoly random_poly(int rank, int lo, int hi, int max_degree, int coeff_height, int max_terms, Rng& rng);

/// For f(y) in Q<y> and nonzero d, returns r(y) with r(y + d) - r(y) = f(y) and r(0) = 0.
/// f and the result live in rank 2 and only use x2.
NcPoly u2_difference_preimage(const NcPoly& f, const Rational& d);

/// (phi, psi) with group_commutator(phi, psi) = (x + f(y), y), for f in Q<y>.
std::pair<UniAut, UniAut> u2_commutator_preimage(const NcPoly& f, const Rational& d = 1);

// Text forms.
//   "x1 + x2*x3; x2 + x3^2; x3 + 1"   full images, rank = number of images
std::string aut_format(const UniAut& phi);
UniAut aut_parse(std::string_view text);

}  // namespace unitri

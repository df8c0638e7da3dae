#include "unitri/central.hpp"

#include <algorithm>
#include <cctype>

namespace unitri {

std::string to_string(const OrdinalLevel& level) {
  const int a = level.omega_coeff;
  const int b = level.finite_part;
  if (a == 0) return std::to_string(b);
  std::string out = a == 1 ? "w" : std::to_string(a) + "w";
  if (b > 0) out += "+" + std::to_string(b);
  return out;
}

OrdinalLevel parse_ordinal(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> OrdinalLevel { throw ParseError(what, pos); };
  auto read_int = [&](int& out) {
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) fail("ordinal component too large");
      ++pos;
    }
    out = static_cast<int>(value);
    return pos > start;
  };
  if (text.empty()) return fail("empty ordinal");

  int lead = 0;
  const bool has_lead = read_int(lead);
  if (pos == text.size()) return has_lead ? OrdinalLevel::finite(lead) : fail("expected a number or 'w'");
  if (text[pos] != 'w') return fail("expected 'w'");
  ++pos;
  const int a = has_lead ? lead : 1;
  if (a == 0) return fail("zero coefficient before 'w'");
  if (pos == text.size()) return OrdinalLevel::omega(a);
  if (text[pos] != '+') return fail("expected '+'");
  ++pos;
  int b = 0;
  if (!read_int(b)) return fail("expected a number after '+'");
  if (pos != text.size()) return fail("trailing characters");
  if (b == 0) return fail("'+0' is not canonical");
  return OrdinalLevel::omega(a, b);
}

std::string to_string(CentralizerClass c) {
  switch (c) {
    case CentralizerClass::WholeGroup:
      return "WholeGroup";
    case CentralizerClass::FirstRow:
      return "FirstRow";
    case CentralizerClass::ConstantPairs:
      return "ConstantPairs";
    case CentralizerClass::Generic:
      return "Generic";
  }
  return "?";
}

bool commutes(const UniAut& phi, const UniAut& psi) {
  if (phi.rank() != psi.rank()) throw RankMismatch(phi.rank(), psi.rank());
  return compose(phi, psi) == compose(psi, phi);
}

namespace {

void require_rank(const UniAut& phi, int rank) {
  if (phi.rank() != rank) throw RankMismatch(rank, phi.rank());
}

}  // namespace

bool u2_center_test(const UniAut& phi) {
  require_rank(phi, 2);
  return phi.offset(2).is_zero() && phi.offset(1).is_constant();
}

CentralizerClass u2_centralizer_classify(const UniAut& phi) {
  require_rank(phi, 2);
  if (u2_center_test(phi)) return CentralizerClass::WholeGroup;
  const bool f1_zero = phi.offset(1).is_zero();
  const bool f2_zero = phi.offset(2).is_zero();
  if (f2_zero) return CentralizerClass::FirstRow;
  if (f1_zero) return CentralizerClass::ConstantPairs;
  return CentralizerClass::Generic;
}

OrdinalLevel u2_hypercenter_level(const UniAut& phi) {
  require_rank(phi, 2);
  if (phi.is_identity()) return OrdinalLevel::finite(0);
  if (!phi.offset(2).is_zero()) return OrdinalLevel::omega(1, 1);
  return OrdinalLevel::finite(std::max(degree(phi.offset(1)).value(), 0) + 1);
}

bool u2_hypercenter_contains(const UniAut& phi, const OrdinalLevel& level) {
  return u2_hypercenter_level(phi) <= level;
}

Verdict un_center_test(const UniAut& phi, const PitConfig& cfg) {
  const int n = phi.rank();
  if (n < 3) throw AlgebraError("center test needs rank >= 3");
  for (int i = 2; i <= n; ++i) {
    if (!phi.offset(i).is_zero()) return Verdict::fails(UniAut::elementary(n, 1, NcPoly::var(n, i)));
  }
  const NcPoly& f1 = phi.offset(1);
  if (f1.is_constant()) return Verdict::holds();
  if (n == kInvariantRank && in_c_subalgebra(f1)) return Verdict::holds();
  if (n > kInvariantRank && f1.uses_only(n - 1, n)) {
    // Relabel x_{n-1}, x_n as x2, x3: the last two variables carry the same invariants.
    std::vector<NcPoly> images(static_cast<std::size_t>(n), NcPoly(kInvariantRank));
    images[static_cast<std::size_t>(n - 2)] = NcPoly::var(kInvariantRank, 2);
    images[static_cast<std::size_t>(n - 1)] = NcPoly::var(kInvariantRank, 3);
    if (in_c_subalgebra(substitute(f1, images).with_rank(kInvariantRank))) return Verdict::holds();
  }

  auto probe = [&](const UniAut& psi) { return apply(psi, f1) != f1; };
  for (int i = 2; i <= n; ++i) {
    UniAut psi = UniAut::elementary(n, i, NcPoly::constant(n, 1));
    if (probe(psi)) return Verdict::fails(std::move(psi));
  }
  for (int i = 2; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      UniAut psi = UniAut::elementary(n, i, NcPoly::var(n, j));
      if (probe(psi)) return Verdict::fails(std::move(psi));
    }
  }
  Rng rng(cfg.seed);
  const RandomAutOptions opts{cfg.subst_degree, cfg.height, 3};
  for (int t = 0; t < cfg.trials; ++t) {
    auto offsets = random_aut(n, opts, rng).offsets();
    offsets[0] = NcPoly(n);
    UniAut psi(n, std::move(offsets));
    if (probe(psi)) return Verdict::fails(std::move(psi));
  }
  return Verdict::probably_holds(cfg.trials);
}

LevelResult u3_hypercenter_level_truncated(const UniAut& phi, int cap, const PitConfig& cfg) {
  require_rank(phi, kInvariantRank);
  const NcPoly& f1 = phi.offset(1);
  const NcPoly& f2 = phi.offset(2);
  if (!phi.offset(3).is_zero()) return {OrdinalLevel::omega(3, 1), Verdict::holds(), false};
  if (!f2.is_zero()) return {OrdinalLevel::omega(2, std::max(degree(f2).value(), 1)), Verdict::holds(), false};
  if (f1.is_zero()) return {OrdinalLevel::finite(0), Verdict::holds(), false};
  if (degree(f1).value() > cap) throw CapExceeded("offset degree exceeds the classification cap");
  if (in_c_subalgebra(f1)) return {OrdinalLevel::finite(1), Verdict::holds(), false};

  check_caps(cfg, cap);
  int samples = 0;
  for (int m = 1; m <= cfg.max_layer; ++m) {
    const GradedSubspace layer = s_layer_basis(m, cap, cfg);
    samples += layer.samples();
    if (layer.contains(f1)) return {OrdinalLevel::finite(m), layer.verdict(), false};
  }

  // Every computed layer contains the true S_m at this cap, so f_1 lies in no S_m with
  // m <= max_layer. The abelianization bounds the level further from below: the shift
  // x2 -> x2 + 1 lowers deg_x2 of pi(f) by one, so f in S_(w+m) forces deg_x2 pi(f) <= m.
  const CommPoly pi = abelianize(f1);
  const Degree dx2 = pi.degree_in_var(2);
  if (dx2.is_finite() && dx2.value() >= 1) {
    return {OrdinalLevel::omega(1, dx2.value()), Verdict::probably_holds(samples), true};
  }
  const Degree dx3 = pi.degree_in_var(3);
  const int from_pi = dx3.is_finite() ? dx3.value() + 1 : 1;
  return {OrdinalLevel::finite(std::max(cfg.max_layer + 1, from_pi)), Verdict::probably_holds(samples), true};
}

}  // namespace unitri

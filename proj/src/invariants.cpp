#include "unitri/invariants.hpp"

#include <functional>
#include <sstream>

namespace unitri {

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Fails:
      return "Fails";
    case Verdict::Kind::ProbablyHolds:
      return "ProbablyHolds";
    case Verdict::Kind::Holds:
      return "Holds";
  }
  return "?";
}

namespace {

void require_x2_x3(const NcPoly& f) {
  if (f.rank() != kInvariantRank) throw RankMismatch(kInvariantRank, f.rank());
  if (!f.uses_only(2, 3)) throw VariableLeak(1);
}

}  // namespace

void check_caps(const PitConfig& cfg, int degree_cap) {
  if (cfg.trials < 1 || cfg.subst_degree < 1 || cfg.height < 1) {
    throw AlgebraError("trials, subst_degree and height must be positive");
  }
  if (degree_cap < 0) throw CapExceeded("negative degree cap");
  if (cfg.working_cap < degree_cap * cfg.subst_degree) {
    throw CapExceeded("working cap " + std::to_string(cfg.working_cap) + " is below degree cap " +
                      std::to_string(degree_cap) + " times substitution degree " +
                      std::to_string(cfg.subst_degree));
  }
}

UniAut u2_substitution(const NcPoly& g, const Rational& h) {
  if (g.rank() != kInvariantRank) throw RankMismatch(kInvariantRank, g.rank());
  if (!g.uses_only(3, 3)) throw VariableLeak(2);
  return UniAut(kInvariantRank, {NcPoly(kInvariantRank), g, NcPoly::constant(kInvariantRank, h)});
}

UniAut random_u2_substitution(const PitConfig& cfg, Rng& rng) {
  NcPoly g(kInvariantRank);
  for (int k = 0; k <= cfg.subst_degree; ++k) g.add_term(Word::power(3, k), rng.rational(cfg.height));
  return u2_substitution(g, rng.rational(cfg.height));
}

NcPoly invariance_defect(const NcPoly& f, const NcPoly& g, const Rational& h) {
  require_x2_x3(f);
  return apply(u2_substitution(g, h), f) - f;
}

NcPoly iterated_defect(const NcPoly& f, std::span<const UniAut> substitutions) {
  // Expanding the differences gives a signed sum over ordered sub-products phi_T of the
  // substitutions; each phi_T is again a single substitution, so no intermediate result
  // grows past one substitution's degree bound.
  std::vector<std::pair<int, UniAut>> shifts{{1, UniAut::identity(f.rank())}};
  for (const auto& phi : substitutions) {
    std::vector<std::pair<int, UniAut>> next;
    next.reserve(shifts.size() * 2);
    for (const auto& [sign, theta] : shifts) {
      next.emplace_back(sign, compose(theta, phi));
      next.emplace_back(-sign, theta);
    }
    shifts = std::move(next);
  }
  NcPoly out(f.rank());
  for (const auto& [sign, theta] : shifts) {
    if (sign > 0) {
      out += apply(theta, f);
    } else {
      out -= apply(theta, f);
    }
  }
  return out;
}

NcPoly c_poly(int k) { return c_generator(k, 2, 3, kInvariantRank); }

std::vector<NcPoly> c_generators(int count) {
  std::vector<NcPoly> out;
  for (int k = 1; k <= count; ++k) out.push_back(c_poly(k));
  return out;
}

// ---------------------------------------------------------------------------
// Subalgebra membership

NcPoly SubalgebraExpr::evaluate(std::span<const NcPoly> gens, int rank) const {
  NcPoly out(rank);
  for (const auto& t : terms) {
    NcPoly prod = NcPoly::constant(rank, t.coeff);
    for (auto idx : t.factors) prod = prod * gens[idx];
    out += prod;
  }
  return out;
}

std::string SubalgebraExpr::format(std::span<const std::string> names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.factors.empty()) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      if (i) os << '*';
      const auto idx = t.factors[i];
      if (idx < names.size()) {
        os << names[idx];
      } else {
        os << 'g' << (idx + 1);
      }
    }
  }
  return os.str();
}

std::optional<SubalgebraExpr> subalgebra_membership(const NcPoly& f, std::span<const NcPoly> gens) {
  std::vector<int> gen_degree;
  for (const auto& g : gens) {
    if (g.rank() != f.rank()) throw RankMismatch(f.rank(), g.rank());
    if (g.is_zero()) throw AlgebraError("zero generator");
    const auto d = static_cast<int>(g.terms().begin()->first.size());
    for (const auto& [w, c] : g.terms()) {
      if (static_cast<int>(w.size()) != d) throw AlgebraError("non-homogeneous generator");
    }
    if (d < 1) throw AlgebraError("generators must have degree >= 1");
    gen_degree.push_back(d);
  }

  std::map<int, NcPoly> components;
  for (const auto& [w, c] : f.terms()) {
    auto [it, inserted] = components.try_emplace(static_cast<int>(w.size()), f.rank());
    it->second.add_term(w, c);
  }

  SubalgebraExpr expr;
  for (const auto& [d, part] : components) {
    if (d == 0) {
      expr.terms.push_back({part.constant_term(), {}});
      continue;
    }
    // Generator words of total degree d, lexicographic in generator indices.
    std::vector<std::vector<std::size_t>> words;
    std::vector<NcPoly> products;
    std::vector<std::size_t> current;
    std::function<void(int, const NcPoly&)> extend = [&](int remaining, const NcPoly& prefix) {
      if (remaining == 0) {
        words.push_back(current);
        products.push_back(prefix);
        return;
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gen_degree[i] > remaining) continue;
        current.push_back(i);
        extend(remaining - gen_degree[i], prefix * gens[i]);
        current.pop_back();
      }
    };
    extend(d, NcPoly::constant(f.rank(), 1));

    WordEchelon ech;
    for (std::size_t j = 0; j < products.size(); ++j) ech.insert(products[j].terms(), j);
    auto sol = ech.express(part.terms());
    if (!sol) return std::nullopt;
    for (const auto& [j, c] : *sol) expr.terms.push_back({c, words[j]});
  }
  return expr;
}

bool in_c_subalgebra(const NcPoly& f) {
  if (f.rank() != kInvariantRank || !f.uses_only(2, 3)) return false;
  if (f.is_constant()) return true;
  const int d = degree(f).value();
  if (d < 2) return false;
  const auto gens = c_generators(d - 1);
  return subalgebra_membership(f, gens).has_value();
}

Verdict is_invariant_pit(const NcPoly& f, const PitConfig& cfg) {
  require_x2_x3(f);
  if (in_c_subalgebra(f)) return Verdict::holds();

  const int r = kInvariantRank;
  const NcPoly x3 = NcPoly::var(r, 3);
  const std::vector<std::pair<NcPoly, Rational>> probes{
      {NcPoly(r), Rational(1)},
      {NcPoly::constant(r, 1), Rational(0)},
      {x3, Rational(0)},
      {x3 * x3, Rational(0)},
  };
  for (const auto& [g, h] : probes) {
    if (!invariance_defect(f, g, h).is_zero()) return Verdict::fails(u2_substitution(g, h));
  }
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const UniAut phi = random_u2_substitution(cfg, rng);
    if (apply(phi, f) != f) return Verdict::fails(phi);
  }
  return Verdict::probably_holds(cfg.trials);
}

// ---------------------------------------------------------------------------
// Proposition identities

bool proposition_identity_check(int k, int n) {
  if (k < 1 || n < 1) throw AlgebraError("k and N must be positive");
  const int r = kInvariantRank;
  const NcPoly ck = c_poly(k);
  const NcPoly next = c_poly(k + 1);
  const NcPoly lhs = ring_commutator(ck, NcPoly::monomial(r, Word::power(3, n)));
  NcPoly rhs(r);
  for (int p = 0; p <= n - 1; ++p) {
    const int q = n - 1 - p;
    rhs += NcPoly::monomial(r, Word::power(3, p)) * next * NcPoly::monomial(r, Word::power(3, q));
  }
  return lhs == rhs;
}

Verdict proposition_noninvariance_probe(int k, int m, const PitConfig& cfg, int cap) {
  if (k < 1 || m < 1) throw AlgebraError("k and m must be positive");
  const int r = kInvariantRank;
  const NcPoly f = ring_commutator(c_poly(k), NcPoly::var(r, 2));
  const int degree_cap = cap > 0 ? cap : k + 2;
  if (degree_cap < k + 2) throw CapExceeded("cap is below the degree of [c_k, x2]");

  // The refuting family shifts x2 by x3^N with N > m, so the sampled substitution degree is
  // raised to at least m + 1.
  PitConfig local = cfg;
  local.subst_degree = std::max(cfg.subst_degree, m + 1);
  local.working_cap = std::max(cfg.working_cap, degree_cap * local.subst_degree);

  std::vector<UniAut> certificate;
  auto try_tuple = [&](std::vector<UniAut> tuple) {
    if (!certificate.empty()) return;
    if (!iterated_defect(f, tuple).is_zero()) certificate = std::move(tuple);
  };
  {
    std::vector<UniAut> tuple{u2_substitution(NcPoly::monomial(r, Word::power(3, m + 1)), 0)};
    for (int i = 1; i < m; ++i) tuple.push_back(u2_substitution(NcPoly(r), 1));
    try_tuple(std::move(tuple));
  }
  Rng rng(cfg.seed ^ 0x9a7b3c1dULL);
  for (int t = 0; t < std::max(cfg.trials, 8) && certificate.empty(); ++t) {
    std::vector<UniAut> tuple;
    for (int i = 0; i < m; ++i) tuple.push_back(random_u2_substitution(local, rng));
    try_tuple(std::move(tuple));
  }

  const GradedSubspace layer = s_layer_basis(m, degree_cap, local);
  const bool refuted_by_layer = !layer.contains(f);
  if (!certificate.empty()) return Verdict::fails(std::move(certificate));
  if (refuted_by_layer) {
    // The layer computation saw a refuting sample that the search above missed; keep looking.
    for (int t = 0; t < 256 && certificate.empty(); ++t) {
      std::vector<UniAut> tuple;
      for (int i = 0; i < m; ++i) tuple.push_back(random_u2_substitution(local, rng));
      try_tuple(std::move(tuple));
    }
    if (!certificate.empty()) return Verdict::fails(std::move(certificate));
  }
  return layer.verdict();
}

}  // namespace unitri

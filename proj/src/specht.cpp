#include <algorithm>
#include <functional>

#include "unitri/invariants.hpp"

namespace unitri {

namespace {

using Bidegree = std::pair<int, int>;

Bidegree bidegree_of(const Word& w) { return {w.count(2), w.count(3)}; }

}  // namespace

SpechtStraightener::SpechtStraightener(int degree_cap) : degree_cap_(degree_cap) {
  if (degree_cap < 0) throw CapExceeded("negative degree cap");
  const int r = kInvariantRank;

  // Lie part: left-normed brackets [a1, a2, ..., aL] with L >= 2, grouped by bidegree.
  std::map<Bidegree, std::vector<NcPoly>> lie_span;
  std::function<void(const NcPoly&, Bidegree, int)> grow = [&](const NcPoly& bracket, Bidegree bd, int len) {
    if (len >= 2 && !bracket.is_zero()) lie_span[bd].push_back(bracket);
    if (len == degree_cap) return;
    for (int v = 2; v <= 3; ++v) {
      const Bidegree next{bd.first + (v == 2), bd.second + (v == 3)};
      grow(len == 0 ? NcPoly::var(r, v) : ring_commutator(bracket, NcPoly::var(r, v)), next, len + 1);
    }
  };
  grow(NcPoly::constant(r, 1), {0, 0}, 0);
  std::vector<std::pair<Bidegree, NcPoly>> lie_basis;
  for (auto& [bd, span] : lie_span) {
    for (auto& b : reduced_basis(r, span)) lie_basis.emplace_back(bd, std::move(b));
  }

  // Associative closure: products of Lie basis elements, grouped by bidegree.
  std::map<Bidegree, std::vector<NcPoly>> products;
  products[{0, 0}].push_back(NcPoly::constant(r, 1));
  std::function<void(const NcPoly&, Bidegree)> extend = [&](const NcPoly& prefix, Bidegree bd) {
    for (const auto& [lbd, l] : lie_basis) {
      const Bidegree next{bd.first + lbd.first, bd.second + lbd.second};
      if (next.first + next.second > degree_cap) continue;
      NcPoly prod = prefix * l;
      products[next].push_back(prod);
      extend(prod, next);
    }
  };
  extend(NcPoly::constant(r, 1), {0, 0});
  for (auto& [bd, span] : products) r_basis_[bd] = reduced_basis(r, span);
}

const std::vector<NcPoly>& SpechtStraightener::r_basis(int p, int q) const {
  static const std::vector<NcPoly> empty;
  auto it = r_basis_.find({p, q});
  return it == r_basis_.end() ? empty : it->second;
}

StraightenMap SpechtStraightener::straighten(const NcPoly& f, std::optional<std::uint64_t> shuffle_seed) const {
  const int r = kInvariantRank;
  if (f.rank() != r) throw RankMismatch(r, f.rank());
  if (!f.uses_only(2, 3)) throw VariableLeak(1);
  if (degree(f) > degree_cap_) throw CapExceeded("polynomial degree exceeds straightening cap");

  std::map<Bidegree, NcPoly> components;
  for (const auto& [w, c] : f.terms()) {
    auto [it, inserted] = components.try_emplace(bidegree_of(w), r);
    it->second.add_term(w, c);
  }

  StraightenMap out;
  std::optional<Rng> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);
  for (const auto& [bd, part] : components) {
    const auto [a, b] = bd;
    struct Column {
      int alpha;
      int beta;
      const NcPoly* coeff;
      NcPoly value;
    };
    std::vector<Column> columns;
    for (int alpha = 0; alpha <= a; ++alpha) {
      for (int beta = 0; beta <= b; ++beta) {
        const NcPoly tail = NcPoly::monomial(r, Word::power(2, alpha) * Word::power(3, beta));
        for (const auto& basis_elem : r_basis(a - alpha, b - beta)) {
          columns.push_back({alpha, beta, &basis_elem, basis_elem * tail});
        }
      }
    }
    if (rng) {
      for (std::size_t i = columns.size(); i > 1; --i) {
        std::swap(columns[i - 1], columns[static_cast<std::size_t>(rng->uniform(0, static_cast<std::int64_t>(i) - 1))]);
      }
    }
    WordEchelon ech;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (ech.insert(columns[j].value.terms(), j)) {
        throw AlgebraError("straightening basis is linearly dependent");
      }
    }
    const auto sol = ech.express(part.terms());
    if (!sol) throw AlgebraError("straightening failed: component outside the module span");
    for (const auto& [j, c] : *sol) {
      const Column& col = columns[j];
      auto [it, inserted] = out.try_emplace({col.alpha, col.beta}, r);
      it->second += *col.coeff * c;
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

StraightenMap specht_straighten(const NcPoly& f, int degree_cap) {
  return SpechtStraightener(degree_cap).straighten(f);
}

NcPoly specht_recompose(const StraightenMap& parts) {
  NcPoly out(kInvariantRank);
  for (const auto& [ab, coeff] : parts) {
    out += coeff * NcPoly::monomial(kInvariantRank, Word::power(2, ab.first) * Word::power(3, ab.second));
  }
  return out;
}

}  // namespace unitri

#include "unitri/invariants.hpp"

#include <algorithm>

namespace unitri {

GradedSubspace::GradedSubspace(int level, int degree_cap, const PitConfig& cfg, int samples,
                               std::vector<NcPoly> vectors)
    : level_(level),
      degree_cap_(degree_cap),
      working_cap_(cfg.working_cap),
      subst_degree_(cfg.subst_degree),
      samples_(samples) {
  for (const auto& v : vectors) echelon_.insert(v.terms());
  // Reported vectors are scaled so the lowest-order term has coefficient 1; pivots are unchanged.
  for (const auto& [pivot, row] : echelon_.rows()) {
    NcPoly b = to_poly(kInvariantRank, row.vec);
    const Rational lead = b.terms().begin()->second;
    basis_.push_back(b * Rational(1 / lead));
  }
}

NcPoly GradedSubspace::reduce(const NcPoly& p) const {
  auto v = p.terms();
  echelon_.reduce(v);
  return to_poly(p.rank(), v);
}

std::vector<int> GradedSubspace::dimension_by_degree() const {
  std::vector<int> dims(static_cast<std::size_t>(degree_cap_ + 1), 0);
  // Pivots are leading words, so a basis vector's degree is its pivot length.
  for (const auto& b : basis_) {
    for (auto d = b.leading_word().size(); d < dims.size(); ++d) ++dims[d];
  }
  return dims;
}

std::vector<Word> ambient_words(int degree_cap) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= degree_cap; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * 2);
    for (const auto& w : layer) {
      next.push_back(w * Word::letter(2));
      next.push_back(w * Word::letter(3));
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

GradedSubspace s_layer_basis(int m, int degree_cap, const PitConfig& cfg) {
  if (m < 1) throw AlgebraError("layer index must be >= 1");
  check_caps(cfg, degree_cap);
  const int r = kInvariantRank;

  std::vector<NcPoly> current;
  for (const auto& w : ambient_words(degree_cap)) current.push_back(NcPoly::monomial(r, w));

  // f lies in S_m iff every m-fold iterated defect of f vanishes. Each sample is a random
  // m-tuple of substitutions; the candidate space shrinks to the kernel of the sampled
  // iterated-defect map until `trials` consecutive samples leave it unchanged.
  Rng rng(splitmix64(cfg.seed) ^ (static_cast<std::uint64_t>(m) << 32) ^ static_cast<std::uint64_t>(degree_cap));
  const int max_samples = 4 * cfg.trials + 32;
  int stable = 0;
  int samples = 0;
  while (stable < cfg.trials && samples < max_samples) {
    std::vector<UniAut> tuple;
    for (int i = 0; i < m; ++i) tuple.push_back(random_u2_substitution(cfg, rng));
    ++samples;

    std::vector<NcPoly> images;
    images.reserve(current.size());
    for (const auto& v : current) images.push_back(iterated_defect(v, tuple));
    auto relations = kernel_relations(images);
    if (relations.size() == current.size()) {
      ++stable;
      continue;
    }
    stable = 0;
    std::vector<NcPoly> kernel;
    kernel.reserve(relations.size());
    for (const auto& rel : relations) kernel.push_back(combine(r, rel, current));
    current = reduced_basis(r, kernel);
  }
  return GradedSubspace(m, degree_cap, cfg, samples, std::move(current));
}

PiReport remark_pi_check(int m, int degree_cap, const PitConfig& cfg) {
  const GradedSubspace layer = s_layer_basis(m, degree_cap, cfg);
  const int r = kInvariantRank;

  CommEchelon computed;
  for (const auto& b : layer.basis()) computed.insert(abelianize(b).terms());
  CommEchelon expected;
  const int top = std::min(m - 1, degree_cap);
  for (int e = 0; e <= top; ++e) expected.insert(CommPoly::monomial(r, {0, 0, e}).terms());

  PiReport report{m, degree_cap, {}, {}, true};
  auto cut_dim = [](const CommEchelon& ech, int d) {
    int n = 0;
    for (const auto& [pivot, row] : ech.rows()) {
      int total = 0;
      for (int x : pivot) total += x;
      if (total <= d) ++n;
    }
    return n;
  };
  for (int d = 0; d <= degree_cap; ++d) {
    DimensionRow row{d, cut_dim(computed, d), cut_dim(expected, d)};
    if (row.computed != row.expected) report.matches = false;
    report.rows.push_back(row);
  }
  // Equal dimensions plus containment gives equality of subspaces.
  for (const auto& [pivot, row] : expected.rows()) {
    if (!computed.contains(row.vec)) report.matches = false;
  }
  if (computed.dim() != expected.dim()) report.matches = false;
  for (const auto& [pivot, row] : computed.rows()) {
    CommPoly p(r);
    for (const auto& [e, c] : row.vec) p.add_term(e, c);
    report.image_basis.push_back(poly_format(p));
  }
  return report;
}

namespace {

/// Products of c_1, ..., c_{cap-1} of total degree <= cap, including the unit.
std::vector<NcPoly> c_products(int degree_cap) {
  const int r = kInvariantRank;
  std::vector<NcPoly> out{NcPoly::constant(r, 1)};
  std::vector<NcPoly> frontier{NcPoly::constant(r, 1)};
  std::vector<int> frontier_degree{0};
  const auto gens = c_generators(std::max(degree_cap - 1, 0));
  while (!frontier.empty()) {
    std::vector<NcPoly> next;
    std::vector<int> next_degree;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const int d = frontier_degree[i] + static_cast<int>(g) + 2;
        if (d > degree_cap) continue;
        next.push_back(frontier[i] * gens[g]);
        next_degree.push_back(d);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    frontier_degree = std::move(next_degree);
  }
  return out;
}

}  // namespace

ContainmentReport hypothesis1_report(int degree_cap, const PitConfig& cfg) {
  const int r = kInvariantRank;
  const GradedSubspace s1 = s_layer_basis(1, degree_cap, cfg);
  const GradedSubspace span(1, degree_cap, cfg, 0, reduced_basis(r, c_products(degree_cap)));

  ContainmentReport report{degree_cap, {}, true, true};
  for (const auto& b : span.basis()) {
    if (!s1.contains(b)) report.contained = false;
  }
  const auto span_dims = span.dimension_by_degree();
  const auto s1_dims = s1.dimension_by_degree();
  for (int d = 0; d <= degree_cap; ++d) {
    report.rows.push_back({d, span_dims[d], s1_dims[d]});
    if (span_dims[d] != s1_dims[d]) report.equal = false;
  }
  return report;
}

}  // namespace unitri

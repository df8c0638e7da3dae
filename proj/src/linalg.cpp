#include "unitri/linalg.hpp"

namespace unitri {

NcPoly to_poly(int rank, const NcPoly::Terms& terms) {
  NcPoly p(rank);
  for (const auto& [w, c] : terms) p.add_term(w, c);
  return p;
}

std::vector<Combination> kernel_relations(const std::vector<NcPoly>& images) {
  WordEchelon ech;
  std::vector<Combination> out;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (auto rel = ech.insert(images[j].terms(), j)) out.push_back(std::move(*rel));
  }
  return out;
}

NcPoly combine(int rank, const Combination& c, const std::vector<NcPoly>& vectors) {
  NcPoly out(rank);
  for (const auto& [j, coeff] : c) out += vectors.at(j) * coeff;
  return out;
}

std::vector<NcPoly> reduced_basis(int rank, const std::vector<NcPoly>& vectors) {
  WordEchelon ech;
  for (const auto& v : vectors) ech.insert(v.terms());
  std::vector<NcPoly> out;
  out.reserve(ech.dim());
  for (const auto& [pivot, row] : ech.rows()) out.push_back(to_poly(rank, row.vec));
  return out;
}

}  // namespace unitri

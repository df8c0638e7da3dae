#include "unitri/serialize.hpp"

namespace unitri {

Json to_json(const UniAut& phi) {
  Json offsets = Json::array();
  for (const auto& f : phi.offsets()) offsets.push_back(poly_format(f));
  return Json{{"rank", phi.rank()}, {"offsets", std::move(offsets)}};
}

UniAut aut_from_json(const Json& j) {
  const int rank = j.at("rank").get<int>();
  const auto& raw = j.at("offsets");
  if (!raw.is_array() || static_cast<int>(raw.size()) != rank) throw AlgebraError("offset count does not match rank");
  std::vector<NcPoly> offsets;
  for (const auto& s : raw) offsets.push_back(poly_parse(s.get<std::string>(), rank));
  return UniAut(rank, std::move(offsets));
}

Json to_json(const Verdict& v) {
  Json j{{"kind", to_string(v.kind)}};
  if (v.failed() && !v.witness.empty()) {
    if (v.witness.size() == 1) {
      j["witness"] = to_json(v.witness.front());
    } else {
      Json chain = Json::array();
      for (const auto& w : v.witness) chain.push_back(to_json(w));
      j["witness_chain"] = std::move(chain);
    }
  }
  if (v.kind == Verdict::Kind::ProbablyHolds) j["trials"] = v.trials;
  return j;
}

Json to_json(const GradedSubspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(poly_format(b));
  Json dims = Json::object();
  const auto by_degree = s.dimension_by_degree();
  for (std::size_t d = 0; d < by_degree.size(); ++d) dims[std::to_string(d)] = by_degree[d];
  return Json{{"level", s.level()},
              {"degree_cap", s.degree_cap()},
              {"working_cap", s.working_cap()},
              {"subst_degree", s.subst_degree()},
              {"verdict", to_json(s.verdict())},
              {"basis", std::move(basis)},
              {"dimensions", std::move(dims)}};
}

Json to_json(const PiReport& r) {
  Json dims = Json::object();
  for (const auto& row : r.rows) {
    dims[std::to_string(row.degree)] = Json{{"computed", row.computed}, {"expected", row.expected}};
  }
  return Json{{"level", r.level},
              {"degree_cap", r.degree_cap},
              {"dimensions", std::move(dims)},
              {"image_basis", r.image_basis},
              {"matches", r.matches}};
}

Json to_json(const ContainmentReport& r) {
  Json dims = Json::object();
  for (const auto& row : r.rows) {
    dims[std::to_string(row.degree)] = Json{{"c_products", row.span_dim}, {"layer", row.layer_dim}};
  }
  return Json{{"degree_cap", r.degree_cap},
              {"dimensions", std::move(dims)},
              {"contained", r.contained},
              {"equal", r.equal}};
}

Json to_json(const LevelResult& r) {
  return Json{{"level", to_string(r.level)}, {"verdict", to_json(r.confidence)}, {"banded", r.banded}};
}

Json to_json(const StraightenMap& m) {
  Json out = Json::array();
  for (const auto& [ab, coeff] : m) {
    out.push_back(Json{{"alpha", ab.first}, {"beta", ab.second}, {"coefficient", poly_format(coeff)}});
  }
  return out;
}

}  // namespace unitri

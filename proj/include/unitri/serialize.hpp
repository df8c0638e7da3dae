#pragma once

// JSON forms of results. Polynomials are strings in the text grammar.
//
//   aut          {"rank": n, "offsets": ["f1", ..., "fn"]}
//   verdict      {"kind": "Holds" | "ProbablyHolds" | "Fails", "witness"?: aut,
//                 "witness_chain"?: [aut, ...], "trials"?: n}
//   subspace     {"level", "degree_cap", "working_cap", "subst_degree", "verdict",
//                 "basis": [...], "dimensions": {"0": d0, ...}}

#include <nlohmann/json.hpp>

#include "unitri/central.hpp"
#include "unitri/invariants.hpp"

namespace unitri {

using Json = nlohmann::ordered_json;

Json to_json(const UniAut& phi);
UniAut aut_from_json(const Json& j);
Json to_json(const Verdict& v);
Json to_json(const GradedSubspace& s);
Json to_json(const PiReport& r);
Json to_json(const ContainmentReport& r);
Json to_json(const LevelResult& r);
Json to_json(const StraightenMap& m);

}  // namespace unitri

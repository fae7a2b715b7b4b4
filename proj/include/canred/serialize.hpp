#pragma once

#include "canred/formal_bundle.hpp"
#include "canred/g2case.hpp"
#include "canred/height.hpp"
#include "canred/slopecalc.hpp"

#include <json.hpp>

namespace canred {

/// Key order follows insertion, so output is stable and readable.
using Json = nlohmann::ordered_json;

/// Rationals are always strings: "3", "-1/2".
Json json_rational(const Rational& q);
Json json_root(const RootVec& v);
Json json_weight(const WeightVec& v);
/// 0-based indices rendered as 1-based node numbers.
Json json_nodes(const IndexSet& s);

Json to_json(const RootSystem& rs);
Json to_json(const Parabolic& p, const std::vector<GradedPiece>& pieces);
Json to_json(const RootSystem& rs, const std::vector<HeightRow>& rows, const SafeCharacteristic& gate);
Json to_json(const Parabolic& p, const SlopeDatum& d, const CanonicalVerdict& v);
Json to_json(const Parabolic& p, const IndexSet& o, const ProjectionCheck& c, const DegreeRelation& rel);
Json to_json(const TorusReport& r);
Json to_json(const HomomorphismReport& r);
Json to_json(const AdjointBlockReport& r);
Json to_json(const OneParamReport& r);
Json to_json(const FormalBundle& b);
Json to_json(const LedgerReport& r);
Json to_json(const CounterexampleReport& r);

}  // namespace canred

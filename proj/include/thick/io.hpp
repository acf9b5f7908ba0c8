#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "thick/bpipeline.hpp"

namespace thick::io {

using json = nlohmann::json;

/// Field access with InvalidInput on a missing key or wrong type.
const json& field(const json& j, const std::string& key);

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json to_json(const Boundary& b);
Boundary boundary_from_json(const json& j);

/// {"id", "vars", "relation", "nilpotent", "thickness", "boundary", "pi", "component"?}
json to_json(const Chart& c);
Chart chart_from_json(const json& j);

json to_json(const RingMap& m);  // {var: image}
RingMap ring_map_from_json(const json& j, const MonomialQuotientRing& source, const MonomialQuotientRing& target);

/// {"charts": [...], "maps": [{"source", "target", "images"}], "base_exponent": n|null}.
/// A bare chart object is accepted as a one-chart atlas.
json to_json(const Atlas& a);
Atlas atlas_from_json(const json& j);

json to_json(const Center& c);
Center center_from_json(const json& j);

/// {"chart": id|null, "center": ...}; the oracle form {"chart", "vars"} is also read.
json to_json(const Selector& s);
Selector selector_from_json(const json& j);

json to_json(const BlowupStep& s);
json to_json(const BlowupTree& t);
BlowupTree tree_from_json(const json& j);

json to_json(const Subscheme& z);  // {chart: [generator]}
Subscheme subscheme_from_json(const json& j);

json to_json(const MonomialDivisor& d);  // {"label": mult}
MonomialDivisor divisor_from_json(const json& j);

json to_json(const Sections& s);
Sections sections_from_json(const json& j);
/// [{"chart": id, "sections": {var: {e: "num / den"}}}]
json to_json(const Retract& r);
Retract retract_from_json(const json& j);

json to_json(const PtmVerdict& v);
json to_json(const DistinguishedVerdict& v);
json to_json(const PrincipalizationResult& r);
json to_json(const MonomializeResult& r);
json to_json(const Factorization& f);
json to_json(const RetractExtension& r);
json to_json(const ResolveResult& r, const Atlas& input);
json to_json(const SmoothAwayResult& r);
json to_json(const LogSmoothEmbedding& e);

/// Oracle taking (atlas, boundary, ideal) documents and answering with a list of selectors.
using JsonOracle = std::function<json(const json& atlas, const json& boundary, const json& ideal)>;
ReductionOracle oracle_from_json(JsonOracle f);

/// digraph with one node per chart in creation order and one edge per parent/child map.
std::string to_dot(const BlowupTree& t);

}  // namespace thick::io

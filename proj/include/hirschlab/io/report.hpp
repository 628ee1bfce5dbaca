#pragma once

#include <string>

#include <json.hpp>

#include "hirschlab/bounds.hpp"
#include "hirschlab/dual_graph.hpp"
#include "hirschlab/monomial_ideal.hpp"
#include "hirschlab/weighted_graph.hpp"

namespace hirschlab::io {

/// Reports keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Integer, or null for infinity.
Json to_json(const ExtendedNat& value);
Json ring_json(const PolyRing& ring);
Json graph_json(const DualGraphReport& report);
Json dual_graph_json(const DualGraphReport& report);
Json deg_json(const DegReport& report);
Json profile_json(const PrefixProfile& profile);
Json comp_json(const CompRecord& record);
Json certificate_json(const CiCertificate& cert);
Json hilbert_json(const HilbertData& data);
Json connectivity_json(const WeightedGraph& g);

/// Graph file: {"s": 3, "edges": [[1,2],[2,3]], "weights": [1,3,1]},
/// 1-based endpoints; weights optional (default 1). Throws Error.
WeightedGraph graph_from_json(const Json& j);

/// Human summary of any report produced by the CLI.
std::string render_text(const Json& report);

}  // namespace hirschlab::io

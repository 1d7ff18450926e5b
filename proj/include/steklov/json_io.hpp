#pragma once

#include <string>

#include <json.hpp>

#include "steklov/graph.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

using json = nlohmann::ordered_json;

/// Graph wire format:
/// {"vertices":[{"id":"v0","measure":1.0,"boundary":true},...],
///  "edges":[{"u":"v0","v":"v1","weight":1.0},...]}
/// Unknown fields are rejected; measure/weight default to 1.0, boundary to
/// false.
Graph graph_from_json(const json& j);
Graph graph_from_json_string(const std::string& text);
json graph_to_json(const Graph& g);

/// {"sigma":[...],"multiplicity_groups":[[i,j],...],"Z":[...],"Z1":[...],
///  "tolerances":{...}}; Z/Z1 are null when not computable (|B| < 2).
json spectrum_report(const Graph& g, const std::vector<int>& zero_set,
                     const Tolerances& tol);

json tolerances_to_json(const Tolerances& tol);

}  // namespace steklov

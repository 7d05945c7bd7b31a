#pragma once

#include <string>

#include <json.hpp>

#include "graphck/extnat.hpp"
#include "graphck/graph.hpp"

namespace graphck {

using json = nlohmann::json;

// INF is the string "inf"; finite values are JSON numbers.
json to_json(ExtNat n);
ExtNat extnat_from_json(const json& j);

// [src, dst, index]
json to_json(const EdgeRef& e);
EdgeRef edge_from_json(const json& j);

// {"vertices": [...], "adjacency": [[...], ...]}
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// FNV-1a 64 over the compact JSON dump, as 16 hex digits.
std::string graph_hash(const Graph& g);

} // namespace graphck

#pragma once

#include "gph/graph.hpp"

#include <json.hpp>

#include <string>

namespace gph {

using Json = nlohmann::ordered_json;

// {"nodes": [...], "arcs": [{"id","src","tgt"}, ...]}, both in id order.
Json to_json(const Graph& graph);
// {"source", "target", "node_map", "arc_map"}.
Json to_json(const GraphMorphism& morphism);

// Strict readers: unknown or missing fields and invariant violations throw
// InvalidInput naming the offending location (e.g. "arcs[2].src").
Graph graph_from_json(const Json& json, const std::string& where = "$");
GraphMorphism morphism_from_json(const Json& json, const std::string& where = "$");

// Parses text, reporting syntax errors with their byte offset.
Json parse_json(const std::string& text, const std::string& where);

// Rejects any key of `object` not in `allowed`, and any missing required key.
void check_fields(const Json& object, std::initializer_list<const char*> allowed,
                  const std::string& where);

}  // namespace gph

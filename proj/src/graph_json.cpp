#include "gph/graph_json.hpp"

#include "gph/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gph {

Json to_json(const Graph& graph) {
  Json nodes = Json::array();
  for (const auto& v : graph.nodes()) nodes.push_back(v);
  Json arcs = Json::array();
  for (const Arc& a : graph.arcs()) {
    arcs.push_back(Json{{"id", a.id}, {"src", graph.node_id(a.src)}, {"tgt", graph.node_id(a.tgt)}});
  }
  return Json{{"nodes", std::move(nodes)}, {"arcs", std::move(arcs)}};
}

Json to_json(const GraphMorphism& morphism) {
  const Graph& s = morphism.source();
  const Graph& t = morphism.target();
  Json node_map = Json::object();
  for (std::size_t v = 0; v < s.node_count(); ++v) node_map[s.node_id(v)] = t.node_id(morphism.node(v));
  Json arc_map = Json::object();
  for (std::size_t a = 0; a < s.arc_count(); ++a) arc_map[s.arc(a).id] = t.arc(morphism.arc(a)).id;
  return Json{{"source", to_json(s)},
              {"target", to_json(t)},
              {"node_map", std::move(node_map)},
              {"arc_map", std::move(arc_map)}};
}

void check_fields(const Json& object, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!object.is_object()) throw InvalidInput(where + ": expected an object");
  for (const auto& item : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* key) { return item.key() == key; })) {
      throw InvalidInput(where + ": unknown field '" + item.key() + "'");
    }
  }
  for (const char* key : allowed) {
    if (!object.contains(key)) throw InvalidInput(where + ": missing field '" + key + "'");
  }
}

namespace {

std::string string_at(const Json& json, const std::string& where) {
  if (!json.is_string()) throw InvalidInput(where + ": expected a string");
  return json.get<std::string>();
}

std::map<std::string, std::string> string_map(const Json& json, const std::string& where) {
  if (!json.is_object()) throw InvalidInput(where + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& item : json.items()) {
    out[item.key()] = string_at(item.value(), where + "." + item.key());
  }
  return out;
}

}  // namespace

Graph graph_from_json(const Json& json, const std::string& where) {
  check_fields(json, {"nodes", "arcs"}, where);
  const Json& nodes_json = json.at("nodes");
  const Json& arcs_json = json.at("arcs");
  if (!nodes_json.is_array()) throw InvalidInput(where + ".nodes: expected an array");
  if (!arcs_json.is_array()) throw InvalidInput(where + ".arcs: expected an array");

  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < nodes_json.size(); ++i) {
    nodes.push_back(string_at(nodes_json[i], where + ".nodes[" + std::to_string(i) + "]"));
  }
  const std::set<std::string> known(nodes.begin(), nodes.end());
  auto endpoint = [&](const Json& value, const std::string& at) {
    std::string id = string_at(value, at);
    if (!known.count(id)) throw InvalidInput(at + ": unknown node '" + id + "'");
    return id;
  };
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < arcs_json.size(); ++i) {
    const std::string at = where + ".arcs[" + std::to_string(i) + "]";
    check_fields(arcs_json[i], {"id", "src", "tgt"}, at);
    arcs.push_back({string_at(arcs_json[i].at("id"), at + ".id"),
                    endpoint(arcs_json[i].at("src"), at + ".src"),
                    endpoint(arcs_json[i].at("tgt"), at + ".tgt")});
  }
  try {
    return Graph(std::move(nodes), std::move(arcs));
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

GraphMorphism morphism_from_json(const Json& json, const std::string& where) {
  check_fields(json, {"source", "target", "node_map", "arc_map"}, where);
  Graph source = graph_from_json(json.at("source"), where + ".source");
  Graph target = graph_from_json(json.at("target"), where + ".target");
  auto node_map = string_map(json.at("node_map"), where + ".node_map");
  auto arc_map = string_map(json.at("arc_map"), where + ".arc_map");
  try {
    return GraphMorphism::from_ids(std::move(source), std::move(target), node_map, arc_map);
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(where + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                       e.what());
  }
}

}  // namespace gph

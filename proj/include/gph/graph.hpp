#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gph {

// An arc as written by a caller: endpoints named by node id.
struct ArcSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

// An arc inside a Graph: endpoints are indices into Graph::nodes().
struct Arc {
  std::string id;
  std::size_t src;
  std::size_t tgt;

  bool is_loop() const { return src == tgt; }
};

// A finite directed multigraph. Loops and parallel arcs are allowed.
//
// Nodes and arcs are kept in lexicographic id order; that order is the
// canonical indexing used everywhere else (adjacency matrices, morphism
// maps, serialization). Graphs are immutable and cheap to copy.
class Graph {
 public:
  // The empty graph, the initial object.
  Graph();

  // Throws InvalidInput on duplicate ids or dangling endpoints.
  Graph(std::vector<std::string> nodes, std::vector<ArcSpec> arcs);

  std::size_t node_count() const;
  std::size_t arc_count() const;
  bool empty() const { return node_count() == 0; }

  std::span<const std::string> nodes() const;
  std::span<const Arc> arcs() const;
  const std::string& node_id(std::size_t v) const { return nodes()[v]; }
  const Arc& arc(std::size_t a) const { return arcs()[a]; }

  std::optional<std::size_t> find_node(std::string_view id) const;
  std::optional<std::size_t> find_arc(std::string_view id) const;
  // Like find_node/find_arc but throw InvalidInput when the id is unknown.
  std::size_t node_index(std::string_view id) const;
  std::size_t arc_index(std::string_view id) const;

  // Arcs leaving / entering a node, in arc-index order.
  std::span<const std::size_t> out_arcs(std::size_t v) const;
  std::span<const std::size_t> in_arcs(std::size_t v) const;
  std::size_t outdegree(std::size_t v) const { return out_arcs(v).size(); }
  std::size_t indegree(std::size_t v) const { return in_arcs(v).size(); }

  // Structural equality: same ids with the same incidences.
  bool operator==(const Graph& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// A graph morphism: a node map and an arc map commuting with source and
// target. Maps are stored by canonical index.
class GraphMorphism {
 public:
  // Throws InvalidInput unless both maps are total, in range, and
  // s∘arc_map = node_map∘s, t∘arc_map = node_map∘t hold arc by arc.
  GraphMorphism(Graph source, Graph target, std::vector<std::size_t> node_map,
                std::vector<std::size_t> arc_map);

  static GraphMorphism from_ids(Graph source, Graph target,
                                const std::map<std::string, std::string>& node_map,
                                const std::map<std::string, std::string>& arc_map);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  std::size_t node(std::size_t v) const { return node_map_[v]; }
  std::size_t arc(std::size_t a) const { return arc_map_[a]; }
  std::span<const std::size_t> node_map() const { return node_map_; }
  std::span<const std::size_t> arc_map() const { return arc_map_; }

  bool is_injective() const;
  bool is_bijective() const;

  bool operator==(const GraphMorphism& other) const = default;

 private:
  Graph source_;
  Graph target_;
  std::vector<std::size_t> node_map_;
  std::vector<std::size_t> arc_map_;
};

GraphMorphism identity(const Graph& graph);

// g∘f. Throws InvalidInput when f.target() != g.source().
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

// The unique morphism from the empty graph.
GraphMorphism from_empty(const Graph& target);

}  // namespace gph

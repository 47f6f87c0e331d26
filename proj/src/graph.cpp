#include "gph/graph.hpp"

#include "gph/error.hpp"

#include <algorithm>
#include <numeric>

namespace gph {

struct Graph::Data {
  std::vector<std::string> nodes;
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
};

namespace {

template <typename Range, typename Key>
std::optional<std::size_t> sorted_lookup(const Range& range, std::string_view id, Key key) {
  auto it = std::lower_bound(range.begin(), range.end(), id,
                             [&](const auto& item, std::string_view v) { return key(item) < v; });
  if (it == range.end() || key(*it) != id) return std::nullopt;
  return static_cast<std::size_t>(it - range.begin());
}

}  // namespace

Graph::Graph() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

Graph::Graph(std::vector<std::string> nodes, std::vector<ArcSpec> arcs) {
  auto data = std::make_shared<Data>();
  std::sort(nodes.begin(), nodes.end());
  if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end()) {
    throw InvalidInput("duplicate node id '" + *dup + "'");
  }
  data->nodes = std::move(nodes);

  std::sort(arcs.begin(), arcs.end(),
            [](const ArcSpec& a, const ArcSpec& b) { return a.id < b.id; });
  data->arcs.reserve(arcs.size());
  auto node_of = [&](const std::string& arc_id, const std::string& node) {
    auto v = sorted_lookup(data->nodes, node, [](const std::string& s) -> const std::string& {
      return s;
    });
    if (!v) throw InvalidInput("arc '" + arc_id + "' names unknown node '" + node + "'");
    return *v;
  };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i].id == arcs[i - 1].id) {
      throw InvalidInput("duplicate arc id '" + arcs[i].id + "'");
    }
    data->arcs.push_back(
        Arc{arcs[i].id, node_of(arcs[i].id, arcs[i].src), node_of(arcs[i].id, arcs[i].tgt)});
  }

  data->out.resize(data->nodes.size());
  data->in.resize(data->nodes.size());
  for (std::size_t a = 0; a < data->arcs.size(); ++a) {
    data->out[data->arcs[a].src].push_back(a);
    data->in[data->arcs[a].tgt].push_back(a);
  }
  data_ = std::move(data);
}

std::size_t Graph::node_count() const { return data_->nodes.size(); }
std::size_t Graph::arc_count() const { return data_->arcs.size(); }
std::span<const std::string> Graph::nodes() const { return data_->nodes; }
std::span<const Arc> Graph::arcs() const { return data_->arcs; }

std::optional<std::size_t> Graph::find_node(std::string_view id) const {
  return sorted_lookup(data_->nodes, id,
                       [](const std::string& s) -> const std::string& { return s; });
}

std::optional<std::size_t> Graph::find_arc(std::string_view id) const {
  return sorted_lookup(data_->arcs, id, [](const Arc& a) -> const std::string& { return a.id; });
}

std::size_t Graph::node_index(std::string_view id) const {
  if (auto v = find_node(id)) return *v;
  throw InvalidInput("unknown node '" + std::string(id) + "'");
}

std::size_t Graph::arc_index(std::string_view id) const {
  if (auto a = find_arc(id)) return *a;
  throw InvalidInput("unknown arc '" + std::string(id) + "'");
}

std::span<const std::size_t> Graph::out_arcs(std::size_t v) const { return data_->out[v]; }
std::span<const std::size_t> Graph::in_arcs(std::size_t v) const { return data_->in[v]; }

bool Graph::operator==(const Graph& other) const {
  if (data_ == other.data_) return true;
  if (data_->nodes != other.data_->nodes || data_->arcs.size() != other.data_->arcs.size()) {
    return false;
  }
  return std::equal(data_->arcs.begin(), data_->arcs.end(), other.data_->arcs.begin(),
                    [](const Arc& a, const Arc& b) {
                      return a.id == b.id && a.src == b.src && a.tgt == b.tgt;
                    });
}

GraphMorphism::GraphMorphism(Graph source, Graph target, std::vector<std::size_t> node_map,
                             std::vector<std::size_t> arc_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      node_map_(std::move(node_map)),
      arc_map_(std::move(arc_map)) {
  if (node_map_.size() != source_.node_count()) {
    throw InvalidInput("node map is not total on the source graph");
  }
  if (arc_map_.size() != source_.arc_count()) {
    throw InvalidInput("arc map is not total on the source graph");
  }
  for (std::size_t v : node_map_) {
    if (v >= target_.node_count()) throw InvalidInput("node map leaves the target graph");
  }
  for (std::size_t a = 0; a < arc_map_.size(); ++a) {
    if (arc_map_[a] >= target_.arc_count()) {
      throw InvalidInput("arc map leaves the target graph");
    }
    const Arc& here = source_.arc(a);
    const Arc& there = target_.arc(arc_map_[a]);
    if (there.src != node_map_[here.src] || there.tgt != node_map_[here.tgt]) {
      throw InvalidInput("arc '" + here.id + "' is mapped to '" + there.id +
                         "' but its endpoints are not");
    }
  }
}

GraphMorphism GraphMorphism::from_ids(Graph source, Graph target,
                                      const std::map<std::string, std::string>& node_map,
                                      const std::map<std::string, std::string>& arc_map) {
  std::vector<std::size_t> nodes(source.node_count());
  std::vector<std::size_t> arcs(source.arc_count());
  std::vector<bool> seen_node(nodes.size()), seen_arc(arcs.size());
  for (const auto& [from, to] : node_map) {
    std::size_t v = source.node_index(from);
    nodes[v] = target.node_index(to);
    seen_node[v] = true;
  }
  for (const auto& [from, to] : arc_map) {
    std::size_t a = source.arc_index(from);
    arcs[a] = target.arc_index(to);
    seen_arc[a] = true;
  }
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (!seen_node[v]) throw InvalidInput("node map misses '" + source.node_id(v) + "'");
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!seen_arc[a]) throw InvalidInput("arc map misses '" + source.arc(a).id + "'");
  }
  return GraphMorphism(std::move(source), std::move(target), std::move(nodes), std::move(arcs));
}

namespace {

bool all_distinct(std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace

bool GraphMorphism::is_injective() const {
  return all_distinct(node_map_) && all_distinct(arc_map_);
}

bool GraphMorphism::is_bijective() const {
  return node_map_.size() == target_.node_count() && arc_map_.size() == target_.arc_count() &&
         is_injective();
}

GraphMorphism identity(const Graph& graph) {
  std::vector<std::size_t> nodes(graph.node_count());
  std::vector<std::size_t> arcs(graph.arc_count());
  std::iota(nodes.begin(), nodes.end(), std::size_t{0});
  std::iota(arcs.begin(), arcs.end(), std::size_t{0});
  return GraphMorphism(graph, graph, std::move(nodes), std::move(arcs));
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  if (!(f.target() == g.source())) {
    throw InvalidInput("cannot compose: target of the first map is not the source of the second");
  }
  std::vector<std::size_t> nodes(f.source().node_count());
  std::vector<std::size_t> arcs(f.source().arc_count());
  for (std::size_t v = 0; v < nodes.size(); ++v) nodes[v] = g.node(f.node(v));
  for (std::size_t a = 0; a < arcs.size(); ++a) arcs[a] = g.arc(f.arc(a));
  return GraphMorphism(f.source(), g.target(), std::move(nodes), std::move(arcs));
}

GraphMorphism from_empty(const Graph& target) { return GraphMorphism(Graph(), target, {}, {}); }

}  // namespace gph

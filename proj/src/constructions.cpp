#include "gph/constructions.hpp"

#include "gph/components.hpp"
#include "gph/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace gph {

Graph cycle_graph(std::size_t n) {
  if (n == 0) throw InvalidInput("cycle graph needs at least one node");
  std::vector<std::string> nodes;
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(std::to_string(i));
    arcs.push_back({std::to_string(i), std::to_string((i + 1) % n), std::to_string(i)});
  }
  return Graph(std::move(nodes), std::move(arcs));
}

Graph path_graph(std::size_t n) {
  std::vector<std::string> nodes;
  std::vector<ArcSpec> arcs;
  for (std::size_t k = 0; k <= n; ++k) nodes.push_back(std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) {
    arcs.push_back({std::to_string(k), std::to_string(k), std::to_string(k + 1)});
  }
  return Graph(std::move(nodes), std::move(arcs));
}

Graph bouquet(std::size_t k) {
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < k; ++i) arcs.push_back({"l" + std::to_string(i), "0", "0"});
  return Graph({"0"}, std::move(arcs));
}

Graph figure_eight() { return bouquet(2); }

namespace {

ArcSpec pair_arc(std::size_t i, std::size_t j) {
  auto a = std::to_string(i);
  auto b = std::to_string(j);
  return {"(" + a + "," + b + ")", a, b};
}

std::size_t parse_count(const std::string& name, const std::string& digits) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
    throw InvalidInput("bad size in graph name '" + name + "'");
  }
  return value;
}

}  // namespace

Graph cross_graph() {
  std::vector<std::string> nodes = {"0", "1", "2", "3", "4"};
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 1; i <= 4; ++i) {
    arcs.push_back(pair_arc(0, i));
    arcs.push_back(pair_arc(i, 0));
  }
  return Graph(std::move(nodes), std::move(arcs));
}

Graph undirected_cycle4() {
  std::vector<std::string> nodes = {"0", "1", "2", "3"};
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < 4; ++i) {
    arcs.push_back(pair_arc(i, (i + 1) % 4));
    arcs.push_back(pair_arc(i, (i + 3) % 4));
  }
  return Graph(std::move(nodes), std::move(arcs));
}

Graph named_graph(const std::string& name) {
  if (name == "empty") return Graph();
  if (name == "dot") return path_graph(0);
  if (name == "arrow") return path_graph(1);
  if (name == "cross") return cross_graph();
  if (name == "uc4") return undirected_cycle4();
  if (name == "figure-eight") return figure_eight();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string kind = name.substr(0, colon);
    std::size_t n = parse_count(name, name.substr(colon + 1));
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "path") return path_graph(n);
    if (kind == "bouquet") return bouquet(n);
  }
  throw InvalidInput("unknown graph name '" + name + "'");
}

bool is_graph_name(const std::string& name) {
  try {
    named_graph(name);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

Graph product(const Graph& x, const Graph& y) {
  auto pair_id = [](const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
  };
  std::vector<std::string> nodes;
  nodes.reserve(x.node_count() * y.node_count());
  for (const auto& u : x.nodes()) {
    for (const auto& v : y.nodes()) nodes.push_back(pair_id(u, v));
  }
  std::vector<ArcSpec> arcs;
  arcs.reserve(x.arc_count() * y.arc_count());
  for (const Arc& a : x.arcs()) {
    for (const Arc& b : y.arcs()) {
      arcs.push_back({pair_id(a.id, b.id), pair_id(x.node_id(a.src), y.node_id(b.src)),
                      pair_id(x.node_id(a.tgt), y.node_id(b.tgt))});
    }
  }
  return Graph(std::move(nodes), std::move(arcs));
}

Sum disjoint_union(std::span<const Graph> summands, std::span<const std::string> tags) {
  if (!tags.empty() && tags.size() != summands.size()) {
    throw InvalidInput("disjoint union needs one tag per summand");
  }
  auto tag_of = [&](std::size_t i) { return tags.empty() ? std::to_string(i) : tags[i]; };

  std::vector<std::string> nodes;
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const std::string prefix = tag_of(i) + ":";
    const Graph& g = summands[i];
    for (const auto& v : g.nodes()) nodes.push_back(prefix + v);
    for (const Arc& a : g.arcs()) {
      arcs.push_back({prefix + a.id, prefix + g.node_id(a.src), prefix + g.node_id(a.tgt)});
    }
  }
  Sum sum{Graph(std::move(nodes), std::move(arcs)), {}};
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const std::string prefix = tag_of(i) + ":";
    const Graph& g = summands[i];
    std::vector<std::size_t> node_map, arc_map;
    for (const auto& v : g.nodes()) node_map.push_back(sum.graph.node_index(prefix + v));
    for (const Arc& a : g.arcs()) arc_map.push_back(sum.graph.arc_index(prefix + a.id));
    sum.injections.emplace_back(g, sum.graph, std::move(node_map), std::move(arc_map));
  }
  return sum;
}

Sum coproduct(const Graph& x, const Graph& y) {
  const Graph parts[] = {x, y};
  return disjoint_union(parts);
}

namespace {

// Names the classes of a quotient of first+second. Elements 0..first_size-1
// come from the first graph, the rest from the second.
std::vector<std::string> class_names(UnionFind& uf, std::span<const std::string> first_ids,
                                     std::span<const std::string> second_ids,
                                     std::vector<std::size_t>& class_of) {
  const std::size_t total = first_ids.size() + second_ids.size();
  auto id_of = [&](std::size_t e) -> const std::string& {
    return e < first_ids.size() ? first_ids[e] : second_ids[e - first_ids.size()];
  };

  // Per root: least id from the second graph, else least id from the first.
  std::vector<const std::string*> best_second(total, nullptr), best_first(total, nullptr);
  for (std::size_t e = 0; e < total; ++e) {
    std::size_t r = uf.find(e);
    auto& slot = e < first_ids.size() ? best_first[r] : best_second[r];
    if (slot == nullptr || id_of(e) < *slot) slot = &id_of(e);
  }

  std::vector<std::size_t> roots;
  for (std::size_t e = 0; e < total; ++e) {
    if (uf.find(e) == e) roots.push_back(e);
  }
  std::set<std::string> taken;
  std::vector<std::string> name_of_root(total);
  for (std::size_t r : roots) {
    if (best_second[r] != nullptr) {
      name_of_root[r] = *best_second[r];
      taken.insert(name_of_root[r]);
    }
  }
  std::vector<std::size_t> fresh;
  for (std::size_t r : roots) {
    if (best_second[r] == nullptr) fresh.push_back(r);
  }
  std::sort(fresh.begin(), fresh.end(),
            [&](std::size_t a, std::size_t b) { return *best_first[a] < *best_first[b]; });
  for (std::size_t r : fresh) {
    std::string name = *best_first[r];
    while (taken.count(name) != 0) name += '\'';
    taken.insert(name);
    name_of_root[r] = std::move(name);
  }

  class_of.resize(total);
  for (std::size_t e = 0; e < total; ++e) class_of[e] = uf.find(e);
  return name_of_root;
}

}  // namespace

Pushout pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.source() == g.source())) {
    throw InvalidInput("pushout legs must share their source graph");
  }
  const Graph& shared = f.source();
  const Graph& first = f.target();
  const Graph& second = g.target();
  const std::size_t n1 = first.node_count();
  const std::size_t a1 = first.arc_count();

  UnionFind node_uf(n1 + second.node_count());
  UnionFind arc_uf(a1 + second.arc_count());
  for (std::size_t v = 0; v < shared.node_count(); ++v) node_uf.unite(f.node(v), n1 + g.node(v));
  for (std::size_t a = 0; a < shared.arc_count(); ++a) arc_uf.unite(f.arc(a), a1 + g.arc(a));

  std::vector<std::string> first_arc_ids, second_arc_ids;
  for (const Arc& a : first.arcs()) first_arc_ids.push_back(a.id);
  for (const Arc& a : second.arcs()) second_arc_ids.push_back(a.id);

  std::vector<std::size_t> node_root, arc_root;
  auto node_name = class_names(node_uf, first.nodes(), second.nodes(), node_root);
  auto arc_name = class_names(arc_uf, first_arc_ids, second_arc_ids, arc_root);

  std::vector<std::string> nodes;
  for (std::size_t e = 0; e < node_root.size(); ++e) {
    if (node_root[e] == e) nodes.push_back(node_name[e]);
  }
  auto node_element = [&](std::size_t graph_index, std::size_t v) {
    return graph_index == 0 ? v : n1 + v;
  };
  std::vector<ArcSpec> arcs;
  for (std::size_t e = 0; e < arc_root.size(); ++e) {
    if (arc_root[e] != e) continue;
    const bool in_first = e < a1;
    const Arc& arc = in_first ? first.arc(e) : second.arc(e - a1);
    const std::size_t which = in_first ? 0 : 1;
    arcs.push_back({arc_name[e], node_name[node_root[node_element(which, arc.src)]],
                    node_name[node_root[node_element(which, arc.tgt)]]});
  }
  Graph result(std::move(nodes), std::move(arcs));

  auto cocone = [&](const Graph& leg_target, std::size_t which) {
    std::vector<std::size_t> node_map, arc_map;
    for (std::size_t v = 0; v < leg_target.node_count(); ++v) {
      node_map.push_back(result.node_index(node_name[node_root[node_element(which, v)]]));
    }
    for (std::size_t a = 0; a < leg_target.arc_count(); ++a) {
      std::size_t e = which == 0 ? a : a1 + a;
      arc_map.push_back(result.arc_index(arc_name[arc_root[e]]));
    }
    return GraphMorphism(leg_target, result, std::move(node_map), std::move(arc_map));
  };
  auto from_first = cocone(first, 0);
  auto from_second = cocone(second, 1);
  return Pushout{std::move(result), std::move(from_first), std::move(from_second)};
}

}  // namespace gph

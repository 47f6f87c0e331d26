#include "gph/components.hpp"

#include <numeric>
#include <utility>

namespace gph {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

Partition connected_components(const Graph& graph) {
  UnionFind uf(graph.node_count());
  for (const Arc& arc : graph.arcs()) uf.unite(arc.src, arc.tgt);

  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  Partition result;
  result.class_of.assign(graph.node_count(), kUnassigned);
  std::vector<std::size_t> class_of_root(graph.node_count(), kUnassigned);
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    std::size_t root = uf.find(v);
    if (class_of_root[root] == kUnassigned) {
      class_of_root[root] = result.classes.size();
      result.classes.emplace_back();
    }
    result.class_of[v] = class_of_root[root];
    result.classes[class_of_root[root]].push_back(v);
  }
  return result;
}

}  // namespace gph

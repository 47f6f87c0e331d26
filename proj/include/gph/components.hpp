#pragma once

#include "gph/graph.hpp"

#include <cstddef>
#include <vector>

namespace gph {

// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  // Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

// Components of a graph under the equivalence generated by s(a) ~ t(a).
// Classes are listed by their least node index; members ascend.
struct Partition {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;

  std::size_t count() const { return classes.size(); }
};

Partition connected_components(const Graph& graph);

}  // namespace gph

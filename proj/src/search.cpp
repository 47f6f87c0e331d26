#include "gph/search.hpp"

#include "gph/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

namespace gph {

SearchConstraints SearchConstraints::unrestricted(const Graph& x, const Graph& y) {
  std::vector<std::size_t> all_nodes(y.node_count()), all_arcs(y.arc_count());
  std::iota(all_nodes.begin(), all_nodes.end(), std::size_t{0});
  std::iota(all_arcs.begin(), all_arcs.end(), std::size_t{0});
  return SearchConstraints{std::vector(x.node_count(), all_nodes),
                           std::vector(x.arc_count(), all_arcs), false};
}

namespace {

constexpr auto kUnset = static_cast<std::size_t>(-1);

// Arcs in breadth-first order over the underlying undirected graph, so each
// arc after the first of its component meets an already-placed endpoint.
std::vector<std::size_t> arc_order(const Graph& x) {
  std::vector<std::size_t> order;
  std::vector<bool> node_seen(x.node_count()), arc_seen(x.arc_count());
  for (std::size_t start = 0; start < x.node_count(); ++start) {
    if (node_seen[start]) continue;
    node_seen[start] = true;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      auto visit = [&](std::size_t a, std::size_t other) {
        if (!arc_seen[a]) {
          arc_seen[a] = true;
          order.push_back(a);
        }
        if (!node_seen[other]) {
          node_seen[other] = true;
          queue.push_back(other);
        }
      };
      for (std::size_t a : x.out_arcs(v)) visit(a, x.arc(a).tgt);
      for (std::size_t a : x.in_arcs(v)) visit(a, x.arc(a).src);
    }
  }
  return order;
}

class Search {
 public:
  Search(const Graph& x, const Graph& y, const SearchConstraints& c, SearchBudget& budget,
         const MorphismVisitor& visit)
      : x_(x), y_(y), c_(c), budget_(budget), visit_(visit) {
    if (c.node_candidates.size() != x.node_count() || c.arc_candidates.size() != x.arc_count()) {
      throw InvalidInput("search constraints do not match the source graph");
    }
    node_allowed_.assign(x.node_count(), std::vector<char>(y.node_count(), 0));
    arc_allowed_.assign(x.arc_count(), std::vector<char>(y.arc_count(), 0));
    for (std::size_t v = 0; v < x.node_count(); ++v) {
      for (std::size_t w : c.node_candidates[v]) {
        if (w >= y.node_count()) throw InvalidInput("node candidate out of range");
        node_allowed_[v][w] = 1;
      }
    }
    for (std::size_t a = 0; a < x.arc_count(); ++a) {
      for (std::size_t b : c.arc_candidates[a]) {
        if (b >= y.arc_count()) throw InvalidInput("arc candidate out of range");
        arc_allowed_[a][b] = 1;
      }
    }
    arcs_ = arc_order(x);
    for (std::size_t v = 0; v < x.node_count(); ++v) {
      if (x.outdegree(v) == 0 && x.indegree(v) == 0) loose_nodes_.push_back(v);
    }
    node_img_.assign(x.node_count(), kUnset);
    arc_img_.assign(x.arc_count(), kUnset);
    node_used_.assign(y.node_count(), 0);
    arc_used_.assign(y.arc_count(), 0);
  }

  void run() { assign_arc(0); }

 private:
  // Binds node v to w if compatible; reports whether it was newly bound.
  bool bind_node(std::size_t v, std::size_t w, bool& fresh) {
    fresh = false;
    if (node_img_[v] != kUnset) return node_img_[v] == w;
    if (!node_allowed_[v][w]) return false;
    if (c_.injective && node_used_[w]) return false;
    node_img_[v] = w;
    node_used_[w] = 1;
    fresh = true;
    return true;
  }

  void unbind_node(std::size_t v) {
    node_used_[node_img_[v]] = 0;
    node_img_[v] = kUnset;
  }

  bool assign_arc(std::size_t depth) {
    if (depth == arcs_.size()) return assign_loose(0);
    const std::size_t a = arcs_[depth];
    const Arc& arc = x_.arc(a);

    auto try_target = [&](std::size_t b) -> bool {
      budget_.charge();
      if (!arc_allowed_[a][b] || (c_.injective && arc_used_[b])) return true;
      const Arc& image = y_.arc(b);
      bool src_fresh = false, tgt_fresh = false;
      if (!bind_node(arc.src, image.src, src_fresh)) return true;
      if (!bind_node(arc.tgt, image.tgt, tgt_fresh)) {
        if (src_fresh) unbind_node(arc.src);
        return true;
      }
      arc_img_[a] = b;
      arc_used_[b] = 1;
      bool keep_going = assign_arc(depth + 1);
      arc_used_[b] = 0;
      arc_img_[a] = kUnset;
      if (tgt_fresh) unbind_node(arc.tgt);
      if (src_fresh) unbind_node(arc.src);
      return keep_going;
    };

    if (node_img_[arc.src] != kUnset) {
      for (std::size_t b : y_.out_arcs(node_img_[arc.src])) {
        if (!try_target(b)) return false;
      }
    } else if (node_img_[arc.tgt] != kUnset) {
      for (std::size_t b : y_.in_arcs(node_img_[arc.tgt])) {
        if (!try_target(b)) return false;
      }
    } else {
      for (std::size_t b : c_.arc_candidates[a]) {
        if (!try_target(b)) return false;
      }
    }
    return true;
  }

  bool assign_loose(std::size_t i) {
    if (i == loose_nodes_.size()) return visit_(node_img_, arc_img_);
    const std::size_t v = loose_nodes_[i];
    for (std::size_t w : c_.node_candidates[v]) {
      budget_.charge();
      bool fresh = false;
      if (!bind_node(v, w, fresh)) continue;
      bool keep_going = assign_loose(i + 1);
      unbind_node(v);
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& x_;
  const Graph& y_;
  const SearchConstraints& c_;
  SearchBudget& budget_;
  const MorphismVisitor& visit_;
  std::vector<std::vector<char>> node_allowed_, arc_allowed_;
  std::vector<std::size_t> arcs_, loose_nodes_;
  std::vector<std::size_t> node_img_, arc_img_;
  std::vector<char> node_used_, arc_used_;
};

}  // namespace

void for_each_morphism(const Graph& x, const Graph& y, const SearchConstraints& constraints,
                       SearchBudget& budget, const MorphismVisitor& visit) {
  Search(x, y, constraints, budget, visit).run();
}

std::vector<GraphMorphism> enumerate_morphisms(const Graph& x, const Graph& y,
                                               SearchBudget& budget) {
  std::vector<GraphMorphism> out;
  for_each_morphism(x, y, SearchConstraints::unrestricted(x, y), budget,
                    [&](std::span<const std::size_t> nodes, std::span<const std::size_t> arcs) {
                      out.emplace_back(x, y, std::vector(nodes.begin(), nodes.end()),
                                       std::vector(arcs.begin(), arcs.end()));
                      return true;
                    });
  return out;
}

std::vector<GraphMorphism> enumerate_morphisms(const Graph& x, const Graph& y,
                                               std::uint64_t budget) {
  SearchBudget b(budget);
  return enumerate_morphisms(x, y, b);
}

std::uint64_t count_morphisms(const Graph& x, const Graph& y, SearchBudget& budget) {
  std::uint64_t count = 0;
  for_each_morphism(x, y, SearchConstraints::unrestricted(x, y), budget,
                    [&](auto, auto) {
                      ++count;
                      return true;
                    });
  return count;
}

namespace {

using NodeInvariant = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<NodeInvariant> node_invariants(const Graph& g) {
  std::vector<NodeInvariant> inv(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    std::size_t loops = 0;
    for (std::size_t a : g.out_arcs(v)) loops += g.arc(a).is_loop() ? 1 : 0;
    inv[v] = {g.indegree(v), g.outdegree(v), loops};
  }
  return inv;
}

}  // namespace

std::optional<GraphMorphism> find_isomorphism(const Graph& x, const Graph& y,
                                              SearchBudget& budget) {
  if (x.node_count() != y.node_count() || x.arc_count() != y.arc_count()) return std::nullopt;
  auto ix = node_invariants(x);
  auto iy = node_invariants(y);
  {
    auto sx = ix, sy = iy;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }
  SearchConstraints c;
  c.injective = true;
  c.node_candidates.resize(x.node_count());
  c.arc_candidates.resize(x.arc_count());
  for (std::size_t v = 0; v < x.node_count(); ++v) {
    for (std::size_t w = 0; w < y.node_count(); ++w) {
      if (ix[v] == iy[w]) c.node_candidates[v].push_back(w);
    }
  }
  for (std::size_t a = 0; a < x.arc_count(); ++a) {
    const Arc& arc = x.arc(a);
    for (std::size_t b = 0; b < y.arc_count(); ++b) {
      const Arc& other = y.arc(b);
      if (arc.is_loop() == other.is_loop() && ix[arc.src] == iy[other.src] &&
          ix[arc.tgt] == iy[other.tgt]) {
        c.arc_candidates[a].push_back(b);
      }
    }
  }
  std::optional<GraphMorphism> found;
  for_each_morphism(x, y, c, budget,
                    [&](std::span<const std::size_t> nodes, std::span<const std::size_t> arcs) {
                      found.emplace(x, y, std::vector(nodes.begin(), nodes.end()),
                                    std::vector(arcs.begin(), arcs.end()));
                      return false;
                    });
  return found;
}

std::optional<GraphMorphism> find_isomorphism(const Graph& x, const Graph& y,
                                              std::uint64_t budget) {
  SearchBudget b(budget);
  return find_isomorphism(x, y, b);
}

bool is_isomorphic(const Graph& x, const Graph& y, std::uint64_t budget) {
  return find_isomorphism(x, y, budget).has_value();
}

}  // namespace gph

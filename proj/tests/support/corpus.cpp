#include "support/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gph::testing {

namespace {

Graph from_matrix(const std::vector<std::size_t>& m, std::size_t k) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < k; ++i) nodes.push_back(std::to_string(i));
  std::vector<ArcSpec> arcs;
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t t = 0; t < m[i * k + j]; ++t) {
        arcs.push_back({"a" + std::to_string(next++), nodes[i], nodes[j]});
      }
    }
  }
  return Graph(nodes, arcs);
}

}  // namespace

std::vector<Graph> exhaustive_corpus(std::size_t max_nodes, std::size_t max_arcs) {
  std::vector<Graph> out;
  for (std::size_t k = 0; k <= max_nodes; ++k) {
    std::vector<std::size_t> m(k * k, 0);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t cell, std::size_t left) {
      if (cell == m.size()) {
        out.push_back(from_matrix(m, k));
        return;
      }
      for (std::size_t v = 0; v <= left; ++v) {
        m[cell] = v;
        fill(cell + 1, left - v);
      }
      m[cell] = 0;
    };
    fill(0, max_arcs);
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_arcs) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_nodes)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_arcs)(rng);
  std::uniform_int_distribution<std::size_t> node(0, k - 1);
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < k; ++i) nodes.push_back("v" + std::to_string(i));
  std::vector<ArcSpec> arcs;
  for (std::size_t a = 0; a < m; ++a) {
    arcs.push_back({"e" + std::to_string(a), nodes[node(rng)], nodes[node(rng)]});
  }
  return Graph(nodes, arcs);
}

std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_nodes,
                                 std::size_t max_arcs) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(rng, max_nodes, max_arcs));
  return out;
}

Graph relabelled(const Graph& graph, std::mt19937_64& rng) {
  std::vector<std::size_t> np(graph.node_count()), ap(graph.arc_count());
  std::iota(np.begin(), np.end(), std::size_t{0});
  std::iota(ap.begin(), ap.end(), std::size_t{0});
  std::shuffle(np.begin(), np.end(), rng);
  std::shuffle(ap.begin(), ap.end(), rng);
  auto node_name = [&](std::size_t v) { return "n" + std::to_string(np[v]); };
  std::vector<std::string> nodes;
  for (std::size_t v = 0; v < graph.node_count(); ++v) nodes.push_back(node_name(v));
  std::vector<ArcSpec> arcs;
  for (std::size_t a = 0; a < graph.arc_count(); ++a) {
    const Arc& arc = graph.arc(a);
    arcs.push_back({"r" + std::to_string(ap[a]), node_name(arc.src), node_name(arc.tgt)});
  }
  return Graph(nodes, arcs);
}

const std::vector<Graph>& standard_corpus() {
  static const std::vector<Graph> corpus = [] {
    auto out = exhaustive_corpus(3, 4);
    auto extra = random_corpus(20261016, 200, 4, 6);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }();
  return corpus;
}

namespace {

// Calls visit(walk) for every closed walk of length n, as a list of arcs.
void for_each_closed_walk(const Graph& g, std::size_t n,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> walk;
  std::function<void(std::size_t, std::size_t)> step = [&](std::size_t start, std::size_t at) {
    if (walk.size() == n) {
      if (at == start) visit(walk);
      return;
    }
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      if (g.arc(a).src != at) continue;
      walk.push_back(a);
      step(start, g.arc(a).tgt);
      walk.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.node_count(); ++v) step(v, v);
}

}  // namespace

Integer closed_walks(const Graph& graph, std::size_t n) {
  Integer count = 0;
  for_each_closed_walk(graph, n, [&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

Integer aperiodic_necklaces(const Graph& graph, std::size_t n) {
  Integer count = 0;
  for_each_closed_walk(graph, n, [&](const std::vector<std::size_t>& w) {
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (std::size_t i = 0; i < n && periodic; ++i) periodic = w[i] == w[(i + p) % n];
      if (periodic) return;
    }
    ++count;
  });
  if (count % n != 0) throw std::logic_error("aperiodic walks not divisible by n");
  return count / n;
}

IntPolynomial leibniz_char_poly(const Graph& graph) {
  const std::size_t k = graph.node_count();
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k, 0));
  for (const Arc& arc : graph.arcs()) a[arc.src][arc.tgt] += 1;
  // Entry (i,j) of xI - A as a polynomial.
  auto entry = [&](std::size_t i, std::size_t j) {
    return i == j ? IntPolynomial({-a[i][j], 1}) : IntPolynomial::constant(-a[i][j]);
  };
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  IntPolynomial det;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    IntPolynomial term = IntPolynomial::constant(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < k; ++i) term = term * entry(i, perm[i]);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<Integer> newton_power_sums(const IntPolynomial& monic, std::size_t n) {
  // x^d + e1' x^{d-1} + ...; with a_k the coefficient of x^{d-k}:
  // p_m = -m a_m - sum_{k=1}^{m-1} a_k p_{m-k}, a_k = 0 for k > d.
  const long d = monic.degree();
  auto a = [&](std::size_t k) -> Integer {
    return static_cast<long>(k) > d ? Integer(0) : monic[static_cast<std::size_t>(d) - k];
  };
  std::vector<Integer> p(n + 1, 0);
  for (std::size_t m = 1; m <= n; ++m) {
    Integer value = -Integer(m) * a(m);
    for (std::size_t k = 1; k < m; ++k) value -= a(k) * p[m - k];
    p[m] = value;
  }
  return {p.begin() + 1, p.end()};
}

std::vector<Integer> series_mul(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                std::size_t order) {
  std::vector<Integer> c(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

bool peel_cofibrant(const Graph& graph) {
  const std::size_t k = graph.node_count();
  std::vector<char> alive(k, 1), arc_alive(graph.arc_count(), 1);
  auto degree = [&](std::size_t v, bool incoming) {
    std::size_t d = 0;
    for (std::size_t a = 0; a < graph.arc_count(); ++a) {
      if (!arc_alive[a]) continue;
      const Arc& arc = graph.arc(a);
      d += (incoming ? arc.tgt : arc.src) == v;
    }
    return d;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < k; ++v) {
      if (!alive[v] || degree(v, true) != 1 || degree(v, false) != 0) continue;
      alive[v] = 0;
      for (std::size_t a = 0; a < graph.arc_count(); ++a) {
        if (graph.arc(a).tgt == v) arc_alive[a] = 0;
      }
      changed = true;
    }
  }
  for (std::size_t v = 0; v < k; ++v) {
    if (alive[v] && (degree(v, true) != 1 || degree(v, false) != 1)) return false;
  }
  return true;
}

bool walk_fibrant(const Graph& graph) {
  const std::size_t k = graph.node_count();
  // reach[v]: a path of the current length starts at v.
  std::vector<char> reach(k, 1);
  for (std::size_t len = 1; len <= k + 1; ++len) {
    std::vector<char> next(k, 0);
    for (const Arc& arc : graph.arcs()) {
      if (reach[arc.tgt]) next[arc.src] = 1;
    }
    reach = next;
  }
  return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

}  // namespace gph::testing

#include "gph/model_structure.hpp"

#include "gph/constructions.hpp"
#include "gph/error.hpp"
#include "gph/search.hpp"
#include "gph/witt.hpp"

#include <algorithm>
#include <set>

namespace gph {

bool is_surjecting(const GraphMorphism& f) {
  const Graph& x = f.source();
  const Graph& y = f.target();
  std::vector<char> hit(y.arc_count(), 0);
  for (std::size_t v = 0; v < x.node_count(); ++v) {
    for (std::size_t a : x.out_arcs(v)) hit[f.arc(a)] = 1;
    for (std::size_t b : y.out_arcs(f.node(v))) {
      if (!hit[b]) return false;
    }
    for (std::size_t a : x.out_arcs(v)) hit[f.arc(a)] = 0;
  }
  return true;
}

bool is_whiskering(const GraphMorphism& f) {
  if (!f.is_injective()) return false;
  const Graph& y = f.target();
  std::vector<char> node_in(y.node_count(), 0), arc_in(y.arc_count(), 0);
  for (std::size_t w : f.node_map()) node_in[w] = 1;
  for (std::size_t b : f.arc_map()) arc_in[b] = 1;

  for (std::size_t b = 0; b < y.arc_count(); ++b) {
    if (!arc_in[b] && node_in[y.arc(b).tgt]) return false;
  }
  for (std::size_t w = 0; w < y.node_count(); ++w) {
    if (node_in[w]) continue;
    if (y.indegree(w) != 1) return false;
  }
  for (std::size_t w = 0; w < y.node_count(); ++w) {
    std::size_t u = w;
    std::size_t steps = 0;
    while (!node_in[u]) {
      if (++steps > y.node_count()) return false;
      u = y.arc(y.in_arcs(u).front()).src;
    }
  }
  return true;
}

bool is_acyclic_bounded(const GraphMorphism& f, std::size_t bound, SearchBudget& budget) {
  for (std::size_t n = 1; n <= bound; ++n) {
    const Graph cycle = cycle_graph(n);
    std::set<std::vector<std::size_t>> images;
    bool injective = true;
    for_each_morphism(cycle, f.source(), SearchConstraints::unrestricted(cycle, f.source()),
                      budget, [&](auto, std::span<const std::size_t> arcs) {
                        std::vector<std::size_t> image;
                        image.reserve(arcs.size());
                        for (std::size_t a : arcs) image.push_back(f.arc(a));
                        injective = images.insert(std::move(image)).second;
                        return injective;
                      });
    if (!injective) return false;
    if (images.size() != count_morphisms(cycle, f.target(), budget)) return false;
  }
  return true;
}

bool is_acyclic_bounded(const GraphMorphism& f, std::size_t bound) {
  SearchBudget budget;
  return is_acyclic_bounded(f, bound, budget);
}

GraphMorphism source_inclusion() {
  return GraphMorphism(path_graph(0), path_graph(1), {0}, {});
}

GraphMorphism initial_cycle(std::size_t n) { return from_empty(cycle_graph(n)); }

GraphMorphism cycle_fold(std::size_t n) {
  const Graph c = cycle_graph(n);
  Sum sum = coproduct(c, c);
  std::vector<std::size_t> nodes(sum.graph.node_count()), arcs(sum.graph.arc_count());
  for (const auto& inj : sum.injections) {
    for (std::size_t v = 0; v < c.node_count(); ++v) nodes[inj.node(v)] = v;
    for (std::size_t a = 0; a < c.arc_count(); ++a) arcs[inj.arc(a)] = a;
  }
  return GraphMorphism(sum.graph, c, std::move(nodes), std::move(arcs));
}

std::vector<GraphMorphism> GeneratorSet::K() const {
  std::vector<GraphMorphism> k;
  for (std::size_t n = 0; n < bound; ++n) {
    k.push_back(i[n]);
    k.push_back(j[n]);
  }
  return k;
}

std::vector<GraphMorphism> GeneratorSet::I() const {
  auto all = J();
  for (auto& m : K()) all.push_back(std::move(m));
  return all;
}

GeneratorSet GeneratorSet::up_to(std::size_t bound) {
  GeneratorSet set{source_inclusion(), {}, {}, bound};
  for (std::size_t n = 1; n <= bound; ++n) {
    set.i.push_back(initial_cycle(n));
    set.j.push_back(cycle_fold(n));
  }
  return set;
}

GraphMorphism cycle_cover(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InvalidInput("cycle cover needs n, k >= 1");
  const Graph big = cycle_graph(n * k);
  const Graph small = cycle_graph(n);
  std::vector<std::size_t> nodes(big.node_count()), arcs(big.arc_count());
  for (std::size_t i = 0; i < n * k; ++i) {
    const std::size_t image = small.node_index(std::to_string(i % n));
    nodes[big.node_index(std::to_string(i))] = image;
    arcs[big.arc_index(std::to_string(i))] = small.arc_index(std::to_string(i % n));
  }
  return GraphMorphism(big, small, std::move(nodes), std::move(arcs));
}

GraphMorphism cycle_cover_as_pushout(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InvalidInput("cycle cover needs n, k >= 1");
  const std::size_t m = n * k;
  const GraphMorphism fold = cycle_fold(m);
  const Graph big = cycle_graph(m);
  const Graph& doubled = fold.source();
  // Copy 0 of C_m is shifted by n, copy 1 maps identically.
  std::vector<std::size_t> nodes(doubled.node_count()), arcs(doubled.arc_count());
  for (std::size_t copy = 0; copy < 2; ++copy) {
    const std::size_t shift = copy == 0 ? n : 0;
    const std::string prefix = std::to_string(copy) + ":";
    for (std::size_t i = 0; i < m; ++i) {
      const std::string target = std::to_string((i + shift) % m);
      nodes[doubled.node_index(prefix + std::to_string(i))] = big.node_index(target);
      arcs[doubled.arc_index(prefix + std::to_string(i))] = big.arc_index(target);
    }
  }
  const GraphMorphism shift_map(doubled, big, std::move(nodes), std::move(arcs));
  return pushout(shift_map, fold).from_second;
}

LiftingProblem::LiftingProblem(GraphMorphism left, GraphMorphism right, GraphMorphism top,
                               GraphMorphism bottom)
    : left_(std::move(left)),
      right_(std::move(right)),
      top_(std::move(top)),
      bottom_(std::move(bottom)) {
  if (!(top_.source() == left_.source()) || !(bottom_.source() == left_.target()) ||
      !(top_.target() == right_.source()) || !(bottom_.target() == right_.target())) {
    throw InvalidInput("lifting square corners do not match");
  }
  if (!(compose(right_, top_) == compose(bottom_, left_))) {
    throw InvalidInput("lifting square does not commute");
  }
}

std::optional<GraphMorphism> find_lift(const LiftingProblem& p, SearchBudget& budget) {
  const Graph& y = p.left().target();
  const Graph& a = p.right().source();
  const GraphMorphism& r = p.right();
  const GraphMorphism& g = p.bottom();

  SearchConstraints c;
  c.node_candidates.resize(y.node_count());
  c.arc_candidates.resize(y.arc_count());
  for (std::size_t v = 0; v < y.node_count(); ++v) {
    for (std::size_t w = 0; w < a.node_count(); ++w) {
      if (r.node(w) == g.node(v)) c.node_candidates[v].push_back(w);
    }
  }
  for (std::size_t e = 0; e < y.arc_count(); ++e) {
    for (std::size_t b = 0; b < a.arc_count(); ++b) {
      if (r.arc(b) == g.arc(e)) c.arc_candidates[e].push_back(b);
    }
  }
  // h∘left = top pins h on the image of left.
  auto pin = [](std::vector<std::size_t>& candidates, std::size_t value) {
    bool allowed = std::find(candidates.begin(), candidates.end(), value) != candidates.end();
    candidates.assign(allowed ? 1 : 0, value);
  };
  const GraphMorphism& l = p.left();
  const GraphMorphism& f = p.top();
  for (std::size_t v = 0; v < l.source().node_count(); ++v) {
    pin(c.node_candidates[l.node(v)], f.node(v));
  }
  for (std::size_t e = 0; e < l.source().arc_count(); ++e) {
    pin(c.arc_candidates[l.arc(e)], f.arc(e));
  }

  std::optional<GraphMorphism> lift;
  for_each_morphism(y, a, c, budget,
                    [&](std::span<const std::size_t> nodes, std::span<const std::size_t> arcs) {
                      lift.emplace(y, a, std::vector(nodes.begin(), nodes.end()),
                                   std::vector(arcs.begin(), arcs.end()));
                      return false;
                    });
  if (lift && (!(compose(*lift, l) == f) || !(compose(r, *lift) == g))) {
    throw InternalInconsistency("lifting search returned a non-lift");
  }
  return lift;
}

std::optional<GraphMorphism> find_lift(const LiftingProblem& problem) {
  SearchBudget budget;
  return find_lift(problem, budget);
}

Factorization factorize_bounded(const GraphMorphism& f, std::size_t depth) {
  const Graph& y = f.target();
  const GraphMorphism s = source_inclusion();
  GraphMorphism whisker = identity(f.source());
  GraphMorphism rest = f;
  std::size_t rounds = 0;

  while (rounds < depth && !is_surjecting(rest)) {
    // Defects as (node id in W, arc of Y), found before this round's gluing.
    std::vector<std::pair<std::string, std::size_t>> defects;
    const Graph& w = rest.source();
    for (std::size_t v = 0; v < w.node_count(); ++v) {
      std::set<std::size_t> covered;
      for (std::size_t a : w.out_arcs(v)) covered.insert(rest.arc(a));
      for (std::size_t b : y.out_arcs(rest.node(v))) {
        if (covered.count(b) == 0) defects.emplace_back(w.node_id(v), b);
      }
    }
    for (const auto& [node_id, b] : defects) {
      const Graph& current = rest.source();
      const GraphMorphism at_node(s.source(), current, {current.node_index(node_id)}, {});
      Pushout glued = pushout(s, at_node);
      const GraphMorphism& inclusion = glued.from_second;
      const Graph& next = glued.graph;

      std::vector<std::size_t> nodes(next.node_count()), arcs(next.arc_count());
      for (std::size_t u = 0; u < current.node_count(); ++u) {
        nodes[inclusion.node(u)] = rest.node(u);
      }
      for (std::size_t a = 0; a < current.arc_count(); ++a) {
        arcs[inclusion.arc(a)] = rest.arc(a);
      }
      nodes[glued.from_first.node(1)] = y.arc(b).tgt;
      arcs[glued.from_first.arc(0)] = b;
      GraphMorphism extended(next, y, std::move(nodes), std::move(arcs));

      whisker = compose(inclusion, whisker);
      rest = std::move(extended);
    }
    ++rounds;
  }
  if (!(compose(rest, whisker) == f)) {
    throw InternalInconsistency("factorization does not compose back to the input");
  }
  return Factorization{std::move(whisker), rest, is_surjecting(rest), rounds};
}

bool is_fibrant(const Graph& graph) {
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (graph.outdegree(v) == 0) return false;
  }
  return true;
}

bool is_cofibrant(const Graph& graph) {
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (graph.indegree(v) != 1) return false;
  }
  return true;
}

namespace {

bool is_aperiodic(const std::vector<std::size_t>& walk) {
  const std::size_t n = walk.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool invariant = true;
    for (std::size_t i = 0; i < n && invariant; ++i) invariant = walk[i] == walk[(i + d) % n];
    if (invariant) return false;
  }
  return true;
}

std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& walk) {
  std::vector<std::size_t> best = walk;
  std::vector<std::size_t> rotated = walk;
  for (std::size_t r = 1; r < walk.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

}  // namespace

CycleResolution cofibrant_replacement(const Graph& graph, std::size_t bound,
                                      SearchBudget& budget) {
  if (bound == 0) throw InvalidInput("cofibrant replacement needs a bound >= 1");
  const AlmostFiniteZSet census = from_graph(graph);

  std::vector<Graph> copies;
  std::vector<std::string> tags;
  std::vector<GraphMorphism> counits;
  std::vector<NecklaceRow> rows;
  for (std::size_t n = 1; n <= bound; ++n) {
    const Graph cycle = cycle_graph(n);
    std::set<std::vector<std::size_t>> necklaces;
    for_each_morphism(cycle, graph, SearchConstraints::unrestricted(cycle, graph), budget,
                      [&](auto, std::span<const std::size_t> arcs) {
                        // Arc i of C_n is arc i of the cycle's canonical order
                        // only when ids sort numerically; re-index by id value.
                        std::vector<std::size_t> walk(n);
                        for (std::size_t a = 0; a < n; ++a) {
                          walk[std::stoul(cycle.arc(a).id)] = arcs[a];
                        }
                        if (is_aperiodic(walk)) necklaces.insert(least_rotation(walk));
                        return true;
                      });
    NecklaceRow row{n, census.ghost(n), census.witt(n), {}};
    if (row.witt != necklaces.size()) {
      throw InternalInconsistency("found " + std::to_string(necklaces.size()) +
                                  " aperiodic necklaces of length " + std::to_string(n) +
                                  " but the Witt coordinate is " + row.witt.str());
    }
    std::size_t k = 0;
    for (const auto& walk : necklaces) {
      std::vector<std::size_t> nodes(n), arcs(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = cycle.node_index(std::to_string(i));
        arcs[cycle.arc_index(std::to_string(i))] = walk[i];
        nodes[v] = graph.arc(walk[i]).tgt;
      }
      counits.emplace_back(cycle, graph, std::move(nodes), std::move(arcs));
      copies.push_back(cycle);
      tags.push_back(std::to_string(n) + "." + std::to_string(k++));
    }
    row.representatives.assign(necklaces.begin(), necklaces.end());
    rows.push_back(std::move(row));
  }

  Sum sum = disjoint_union(copies, tags);
  std::vector<std::size_t> nodes(sum.graph.node_count()), arcs(sum.graph.arc_count());
  for (std::size_t c = 0; c < counits.size(); ++c) {
    const GraphMorphism& inj = sum.injections[c];
    for (std::size_t v = 0; v < copies[c].node_count(); ++v) nodes[inj.node(v)] = counits[c].node(v);
    for (std::size_t a = 0; a < copies[c].arc_count(); ++a) arcs[inj.arc(a)] = counits[c].arc(a);
  }
  GraphMorphism counit(sum.graph, graph, std::move(nodes), std::move(arcs));
  return CycleResolution{std::move(sum.graph), std::move(counits), std::move(counit),
                         std::move(rows)};
}

CycleResolution cofibrant_replacement(const Graph& graph, std::size_t bound) {
  SearchBudget budget;
  return cofibrant_replacement(graph, bound, budget);
}

}  // namespace gph

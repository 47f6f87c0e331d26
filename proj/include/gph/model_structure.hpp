#pragma once

#include "gph/bigint.hpp"
#include "gph/budget.hpp"
#include "gph/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gph {

// Surjecting: for every node x, every arc leaving f(x) is the image of an
// arc leaving x. These are the fibrations.
bool is_surjecting(const GraphMorphism& f);

// Whiskering: f is injective, no arc outside the image enters the image, and
// the complement is a forest of out-directed trees rooted on the image
// (every node outside has one entering arc, and walking those arcs
// backwards reaches the image).
bool is_whiskering(const GraphMorphism& f);

// C_n(f): C_n(X) -> C_n(Y) is bijective for every n <= bound. Only a
// semi-decision of acyclicity: true means "acyclic up to bound".
bool is_acyclic_bounded(const GraphMorphism& f, std::size_t bound, SearchBudget& budget);
bool is_acyclic_bounded(const GraphMorphism& f, std::size_t bound);

// The generators: s: D -> A; i_n: 0 -> C_n; j_n: C_n + C_n -> C_n (fold).
struct GeneratorSet {
  GraphMorphism s;
  std::vector<GraphMorphism> i;  // i[n-1] = i_n
  std::vector<GraphMorphism> j;  // j[n-1] = j_n
  std::size_t bound;

  // J = {s}, K = {i_n, j_n : n <= bound}, I = J ∪ K.
  static GeneratorSet up_to(std::size_t bound);
  std::vector<GraphMorphism> J() const { return {s}; }
  std::vector<GraphMorphism> K() const;
  std::vector<GraphMorphism> I() const;
};

GraphMorphism source_inclusion();            // s
GraphMorphism initial_cycle(std::size_t n);  // i_n
GraphMorphism cycle_fold(std::size_t n);     // j_n

// pi_{n,k}: C_{nk} -> C_n, i -> i mod n.
GraphMorphism cycle_cover(std::size_t n, std::size_t k);

// The same map realized as the pushout of j_{nk} along
// f: C_{nk} + C_{nk} -> C_{nk}, f(i,0) = i+n, f(i,1) = i. Returns the
// cocone leg out of the target of j_{nk}.
GraphMorphism cycle_cover_as_pushout(std::size_t n, std::size_t k);

// A commuting square
//      X --top--> A
//      |          |
//    left       right
//      v          v
//      Y --bottom-> B
class LiftingProblem {
 public:
  // Throws InvalidInput unless the corners match and right∘top = bottom∘left.
  LiftingProblem(GraphMorphism left, GraphMorphism right, GraphMorphism top,
                 GraphMorphism bottom);

  const GraphMorphism& left() const { return left_; }
  const GraphMorphism& right() const { return right_; }
  const GraphMorphism& top() const { return top_; }
  const GraphMorphism& bottom() const { return bottom_; }

 private:
  GraphMorphism left_, right_, top_, bottom_;
};

// A diagonal h: Y -> A with h∘left = top and right∘h = bottom, or nullopt
// after exhausting the search.
std::optional<GraphMorphism> find_lift(const LiftingProblem& problem, SearchBudget& budget);
std::optional<GraphMorphism> find_lift(const LiftingProblem& problem);

struct Factorization {
  GraphMorphism whisker;  // X -> W, a Whiskering
  GraphMorphism rest;     // W -> Y, Surjecting when complete
  bool complete;
  std::size_t rounds;
};

// Small-object factorization of f: X -> Y against J = {s}. Each round finds
// every lifting defect (a node w and an arc leaving its image that no arc
// leaving w hits), in node then arc order, and glues one pushout of s per
// defect. Stops after `depth` rounds or once the right factor is Surjecting.
Factorization factorize_bounded(const GraphMorphism& f, std::size_t depth);

// No dead-ends: every node has an arc leaving it.
bool is_fibrant(const Graph& graph);

// For finite graphs, a disjoint union of whiskered cycles is exactly a graph
// in which every node has one entering arc: walking entering arcs backwards
// must eventually repeat a node, so each component contains one cycle and
// the rest hangs off it as out-directed trees.
bool is_cofibrant(const Graph& graph);

struct NecklaceRow {
  std::size_t length;
  Integer ghost;  // c_n
  Integer witt;   // s_n
  // Least rotation of each aperiodic closed walk, as arc indices of X.
  std::vector<std::vector<std::size_t>> representatives;
};

struct CycleResolution {
  Graph graph;                         // sum of s_n copies of C_n, n <= bound
  std::vector<GraphMorphism> counits;  // one C_n -> X per copy, in graph order
  GraphMorphism counit;                // the combined map graph -> X
  std::vector<NecklaceRow> necklaces;  // n = 1..bound
};

// The cycle resolution c(X) truncated to periods <= bound. Copy k of C_n is
// tagged "n.k" in the result's ids. Throws InternalInconsistency if the
// number of necklaces of some length disagrees with the Witt coordinate.
CycleResolution cofibrant_replacement(const Graph& graph, std::size_t bound,
                                      SearchBudget& budget);
CycleResolution cofibrant_replacement(const Graph& graph, std::size_t bound);

}  // namespace gph

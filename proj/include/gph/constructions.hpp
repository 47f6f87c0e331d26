#pragma once

#include "gph/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gph {

// C_n: nodes and arcs are the integers mod n, arc i runs from i+1 to i.
// Throws InvalidInput for n == 0.
Graph cycle_graph(std::size_t n);

// P_n: nodes 0..n, arc k runs from k to k+1. path_graph(0) is the dot D,
// path_graph(1) the arrow A.
Graph path_graph(std::size_t n);

// One node carrying k loops; bouquet(2) is the figure-eight.
Graph bouquet(std::size_t k);
Graph figure_eight();

// Hub 0 joined both ways to each of 1..4.
Graph cross_graph();

// The undirected 4-cycle: arcs (i,i+1) and (i,i-1) for i mod 4.
Graph undirected_cycle4();

// Named graphs: "empty", "dot", "arrow", "cross", "uc4", "figure-eight",
// "bouquet:k", "cycle:n", "path:n". Throws InvalidInput for anything else.
Graph named_graph(const std::string& name);
bool is_graph_name(const std::string& name);

// Node (x,y) for every node pair, arc (a,b) for every arc pair.
Graph product(const Graph& x, const Graph& y);

struct Sum {
  Graph graph;
  std::vector<GraphMorphism> injections;
};

// Ids are prefixed with "<tag>:"; tags default to the summand position.
Sum disjoint_union(std::span<const Graph> summands, std::span<const std::string> tags = {});
Sum coproduct(const Graph& x, const Graph& y);

struct Pushout {
  Graph graph;
  GraphMorphism from_first;   // target(f) -> pushout
  GraphMorphism from_second;  // target(g) -> pushout
};

// Pushout of f: R -> T and g: R -> X, computed elementwise by union-find
// on T+X. A class meeting X keeps the least X id it contains; the other
// classes keep their least T id, primed (') until unique. Attaching new
// material along g therefore leaves the ids of X untouched.
Pushout pushout(const GraphMorphism& f, const GraphMorphism& g);

}  // namespace gph

#pragma once

#include "gph/budget.hpp"
#include "gph/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gph {

// Restrictions on a morphism search X -> Y: the admissible images of each
// node and arc of X, and optionally injectivity.
struct SearchConstraints {
  std::vector<std::vector<std::size_t>> node_candidates;  // per node of X
  std::vector<std::vector<std::size_t>> arc_candidates;   // per arc of X
  bool injective = false;

  // Every node may go to every node, every arc to every arc.
  static SearchConstraints unrestricted(const Graph& x, const Graph& y);
};

// Called with (node_map, arc_map) of each solution; return false to stop.
using MorphismVisitor =
    std::function<bool(std::span<const std::size_t>, std::span<const std::size_t>)>;

// Backtracking over arc assignments (arcs fix the images of their endpoints),
// then over the nodes no arc touches. Solutions are visited in a fixed order.
// Every candidate tried is charged to the budget.
void for_each_morphism(const Graph& x, const Graph& y, const SearchConstraints& constraints,
                       SearchBudget& budget, const MorphismVisitor& visit);

std::vector<GraphMorphism> enumerate_morphisms(const Graph& x, const Graph& y,
                                               SearchBudget& budget);
std::vector<GraphMorphism> enumerate_morphisms(const Graph& x, const Graph& y,
                                               std::uint64_t budget = kDefaultSearchBudget);

std::uint64_t count_morphisms(const Graph& x, const Graph& y, SearchBudget& budget);

// A bijective morphism X -> Y, if one exists.
std::optional<GraphMorphism> find_isomorphism(const Graph& x, const Graph& y,
                                              SearchBudget& budget);
std::optional<GraphMorphism> find_isomorphism(const Graph& x, const Graph& y,
                                              std::uint64_t budget = kDefaultSearchBudget);
bool is_isomorphic(const Graph& x, const Graph& y, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace gph

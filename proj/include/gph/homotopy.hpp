#pragma once

#include "gph/bigint.hpp"
#include "gph/budget.hpp"
#include "gph/graph.hpp"
#include "gph/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gph {

// Class key of a finite graph in the homotopy category: det(I - uA).
struct HomotopySignature {
  IntPolynomial reversed_char_poly;

  std::string to_string() const { return reversed_char_poly.to_string("u"); }
  bool operator==(const HomotopySignature&) const = default;
};

HomotopySignature signature(const Graph& graph);

// Almost-isospectrality, i.e. homotopy equivalence of finite graphs. Decided
// by comparing det(I - uA) and, independently, the cycle counts c_n for
// n <= max(node counts): both reversed polynomials have degree at most that
// bound, and Newton's identities recover their coefficients from those power
// sums. Throws InternalInconsistency if the two routes disagree.
bool homotopy_equivalent(const Graph& x, const Graph& y);

// Maps in cZSet from the period <= bound part of jH(X) into jH(Y): each
// Z/n orbit of the source may go to any of the c_n(Y) n-periodic points, so
// the count is prod_{n <= bound} c_n(Y)^{s_n(X)}.
Integer hom_count_bounded(const Graph& x, const Graph& y, std::size_t bound);

// pi_0 of the truncated cycle resolution: sum_{n <= bound} s_n(X).
Integer derived_components(const Graph& graph, std::size_t bound);

struct ExploreOptions {
  std::size_t max_nodes = 0;
  std::size_t max_arcs = 0;
  // Enumerate every digraph within the budgets (up to isomorphism) when
  // true; otherwise only the built-in named family.
  bool exhaustive = true;
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::size_t workers = 0;  // 0: hardware concurrency
};

struct ExploreMember {
  std::string name;
  Graph graph;
};

struct SignatureBucket {
  HomotopySignature signature;
  std::vector<ExploreMember> members;
  // isomorphic[i][j] for members i, j.
  std::vector<std::vector<bool>> isomorphic;

  // Two members that are homotopy equivalent but not isomorphic.
  bool has_nonisomorphic_pair() const;
};

struct ExploreReport {
  std::size_t graphs_examined = 0;
  std::vector<SignatureBucket> buckets;  // ordered by signature text
};

// The built-in family: empty, dot, arrow, figure-eight, cross, uc4, and
// cycle:n, path:n, bouquet:n for small n.
std::vector<ExploreMember> builtin_family();

// Enumerates candidate graphs, computes signatures in parallel, and buckets
// them. Exhaustive enumeration walks arc-multiplicity matrices and keeps one
// representative per isomorphism class (least adjacency matrix under node
// permutations); it charges one budget unit per matrix visited.
ExploreReport explore(const ExploreOptions& options);

}  // namespace gph

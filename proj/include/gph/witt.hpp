#pragma once

#include "gph/bigint.hpp"
#include "gph/graph.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gph {

// Moebius function by trial factorization, memoized. mobius(1) == 1.
int mobius(std::size_t n);

// s_n = (1/n) sum_{d|n} mu(n/d) c_d, with ghost[k-1] = c_k for k <= n.
// Throws NotRealizable if the sum is not divisible by n or s_n < 0.
Integer ghost_to_witt(std::span<const Integer> ghost, std::size_t n);

// c_n = sum_{d|n} d s_d, with witt[k-1] = s_k for k <= n.
Integer witt_to_ghost(std::span<const Integer> witt, std::size_t n);

// A Z-set in which every element is periodic and each period occurs finitely
// often, held through its ghost components c_n = |[Z/n, S]| and Witt
// coordinates s_n = number of orbits of size n, both evaluated on demand and
// memoized. Copies share the memo tables, which are internally synchronized.
class AlmostFiniteZSet {
 public:
  using GhostSource = std::function<Integer(std::size_t)>;

  // The empty Z-set.
  AlmostFiniteZSet();

  // Any n -> c_n rule; `provenance` is descriptive only.
  static AlmostFiniteZSet from_ghost(GhostSource ghost, std::string provenance);

  // Finite support: counts[n] copies of Z/n.
  static AlmostFiniteZSet from_orbits(const std::map<std::size_t, Integer>& counts);

  const std::string& provenance() const;

  Integer ghost(std::size_t n) const;
  // Throws NotRealizable when the ghost sequence is not that of a Z-set.
  Integer witt(std::size_t n) const;
  std::vector<Integer> ghost_upto(std::size_t n) const;
  std::vector<Integer> witt_upto(std::size_t n) const;

 private:
  struct State;
  explicit AlmostFiniteZSet(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

// jH(X): ghost components are the cycle counts tr(A^n) of X.
AlmostFiniteZSet from_graph(const Graph& graph);

// Disjoint union: ghost components add.
AlmostFiniteZSet burnside_add(const AlmostFiniteZSet& s, const AlmostFiniteZSet& t);

// Cartesian product with the diagonal action: ghost components multiply.
AlmostFiniteZSet burnside_mul(const AlmostFiniteZSet& s, const AlmostFiniteZSet& t);

// Coefficients 0..order of prod_{n>=1} (1 - u^n)^(-s_n), using only
// integer arithmetic on the Witt coordinates.
std::vector<Integer> zeta_product_form(const AlmostFiniteZSet& s, std::size_t order);

}  // namespace gph

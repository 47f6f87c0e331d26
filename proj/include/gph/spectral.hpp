#pragma once

#include "gph/bigint.hpp"
#include "gph/graph.hpp"
#include "gph/polynomial.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gph {

// Square matrix of arc multiplicities: entry (i, j) counts arcs i -> j, rows
// and columns in canonical node order.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t order = 0)
      : order_(order), entries_(order * order, Integer(0)) {}

  std::size_t order() const { return order_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

  AdjacencyMatrix operator*(const AdjacencyMatrix& other) const;
  Integer trace() const;
  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t order_;
  std::vector<Integer> entries_;
};

AdjacencyMatrix adjacency_matrix(const Graph& graph);

// det(xI - A) by the Berkowitz algorithm: division-free, exact.
IntPolynomial char_poly(const AdjacencyMatrix& a);

// det(I - uA) = u^order · char_poly(1/u).
IntPolynomial reversed_char_poly(const AdjacencyMatrix& a);

// c_n = tr(A^n), the number of morphisms C_n -> X. Throws for n == 0.
Integer cycle_count(const Graph& graph, std::size_t n);

// c_1..c_upto (index 0 holds c_1).
std::vector<Integer> cycle_counts(const Graph& graph, std::size_t upto);

// Coefficients z_0..z_order of exp(sum c_n u^n / n), computed over the
// rationals from n z_n = sum_{k=1..n} c_k z_{n-k}. ghost[k-1] is c_k and must
// cover 1..order. Throws IntegralityViolation if a coefficient is not an
// integer (the ghost sequence then does not come from a Z-set).
std::vector<Integer> exp_series_from_ghost(std::span<const Integer> ghost, std::size_t order);

struct ZetaSeries {
  IntPolynomial denominator;  // det(I - uA)
  std::size_t truncation_order = 0;
  std::vector<Integer> coefficients;  // z_0 .. z_truncation_order

  // "1/(1 - 4*u^2)"
  std::string rational_form() const;
};

ZetaSeries zeta_series(const Graph& graph, std::size_t order);

}  // namespace gph

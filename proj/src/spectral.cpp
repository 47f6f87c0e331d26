#include "gph/spectral.hpp"

#include "gph/error.hpp"

namespace gph {

AdjacencyMatrix AdjacencyMatrix::operator*(const AdjacencyMatrix& other) const {
  AdjacencyMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t k = 0; k < order_; ++k) {
      const Integer& left = (*this)(i, k);
      if (left == 0) continue;
      for (std::size_t j = 0; j < order_; ++j) out(i, j) += left * other(k, j);
    }
  }
  return out;
}

Integer AdjacencyMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

AdjacencyMatrix adjacency_matrix(const Graph& graph) {
  AdjacencyMatrix a(graph.node_count());
  for (const Arc& arc : graph.arcs()) a(arc.src, arc.tgt) += 1;
  return a;
}

IntPolynomial char_poly(const AdjacencyMatrix& a) {
  const std::size_t n = a.order();
  // Descending coefficients of the characteristic polynomial of the leading
  // r x r block, grown one row and column at a time.
  std::vector<Integer> v{1};
  for (std::size_t r = 0; r < n; ++r) {
    // First column of the Toeplitz factor: 1, -a_rr, -R C, -R A_r C, ...
    std::vector<Integer> column{1, -a(r, r)};
    std::vector<Integer> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * w[i];
      column.push_back(-dot);
      std::vector<Integer> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * w[j];
      }
      w = std::move(next);
    }
    std::vector<Integer> grown(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= r && j <= i; ++j) grown[i] += column[i - j] * v[j];
    }
    v = std::move(grown);
  }
  return IntPolynomial(std::vector<Integer>(v.rbegin(), v.rend()));
}

IntPolynomial reversed_char_poly(const AdjacencyMatrix& a) {
  return char_poly(a).reversed(a.order());
}

std::vector<Integer> cycle_counts(const Graph& graph, std::size_t upto) {
  std::vector<Integer> counts;
  counts.reserve(upto);
  const AdjacencyMatrix a = adjacency_matrix(graph);
  AdjacencyMatrix power = a;
  for (std::size_t n = 1; n <= upto; ++n) {
    if (n > 1) power = power * a;
    counts.push_back(power.trace());
  }
  return counts;
}

Integer cycle_count(const Graph& graph, std::size_t n) {
  if (n == 0) throw InvalidInput("cycle length must be positive");
  return cycle_counts(graph, n).back();
}

std::vector<Integer> exp_series_from_ghost(std::span<const Integer> ghost, std::size_t order) {
  if (ghost.size() < order) throw InvalidInput("ghost sequence shorter than the series order");
  std::vector<Rational> z{Rational(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    Rational sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += Rational(ghost[k - 1]) * z[n - k];
    z.push_back(sum / Rational(n));
  }
  std::vector<Integer> out;
  out.reserve(z.size());
  for (std::size_t n = 0; n < z.size(); ++n) {
    if (denominator(z[n]) != 1) {
      throw IntegralityViolation("zeta coefficient z_" + std::to_string(n) + " = " + z[n].str() +
                                 " is not an integer");
    }
    out.push_back(numerator(z[n]));
  }
  return out;
}

std::string ZetaSeries::rational_form() const {
  return "1/(" + denominator.to_string("u") + ")";
}

ZetaSeries zeta_series(const Graph& graph, std::size_t order) {
  ZetaSeries z;
  z.denominator = reversed_char_poly(adjacency_matrix(graph));
  z.truncation_order = order;
  auto ghost = cycle_counts(graph, order);
  z.coefficients = exp_series_from_ghost(ghost, order);
  return z;
}

}  // namespace gph

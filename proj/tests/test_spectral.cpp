#include "gph/constructions.hpp"
#include "gph/error.hpp"
#include "gph/polynomial.hpp"
#include "gph/spectral.hpp"

#include "support/corpus.hpp"

#include <gtest/gtest.h>

namespace gph {
namespace {

using testing::series_mul;

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

TEST(Polynomial, Arithmetic) {
  const auto p = poly({1, 0, -4});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string("u"), "1 - 4*u^2");
  EXPECT_EQ(poly({0, 0, 0, -4, 0, 1}).to_string("x", IntPolynomial::Order::kDescending),
            "x^5 - 4*x^3");
  EXPECT_EQ(poly({-1, 1}).to_string("x"), "-1 + x");
  EXPECT_EQ(IntPolynomial().to_string("x"), "0");
  EXPECT_EQ(poly({1, 2, 0}), poly({1, 2}));
  EXPECT_EQ(poly({1, 1}) * poly({1, -1}), poly({1, 0, -1}));
  EXPECT_EQ(poly({1, 1}) - poly({1, 1}), IntPolynomial());
  EXPECT_EQ(poly({0, 0, 0, -4, 0, 1}).reversed(5), poly({1, 0, -4}));
  EXPECT_EQ(IntPolynomial::monomial(3)[3], 1);
}

TEST(CharPoly, CrossAndUc4) {
  EXPECT_EQ(char_poly(adjacency_matrix(cross_graph())), poly({0, 0, 0, -4, 0, 1}));
  EXPECT_EQ(char_poly(adjacency_matrix(undirected_cycle4())), poly({0, 0, -4, 0, 1}));
  EXPECT_EQ(reversed_char_poly(adjacency_matrix(cross_graph())), poly({1, 0, -4}));
  EXPECT_EQ(reversed_char_poly(adjacency_matrix(undirected_cycle4())), poly({1, 0, -4}));
  EXPECT_EQ(char_poly(adjacency_matrix(Graph())), poly({1}));
  EXPECT_EQ(reversed_char_poly(adjacency_matrix(cycle_graph(4))), poly({1, 0, 0, 0, -1}));
}

TEST(CharPoly, MatchesLeibnizExpansion) {
  for (const Graph& g : testing::standard_corpus()) {
    ASSERT_EQ(char_poly(adjacency_matrix(g)), testing::leibniz_char_poly(g));
  }
  for (const Graph& g : testing::random_corpus(3, 60, 6, 14)) {
    ASSERT_EQ(char_poly(adjacency_matrix(g)), testing::leibniz_char_poly(g));
  }
}

TEST(CycleCount, MatchesClosedWalkOracle) {
  for (const Graph& g : testing::random_corpus(5, 80, 4, 7)) {
    const auto counts = cycle_counts(g, 6);
    for (std::size_t n = 1; n <= 6; ++n) ASSERT_EQ(counts[n - 1], testing::closed_walks(g, n));
  }
  EXPECT_THROW(cycle_count(cross_graph(), 0), InvalidInput);
  EXPECT_EQ(cycle_count(cross_graph(), 12), Integer(1) << 13);
}

TEST(Zeta, ExpSeriesInvertsDeterminant) {
  for (const Graph& g : testing::random_corpus(9, 60, 4, 8)) {
    const ZetaSeries z = zeta_series(g, 8);
    const auto one = series_mul(z.denominator.coefficients(), z.coefficients, 8);
    ASSERT_EQ(one[0], 1);
    for (std::size_t k = 1; k <= 8; ++k) ASSERT_EQ(one[k], 0);
  }
}

TEST(Zeta, CrossSeries) {
  const ZetaSeries z = zeta_series(cross_graph(), 8);
  const std::vector<Integer> expected{1, 0, 4, 0, 16, 0, 64, 0, 256};
  EXPECT_EQ(z.coefficients, expected);
  EXPECT_EQ(z.rational_form(), "1/(1 - 4*u^2)");
  EXPECT_EQ(zeta_series(Graph(), 3).coefficients, (std::vector<Integer>{1, 0, 0, 0}));
}

TEST(Zeta, NonRealizableGhostIsRejected) {
  const std::vector<Integer> ghost{1, 2};  // (2 - 1) / 2 is not an integer
  EXPECT_THROW(exp_series_from_ghost(ghost, 2), IntegralityViolation);
}

}  // namespace
}  // namespace gph

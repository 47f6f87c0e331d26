#include "gph/constructions.hpp"
#include "gph/error.hpp"
#include "gph/spectral.hpp"
#include "gph/witt.hpp"

#include "support/corpus.hpp"

#include <gtest/gtest.h>

namespace gph {
namespace {

std::vector<Integer> ints(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

TEST(Mobius, FirstValues) {
  const std::vector<int> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(mobius(n), expected[n - 1]) << n;
  EXPECT_EQ(mobius(30), -1);
}

TEST(Witt, FigureEightMatchesNecklaceOracle) {
  const auto set = from_graph(figure_eight());
  EXPECT_EQ(set.witt_upto(6), ints({2, 1, 2, 3, 6, 9}));
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(set.witt(n), testing::aperiodic_necklaces(figure_eight(), n));
  }
}

TEST(Witt, CorpusMatchesNecklaceOracle) {
  for (const Graph& g : testing::random_corpus(21, 40, 4, 6)) {
    const auto set = from_graph(g);
    for (std::size_t n = 1; n <= 5; ++n) ASSERT_EQ(set.witt(n), testing::aperiodic_necklaces(g, n));
  }
}

TEST(Witt, CycleGraphIsOneOrbit) {
  const auto set = from_graph(cycle_graph(3));
  EXPECT_EQ(set.witt_upto(7), ints({0, 0, 1, 0, 0, 0, 0}));
}

TEST(Witt, GhostRoundTrip) {
  const auto witt = ints({3, 0, 1, 4, 0, 2});
  std::vector<Integer> ghost;
  for (std::size_t n = 1; n <= witt.size(); ++n) ghost.push_back(witt_to_ghost(witt, n));
  EXPECT_EQ(ghost, ints({3, 3, 6, 19, 3, 18}));
  for (std::size_t n = 1; n <= witt.size(); ++n) EXPECT_EQ(ghost_to_witt(ghost, n), witt[n - 1]);
}

TEST(Witt, NotRealizable) {
  const auto bad = AlmostFiniteZSet::from_ghost([](std::size_t n) { return Integer(n == 1 ? 1 : 2); },
                                                "test");
  EXPECT_EQ(bad.witt(1), 1);
  EXPECT_THROW(bad.witt(2), NotRealizable);
  const auto negative =
      AlmostFiniteZSet::from_ghost([](std::size_t n) { return Integer(n == 1 ? 2 : 0); }, "test");
  EXPECT_THROW(negative.witt(2), NotRealizable);
}

TEST(Burnside, SumAndProduct) {
  const auto a = AlmostFiniteZSet::from_orbits({{1, 2}, {2, 1}});
  const auto b = AlmostFiniteZSet::from_orbits({{2, 1}, {3, 1}});
  const auto sum = burnside_add(a, b);
  const auto prod = burnside_mul(a, b);
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(sum.ghost(n), a.ghost(n) + b.ghost(n));
    EXPECT_EQ(prod.ghost(n), a.ghost(n) * b.ghost(n));
  }
  EXPECT_EQ(sum.witt_upto(3), ints({2, 2, 1}));
  // Z/m x Z/n is gcd(m,n) copies of Z/lcm(m,n)
  EXPECT_EQ(prod.witt_upto(6), ints({0, 4, 2, 0, 0, 1}));
}

TEST(Burnside, GraphCoproductAndProduct) {
  const Graph x = figure_eight();
  const Graph y = cross_graph();
  const auto sx = from_graph(x), sy = from_graph(y);
  const auto coproduct_set = from_graph(coproduct(x, y).graph);
  const auto product_set = from_graph(product(x, y));
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(coproduct_set.witt(n), burnside_add(sx, sy).witt(n));
    EXPECT_EQ(product_set.ghost(n), burnside_mul(sx, sy).ghost(n));
  }
}

TEST(ZetaProduct, MatchesExpForm) {
  for (const Graph& g : {figure_eight(), cross_graph(), cycle_graph(3), bouquet(3)}) {
    EXPECT_EQ(zeta_product_form(from_graph(g), 8), zeta_series(g, 8).coefficients);
  }
}

}  // namespace
}  // namespace gph

#include "gph/constructions.hpp"
#include "gph/error.hpp"
#include "gph/search.hpp"

#include "support/corpus.hpp"

#include <gtest/gtest.h>

#include <set>

namespace gph {
namespace {

TEST(Search, SmallHomSets) {
  const Graph x = cross_graph();
  EXPECT_EQ(enumerate_morphisms(path_graph(0), x).size(), x.node_count());
  EXPECT_EQ(enumerate_morphisms(path_graph(1), x).size(), x.arc_count());
  EXPECT_EQ(enumerate_morphisms(Graph(), x).size(), 1u);
  EXPECT_EQ(enumerate_morphisms(cycle_graph(1), x).size(), 0u);
  EXPECT_EQ(enumerate_morphisms(cycle_graph(2), x).size(), 8u);
  EXPECT_EQ(enumerate_morphisms(x, Graph()).size(), 0u);
  // loose nodes contribute a factor each
  EXPECT_EQ(enumerate_morphisms(Graph({"a", "b"}, {}), x).size(), 25u);
}

TEST(Search, SolutionsAreDistinctMorphisms) {
  const Graph x = figure_eight();
  const auto homs = enumerate_morphisms(cycle_graph(3), x);
  EXPECT_EQ(homs.size(), 8u);
  std::set<std::vector<std::size_t>> arc_maps;
  for (const auto& h : homs) arc_maps.insert({h.arc_map().begin(), h.arc_map().end()});
  EXPECT_EQ(arc_maps.size(), homs.size());
}

TEST(Search, CountMatchesEnumerate) {
  for (const Graph& g : testing::exhaustive_corpus(2, 3)) {
    SearchBudget budget(kDefaultSearchBudget);
    EXPECT_EQ(count_morphisms(path_graph(2), g, budget), enumerate_morphisms(path_graph(2), g).size());
  }
}

TEST(Search, ConstraintsAndInjectivity) {
  const Graph x = cycle_graph(3);
  auto constraints = SearchConstraints::unrestricted(x, x);
  constraints.injective = true;
  SearchBudget budget(kDefaultSearchBudget);
  std::size_t found = 0;
  for_each_morphism(x, x, constraints, budget, [&](auto, auto) { return ++found, true; });
  EXPECT_EQ(found, 3u);  // rotations

  constraints.node_candidates[0] = {0};
  found = 0;
  for_each_morphism(x, x, constraints, budget, [&](auto, auto) { return ++found, true; });
  EXPECT_EQ(found, 1u);

  found = 0;
  auto all = SearchConstraints::unrestricted(x, x);
  for_each_morphism(x, x, all, budget, [&](auto, auto) { return ++found, false; });
  EXPECT_EQ(found, 1u);  // visitor stopped the search
}

TEST(Search, BudgetIsEnforced) {
  SearchBudget budget(10);
  EXPECT_THROW(enumerate_morphisms(cycle_graph(6), bouquet(3), budget), BudgetExceeded);
  EXPECT_THROW(enumerate_morphisms(cycle_graph(6), bouquet(3), 10), BudgetExceeded);
}

TEST(Search, Isomorphism) {
  EXPECT_FALSE(is_isomorphic(cross_graph(), undirected_cycle4()));
  EXPECT_FALSE(is_isomorphic(cycle_graph(2), Graph({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}})));
  std::mt19937_64 rng(7);
  for (const Graph& g : testing::random_corpus(11, 50, 5, 7)) {
    const Graph h = testing::relabelled(g, rng);
    const auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(iso->is_bijective());
  }
}

}  // namespace
}  // namespace gph

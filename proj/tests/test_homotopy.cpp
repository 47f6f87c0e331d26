#include "gph/constructions.hpp"
#include "gph/error.hpp"
#include "gph/homotopy.hpp"
#include "gph/model_structure.hpp"

#include "support/corpus.hpp"

#include <gtest/gtest.h>

namespace gph {
namespace {

Graph with_isolated_node(const Graph& g) {
  std::vector<std::string> nodes(g.nodes().begin(), g.nodes().end());
  nodes.push_back("isolated");
  std::vector<ArcSpec> arcs;
  for (const Arc& a : g.arcs()) arcs.push_back({a.id, g.node_id(a.src), g.node_id(a.tgt)});
  return Graph(nodes, arcs);
}

// Attaches a whisker at every node of g through pushouts of s.
GraphMorphism whisker_everywhere(const Graph& g) {
  GraphMorphism total = identity(g);
  const GraphMorphism s = source_inclusion();
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const Graph& current = total.target();
    const GraphMorphism at = GraphMorphism(s.source(), current, {total.node(v)}, {});
    total = compose(pushout(s, at).from_second, total);
  }
  return total;
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(cross_graph()).to_string(), "1 - 4*u^2");
  EXPECT_EQ(signature(cycle_graph(5)).to_string(), "1 - u^5");
  EXPECT_EQ(signature(Graph()).to_string(), "1");
  EXPECT_EQ(signature(path_graph(0)), signature(Graph()));
}

TEST(HomotopyEquivalent, Examples) {
  EXPECT_TRUE(homotopy_equivalent(cross_graph(), undirected_cycle4()));
  EXPECT_FALSE(homotopy_equivalent(cycle_graph(2), cycle_graph(3)));
  EXPECT_TRUE(homotopy_equivalent(path_graph(4), Graph()));
}

TEST(HomotopyEquivalent, CorpusProperties) {
  std::mt19937_64 rng(31);
  const auto corpus = testing::random_corpus(37, 60, 4, 6);
  for (const Graph& g : corpus) {
    EXPECT_TRUE(homotopy_equivalent(g, with_isolated_node(g)));
    EXPECT_TRUE(homotopy_equivalent(g, testing::relabelled(g, rng)));
    const GraphMorphism w = whisker_everywhere(g);
    ASSERT_TRUE(is_whiskering(w));
    EXPECT_TRUE(homotopy_equivalent(g, w.target()));
  }
  // every pair runs both decision routes; a disagreement would throw
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      EXPECT_NO_THROW(homotopy_equivalent(corpus[i], corpus[j]));
    }
  }
}

TEST(Signature, CoproductIsMultiplicative) {
  const auto corpus = testing::random_corpus(41, 30, 3, 5);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const Graph sum = coproduct(corpus[i], corpus[i + 1]).graph;
    EXPECT_EQ(signature(sum).reversed_char_poly,
              signature(corpus[i]).reversed_char_poly * signature(corpus[i + 1]).reversed_char_poly);
  }
}

TEST(HomCount, Examples) {
  EXPECT_EQ(hom_count_bounded(cycle_graph(1), cycle_graph(1), 5), 1);
  EXPECT_EQ(hom_count_bounded(cycle_graph(2), cross_graph(), 2), 8);
  EXPECT_EQ(hom_count_bounded(path_graph(3), cross_graph(), 4), 1);
  // figure-eight into itself up to 2: 2^2 * 4^1
  EXPECT_EQ(hom_count_bounded(figure_eight(), figure_eight(), 2), 16);
  EXPECT_THROW(hom_count_bounded(cycle_graph(1), cycle_graph(1), 0), InvalidInput);
  for (const Graph& g : testing::random_corpus(43, 30, 4, 6)) {
    EXPECT_GE(hom_count_bounded(g, g, 4), 1);
  }
}

TEST(DerivedComponents, Examples) {
  EXPECT_EQ(derived_components(cycle_graph(4), 4), 1);
  EXPECT_EQ(derived_components(cycle_graph(4), 9), 1);
  EXPECT_EQ(derived_components(path_graph(3), 5), 0);
  EXPECT_EQ(derived_components(figure_eight(), 3), 5);
}

TEST(Explore, SmallExhaustiveBudget) {
  ExploreOptions options;
  options.max_nodes = 2;
  options.max_arcs = 1;
  const ExploreReport report = explore(options);
  // 0 or 1 arc on at most 2 nodes: only loops carry cycles
  for (const auto& bucket : report.buckets) {
    for (const auto& m : bucket.members) {
      const bool has_loop = std::any_of(m.graph.arcs().begin(), m.graph.arcs().end(),
                                        [](const Arc& a) { return a.is_loop(); });
      EXPECT_EQ(bucket.signature.to_string(), has_loop ? "1 - u" : "1") << m.name;
    }
  }
  ASSERT_EQ(report.buckets.size(), 2u);
}

TEST(Explore, BucketsAreConsistent) {
  ExploreOptions options;
  options.max_nodes = 3;
  options.max_arcs = 3;
  options.workers = 2;
  const ExploreReport report = explore(options);
  std::size_t total = 0;
  for (const auto& bucket : report.buckets) {
    total += bucket.members.size();
    for (const auto& m : bucket.members) {
      EXPECT_TRUE(homotopy_equivalent(m.graph, bucket.members.front().graph));
    }
  }
  EXPECT_EQ(total, report.graphs_examined);
}

TEST(Explore, BuiltinFamilyFindsCrossAndUc4) {
  ExploreOptions options;
  options.max_nodes = 5;
  options.max_arcs = 16;
  options.exhaustive = false;
  const ExploreReport report = explore(options);
  bool found = false;
  for (const auto& bucket : report.buckets) {
    std::vector<std::string> names;
    for (const auto& m : bucket.members) names.push_back(m.name);
    if (std::find(names.begin(), names.end(), "cross") == names.end()) continue;
    found = std::find(names.begin(), names.end(), "uc4") != names.end();
    EXPECT_TRUE(bucket.has_nonisomorphic_pair());
  }
  EXPECT_TRUE(found);
}

TEST(Explore, BudgetGuard) {
  ExploreOptions options;
  options.max_nodes = 3;
  options.max_arcs = 4;
  options.search_budget = 50;
  EXPECT_THROW(explore(options), BudgetExceeded);
}

}  // namespace
}  // namespace gph

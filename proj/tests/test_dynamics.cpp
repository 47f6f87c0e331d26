#include "gph/constructions.hpp"
#include "gph/dynamics.hpp"
#include "gph/error.hpp"
#include "gph/model_structure.hpp"

#include <gtest/gtest.h>

namespace gph {
namespace {

// 0 -> 1 -> 2 -> 2 under sigma: a tail into a fixed point.
FinNSet tail() { return FinNSet({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"2", "2"}}); }

FinNSet rotation(std::size_t n) {
  std::vector<std::string> ids;
  std::vector<std::size_t> sigma;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("r" + std::to_string(i));
    sigma.push_back((i + 1) % n);
  }
  return FinNSet::from_indices(ids, sigma);
}

TEST(FinNSet, Basics) {
  const FinNSet s = tail();
  EXPECT_EQ(s.size(), 3u);
  EXPECT_FALSE(s.is_periodic(s.index("0")));
  EXPECT_TRUE(s.is_periodic(s.index("2")));
  EXPECT_FALSE(s.is_bijective());
  EXPECT_TRUE(rotation(4).is_bijective());
  EXPECT_THROW(FinNSet({"0"}, {{"0", "1"}}), InvalidInput);
  EXPECT_THROW(FinNSet({"0", "1"}, {{"0", "1"}}), InvalidInput);
  EXPECT_THROW(FinZSet{tail()}, InvalidInput);
}

TEST(FinZSet, OrbitCounts) {
  const FinZSet z(FinNSet({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}}));
  const auto orbits = z.orbit_counts();
  ASSERT_GE(orbits.size(), 3u);
  EXPECT_EQ(orbits[1], 2u);
  EXPECT_EQ(orbits[2], 1u);
}

TEST(NSetMap, Equivariance) {
  const FinNSet fixed({"p"}, {{"p", "p"}});
  EXPECT_NO_THROW(NSetMap::from_ids(tail(), fixed, {{"0", "p"}, {"1", "p"}, {"2", "p"}}));
  // a 2-cycle cannot map onto a fixed point and back
  const FinNSet swap({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  EXPECT_THROW(NSetMap::from_ids(fixed, swap, {{"p", "a"}}), InvalidInput);
}

TEST(Cayley, GraphRoundTrip) {
  const FinNSet s = tail();
  const Graph g = cayley_graph(s);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.arc_count(), 3u);
  for (std::size_t v = 0; v < g.node_count(); ++v) EXPECT_EQ(g.indegree(v), 1u);
  EXPECT_EQ(graph_to_nset(g), s);
  EXPECT_THROW(graph_to_nset(cross_graph()), NotAnNGraph);
  EXPECT_EQ(graph_to_nset(cycle_graph(5)).size(), 5u);
}

TEST(Cayley, PeriodicPart) {
  EXPECT_EQ(periodic_part(tail()).size(), 1u);
  EXPECT_EQ(periodic_part(rotation(3)).size(), 3u);
}

TEST(Classify, InclusionOfFixedPointIntoTail) {
  const FinNSet fixed({"p"}, {{"p", "p"}});
  const NSetMap f = NSetMap::from_ids(fixed, tail(), {{"p", "2"}});
  const NSetMapFlags flags = classify_nset_map(f);
  EXPECT_TRUE(flags.whiskering);
  EXPECT_TRUE(flags.acyclic);
  EXPECT_FALSE(flags.surjecting);  // sigma^-1(2) = {1, 2} in the tail
  EXPECT_EQ(flags.acyclic_bound, 3u);

  const GraphMorphism g = cayley_morphism(f);
  EXPECT_EQ(is_whiskering(g), flags.whiskering);
  EXPECT_EQ(is_surjecting(g), flags.surjecting);
  EXPECT_EQ(is_acyclic_bounded(g, 3), flags.acyclic);
}

TEST(Classify, DoubleCoverOfRotation) {
  const NSetMap f(rotation(4), rotation(2), {0, 1, 0, 1});
  const NSetMapFlags flags = classify_nset_map(f);
  EXPECT_TRUE(flags.surjecting);
  EXPECT_FALSE(flags.whiskering);
  EXPECT_FALSE(flags.acyclic);  // the 2-periodic points of the target have no preimage
  EXPECT_TRUE(classify_nset_map(f, 1).acyclic);
}

TEST(Fibrancy, NSets) {
  EXPECT_EQ(nset_fibrancy(tail()).fibrant, false);  // "0" has no preimage
  EXPECT_EQ(nset_fibrancy(tail()).cofibrant, true);
  EXPECT_TRUE(nset_fibrancy(rotation(2)).fibrant);
}

TEST(ZSet, AcyclicIffBijective) {
  const FinNSet r2 = rotation(2);
  const FinNSet r1 = rotation(1);
  const NSetMap fold = NSetMap(r2, r1, {0, 0});
  EXPECT_FALSE(zset_is_acyclic(fold));
  EXPECT_TRUE(classify_nset_map(fold).surjecting);
  EXPECT_TRUE(zset_is_acyclic(NSetMap(r2, r2, {1, 0})));
  EXPECT_THROW(zset_is_acyclic(NSetMap(tail(), r1, {0, 0, 0})), InvalidInput);
}

TEST(DynamicsJson, RoundTripAndErrors) {
  const NSetMap f = NSetMap(rotation(2), rotation(1), {0, 0});
  EXPECT_EQ(nset_from_json(to_json(tail())), tail());
  const NSetMap back = nset_map_from_json(to_json(f));
  EXPECT_EQ(back.source(), f.source());
  EXPECT_EQ(std::vector<std::size_t>(back.map().begin(), back.map().end()),
            std::vector<std::size_t>(f.map().begin(), f.map().end()));
  EXPECT_THROW(zset_from_json(to_json(tail())), InvalidInput);
  Json bad = to_json(tail());
  bad["colour"] = "red";
  EXPECT_THROW(nset_from_json(bad), InvalidInput);
}

}  // namespace
}  // namespace gph

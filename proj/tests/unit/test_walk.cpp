#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "gasket/walk.hpp"

using namespace gasket;

namespace {

WalkRecord walk_of(std::vector<int> v) { return WalkRecord{sg_graph(1), std::move(v)}; }

}  // namespace

TEST(LoopErase, RemovesLoopsChronologically) {
  EXPECT_EQ(loop_erase(walk_of({0, 1, 0, 2})).vertices, (std::vector<int>{0, 2}));
  EXPECT_EQ(loop_erase(walk_of({0, 1, 2, 1, 3})).vertices, (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(loop_erase(walk_of({4})).vertices, (std::vector<int>{4}));
}

TEST(LoopErase, Idempotent) {
  GraphRef g = sg_graph(3);
  Rng rng(11);
  std::vector<std::uint8_t> stop(static_cast<std::size_t>(g->vertex_count()), 0);
  stop[static_cast<std::size_t>(g->boundary()[1])] = 1;
  for (int s = 0; s < 50; ++s) {
    WalkRecord w = random_walk_until(g, g->boundary()[0], stop, rng);
    ASSERT_TRUE(is_walk(*g, w.vertices));
    WalkRecord once = loop_erase(w);
    EXPECT_TRUE(is_self_avoiding(once.vertices));
    EXPECT_TRUE(is_walk(*g, once.vertices));
    EXPECT_EQ(loop_erase(once).vertices, once.vertices);
  }
}

TEST(Wilson, OutputIsASpanningTree) {
  GraphRef g = sg_graph(4);
  Rng rng(3);
  for (int s = 0; s < 20; ++s) {
    SpanningForest f = wilson_ust(g, rng);
    EXPECT_EQ(f.edge_count(), g->vertex_count() - 1);
    auto comp = forest_components(*g, f.edges);
    ASSERT_FALSE(comp.empty());
    EXPECT_EQ(std::set<int>(comp.begin(), comp.end()).size(), 1u);
  }
}

TEST(Wilson, UniformOnTheTriangle) {
  GraphRef g = sg_graph(0);
  Rng rng(5);
  std::map<EdgeSet, int> seen;
  const int samples = 3000;
  for (int s = 0; s < samples; ++s) ++seen[wilson_ust(g, rng).edges];
  ASSERT_EQ(seen.size(), 3u);
  // 4 standard deviations of a binomial(3000, 1/3) count.
  for (const auto& [edges, count] : seen) EXPECT_NEAR(count, samples / 3.0, 4 * std::sqrt(samples * 2.0 / 9.0));
}

TEST(Wilson, ReachesEveryTreeAtLevelOne) {
  GraphRef g = sg_graph(1);
  Rng rng(8);
  std::set<EdgeSet> seen;
  for (int s = 0; s < 100000; ++s) seen.insert(wilson_ust(g, rng).edges);
  EXPECT_EQ(seen.size(), 54u);
}

TEST(Wilson, CustomOrderStartsFromTheFirstVertex) {
  GraphRef g = sg_graph(2);
  auto order = order_with_first(*g, 5, 2);
  EXPECT_EQ(order[0], 5);
  EXPECT_EQ(order[1], 2);
  EXPECT_EQ(order.size(), static_cast<std::size_t>(g->vertex_count()));
}

TEST(Lerw, LevelZeroLengthLaw) {
  GraphRef g = sg_graph(0);
  Rng rng(21);
  int twos = 0;
  const int samples = 30000;
  for (int s = 0; s < samples; ++s) {
    WalkRecord w = lerw_between(g, g->boundary()[0], g->boundary()[1], rng);
    ASSERT_GE(w.length(), 1);
    ASSERT_LE(w.length(), 2);
    twos += w.length() == 2;
  }
  EXPECT_NEAR(static_cast<double>(twos) / samples, 1.0 / 3.0, 4 * std::sqrt(2.0 / 9.0 / samples));
}

TEST(Walk, StepCapIsEnforced) {
  GraphRef g = sg_graph(3);
  Rng rng(1);
  std::vector<std::uint8_t> stop(static_cast<std::size_t>(g->vertex_count()), 0);
  stop[static_cast<std::size_t>(g->boundary()[1])] = 1;
  EXPECT_ANY_THROW(random_walk_until(g, g->boundary()[0], stop, rng, 1));
}

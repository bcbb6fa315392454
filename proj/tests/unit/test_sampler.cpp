#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "gasket/exact.hpp"
#include "gasket/reference.hpp"
#include "gasket/sampler.hpp"
#include "gasket/walk.hpp"

using namespace gasket;

namespace {

std::vector<Integer> generation_counts(const std::vector<std::uint64_t>& row) {
  std::vector<Integer> out;
  for (auto v : row) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

}  // namespace

TEST(ForestSampler, ConstraintsHoldAtEveryGeneration) {
  for (int x = 0; x < kForestTypes; ++x) {
    const auto cls = static_cast<ForestClass>(x);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ForestSample s = sample_forest(cls, 5, RngStream(seed));
      auto counts = s.tree.type_counts();
      for (int d = 0; d <= 5; ++d)
        EXPECT_TRUE(constraint_identities(generation_counts(counts[static_cast<std::size_t>(d)]), d, component_count(cls)))
            << class_name(cls) << " seed " << seed << " generation " << d;
    }
  }
}

TEST(ForestSampler, MaterializedForestHasItsClass) {
  for (int x = 0; x < kForestTypes; ++x) {
    const auto cls = static_cast<ForestClass>(x);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ForestSample s = sample_forest(cls, 4, RngStream(seed));
      EXPECT_EQ(classify(*s.forest.host, s.forest.edges), cls);
      EXPECT_EQ(s.forest.edge_count(), s.forest.host->vertex_count() - component_count(cls));
    }
  }
}

TEST(ForestSampler, DeterministicGivenSeed) {
  EXPECT_EQ(sample_spanning_tree(6, RngStream(42)).forest, sample_spanning_tree(6, RngStream(42)).forest);
  EXPECT_FALSE(sample_spanning_tree(6, RngStream(42)).forest == sample_spanning_tree(6, RngStream(43)).forest);
}

TEST(ForestSampler, StreamedCountsMatchStoredTree) {
  const auto& table = sg_tables().forest;
  RngStream rng(5);
  TypedTree t = sample_typed_tree(table, 0, 6, rng);
  EXPECT_EQ(stream_type_counts(table, 0, 6, rng), t.type_counts());
}

TEST(ForestSampler, TraceOfRefinementIsTheIdentity) {
  for (int x = 0; x < kForestTypes; ++x) {
    for (int n = 0; n <= 4; ++n) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ForestSample s = sample_forest(static_cast<ForestClass>(x), n, RngStream(seed));
        TypedTree finer = refine(s.tree, 1, RngStream(seed + 1000));
        SpanningForest f = materialize_forest(finer, sg_graph(n + 1));
        EXPECT_EQ(trace(f), s.forest) << x << " " << n << " " << seed;
      }
    }
  }
}

TEST(ForestSampler, TracePreservesClassAndComponents) {
  for (int x = 0; x < kForestTypes; ++x) {
    const auto cls = static_cast<ForestClass>(x);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      SpanningForest t = trace(sample_forest(cls, 3, RngStream(seed)).forest);
      ASSERT_EQ(t.cls, cls);
      ASSERT_EQ(classify(*t.host, t.edges), cls);
    }
  }
}

TEST(ForestSampler, RestrictionsPartitionTheEdges) {
  ForestSample s = sample_spanning_tree(4, RngStream(3));
  GraphRef g = s.forest.host;
  std::vector<int> hits(static_cast<std::size_t>(g->edge_count()), 0);
  const int per_copy = g->edge_count() / 3;
  for (int i = 0; i < 3; ++i) {
    SpanningForest r = restrict(s.forest, Word({i}));
    for (int e : r.edge_ids()) ++hits[static_cast<std::size_t>(i * per_copy + e)];
  }
  for (int e = 0; e < g->edge_count(); ++e)
    EXPECT_EQ(hits[static_cast<std::size_t>(e)], s.forest.edges[static_cast<std::size_t>(e)]);
}

TEST(ForestSampler, TypeCountsConcentrate) {
  // ||chi_n - 3^n v_L||_1 < 3^n / 2 in at least 99% of seeds.
  const int n = 10;
  const double scale = std::pow(3.0, n);
  auto vl = reference::forest_left();
  int good = 0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) {
    ForestTypeCounts c = forest_counts(ForestClass::T, n, RngStream(static_cast<std::uint64_t>(s)));
    double dev = 0;
    for (std::size_t x = 0; x < 7; ++x) dev += std::fabs(static_cast<double>(c.chi[x]) - scale * to_double(vl[x]));
    if (dev < scale / 2) ++good;
  }
  EXPECT_GE(good, 990);
}

TEST(PathSampler, WeightCountsGiveTheLength) {
  for (int n = 0; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      PathSample p = sample_lerw(n, RngStream(seed));
      const auto& w = p.weight_counts;
      EXPECT_EQ(w[0] + 2 * w[1] + w[2], static_cast<std::uint64_t>(p.length()));
      EXPECT_EQ(w[0] + w[1] + w[2], p.tree.leaves().size());
    }
  }
}

TEST(PathSampler, PathIsASelfAvoidingWalkBetweenCorners) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PathSample p = sample_lerw(6, RngStream(seed));
    ASSERT_TRUE(is_walk(*p.host, p.vertices));
    EXPECT_TRUE(is_self_avoiding(p.vertices));
    EXPECT_EQ(p.vertices.front(), p.host->boundary()[0]);
    EXPECT_EQ(p.vertices.back(), p.host->boundary()[1]);
  }
}

TEST(PathSampler, ConsecutiveCellsShareOneVertex) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PathSample p = sample_lerw(5, RngStream(seed));
    auto leaves = p.tree.leaves();
    for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
      const TreeNode& a = p.tree.node(leaves[i]);
      const TreeNode& b = p.tree.node(leaves[i + 1]);
      std::set<int> ca;
      std::set<int> cb;
      for (int j = 0; j < 3; ++j) {
        ca.insert(p.host->corner(static_cast<int>(a.index), j));
        cb.insert(p.host->corner(static_cast<int>(b.index), j));
      }
      std::vector<int> common;
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(common));
      ASSERT_EQ(common.size(), 1u);
      EXPECT_EQ(common[0], p.host->corner(static_cast<int>(a.index), a.exit));
      EXPECT_EQ(common[0], p.host->corner(static_cast<int>(b.index), b.entry));
    }
  }
}

TEST(PathSampler, OnlyThroughCellsTurnAtACorner) {
  // Inside its own cell the path crosses one edge, or two edges meeting at
  // the marked corner for through types.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PathSample p = sample_lerw(5, RngStream(seed));
    std::size_t pos = 0;
    for (int leaf : p.tree.leaves()) {
      const TreeNode& node = p.tree.node(leaf);
      const int cell = static_cast<int>(node.index);
      ASSERT_EQ(p.vertices[pos], p.host->corner(cell, node.entry));
      if (conn_is_through(node.type)) {
        const int marked = conn_types()[static_cast<std::size_t>(node.type)].marked;
        EXPECT_EQ(p.vertices[pos + 1], p.host->corner(cell, marked)) << "seed " << seed;
        pos += 2;
      } else {
        pos += 1;
      }
      ASSERT_EQ(p.vertices[pos], p.host->corner(cell, node.exit));
    }
    EXPECT_EQ(pos + 1, p.vertices.size());
  }
}

TEST(PathSampler, LevelZeroLaw) {
  int twos = 0;
  const int samples = 30000;
  for (int s = 0; s < samples; ++s) twos += sample_lerw(0, RngStream(static_cast<std::uint64_t>(s))).length() == 2;
  double p = static_cast<double>(twos) / samples;
  EXPECT_NEAR(p, 1.0 / 3.0, 4 * std::sqrt(2.0 / 9.0 / samples));
}

TEST(PathSampler, RefinementKeepsTheScaledLengthPositive) {
  const double alpha = constants().alpha_bar.to_double();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TypedTree t = sample_lerw(3, RngStream(seed)).tree;
    for (int m = 4; m <= 8; ++m) {
      t = refine(t, 1, RngStream(seed).child(static_cast<std::uint64_t>(m)));
      double len = 0;
      for (int leaf : t.leaves()) len += conn_is_through(t.node(leaf).type) ? 2 : 1;
      EXPECT_GT(len / std::pow(alpha, m), 0);
    }
  }
}

TEST(ComponentSampler, EdgeCountMatchesMaterializedEdges) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ComponentSample c = sample_component(ForestClass::S1, 0b110, 5, RngStream(seed));
    EXPECT_EQ(c.edge_count, c.edges.size());
    const auto& w = c.weight_counts;
    EXPECT_EQ(c.edge_count, 2 * w[0] + w[1] + w[3]);
  }
}

TEST(ComponentSampler, TrackedSetMustBeAComponentUnion) {
  EXPECT_ANY_THROW(sample_component(ForestClass::S1, 0b011, 3, RngStream(0)));
}

TEST(InterfaceSampler, CellsMatchLeafCount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InterfaceSample s = sample_interface(ForestClass::S1, 6, RngStream(seed));
    const auto& c = s.class_counts;
    EXPECT_EQ(c[0] + c[1] + c[2], s.cells.size());
    for (const Word& w : s.cells) EXPECT_EQ(w.size(), 6);
  }
}

TEST(Metric, TreeMetricIsPathLength) {
  ForestSample s = sample_spanning_tree(4, RngStream(9));
  GraphRef g = s.forest.host;
  auto path = tree_path(s.forest, g->boundary()[0], g->boundary()[1]);
  EXPECT_EQ(tree_metric(s.forest, g->boundary()[0], g->boundary()[1]), static_cast<int>(path.size()) - 1);
  EXPECT_TRUE(is_self_avoiding(path));
}

TEST(Metric, CurveEndsAtTheSecondCorner) {
  PathSample p = sample_lerw(4, RngStream(1));
  auto curve = curve_points(p.vertices, *p.host);
  CurvePoint end = curve_at(curve, 1e9);
  const Point& u2 = p.host->coords()[static_cast<std::size_t>(p.host->boundary()[1])];
  EXPECT_NEAR(end.x, to_double(u2.cartesian_x()), 1e-12);
  EXPECT_NEAR(end.y, u2.cartesian_y(), 1e-12);
}

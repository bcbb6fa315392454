#include <gtest/gtest.h>

#include "gasket/errors.hpp"
#include "gasket/geometry.hpp"

using namespace gasket;

TEST(Graph, VertexAndEdgeCounts) {
  for (int n = 0; n <= 6; ++n) {
    GraphRef g = sg_graph(n);
    long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    EXPECT_EQ(g->vertex_count(), 3 * (p + 1) / 2) << n;
    EXPECT_EQ(g->edge_count(), 3 * p) << n;
    EXPECT_TRUE(g->connected());
  }
}

TEST(Graph, CornersAreTheUnitTriangle) {
  GraphRef g = sg_graph(3);
  ASSERT_EQ(g->boundary().size(), 3u);
  EXPECT_EQ(g->coords()[static_cast<std::size_t>(g->boundary()[0])], (Point{rat(0), rat(0)}));
  EXPECT_EQ(g->coords()[static_cast<std::size_t>(g->boundary()[1])], (Point{rat(1), rat(0)}));
  EXPECT_EQ(g->coords()[static_cast<std::size_t>(g->boundary()[2])], (Point{rat(0), rat(1)}));
}

TEST(Graph, CachedInstances) { EXPECT_EQ(sg_graph(4).get(), sg_graph(4).get()); }

TEST(Word, IndexRoundTrip) {
  Word w = Word::parse("312");
  EXPECT_EQ(w.to_string(), "312");
  EXPECT_EQ(Word::from_index(w.index(3), 3, 3), w);
  EXPECT_TRUE(w.has_prefix(Word::parse("31")));
}

TEST(Forest, LevelZeroClasses) {
  GraphRef g = sg_graph(0);
  for (int c = 0; c < 7; ++c) {
    auto eta = eta_edges(*g->cell(), static_cast<ForestClass>(c));
    SpanningForest f = make_forest(g, eta);
    EXPECT_EQ(f.cls, static_cast<ForestClass>(c));
    EXPECT_EQ(f.edge_count(), 3 - component_count(f.cls));
  }
}

TEST(Forest, CycleIsRejected) {
  GraphRef g = sg_graph(0);
  EXPECT_EQ(make_forest(g, EdgeSet{1, 1, 1}).cls, ForestClass::None);
  EXPECT_TRUE(forest_components(*g, EdgeSet{1, 1, 1}).empty());
}

TEST(Forest, RestrictToCopy) {
  GraphRef g = sg_graph(1);
  EdgeSet edges(static_cast<std::size_t>(g->edge_count()), 0);
  // Two edges inside copy 1, nothing elsewhere.
  edges[static_cast<std::size_t>(g->edge_id(0, 1))] = edges[static_cast<std::size_t>(g->edge_id(0, 2))] = 1;
  SpanningForest f{g, edges, ForestClass::None};
  SpanningForest part = restrict(f, Word::parse("1"));
  EXPECT_EQ(part.host->level(), 0);
  EXPECT_EQ(part.edge_count(), 2);
}

TEST(Cell, BuiltinRoundTripsThroughJson) {
  CellRef sg = sg3_cell();
  CellRef again = parse_cell(cell_to_json(*sg));
  EXPECT_EQ(cell_to_json(*again), cell_to_json(*sg));
}

TEST(Cell, NamedCellsLoad) {
  CellRef koch = load_cell("koch");
  EXPECT_EQ(koch->boundary_count(), 2);
  EXPECT_EQ(koch->alphabet(), 5);
  EXPECT_TRUE(build_graph(koch, 2)->connected());
  EXPECT_THROW(load_cell("no-such-cell"), CellValidationError);
}

TEST(Cell, InconsistentGluingRejected) {
  std::string bad = R"({"name":"bad","boundary_count":3,"boundary":[[0,0],[1,0],[0,1]],"edges":[[2,3],[3,1],[1,2]],
    "copies":[{"scale":"1/2","translation":[0,0],"rotation":0},{"scale":"1/2","translation":["1/2",0],"rotation":0}],
    "gluings":[[[1,1],[2,1]]]})";
  EXPECT_THROW(parse_cell(bad), CellValidationError);
}

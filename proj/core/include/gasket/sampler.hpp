#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gasket/enumeration.hpp"
#include "gasket/geometry.hpp"
#include "gasket/rng.hpp"

namespace gasket {

struct TreeNode {
  int depth = 0;
  std::uint64_t index = 0;  // word index at this depth
  int type = 0;
  int entry = -1;  // path trees: corner where the path enters the part
  int exit = -1;
  int census = -1;  // census member chosen as offspring, -1 for leaves
  int parent = -1;
  int first_child = -1;
  int child_count = 0;
};

// Labelled multi-type GW tree. Nodes are stored generation by generation;
// within a generation, path trees keep traversal order and full trees keep
// word order. The table must outlive the tree.
struct TypedTree {
  const OffspringTable* table = nullptr;
  int root_type = 0;
  int depth = 0;
  std::vector<TreeNode> nodes;
  std::vector<int> generation_start;  // size depth + 2

  const TreeNode& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  int generation_size(int d) const {
    return generation_start[static_cast<std::size_t>(d) + 1] - generation_start[static_cast<std::size_t>(d)];
  }
  std::vector<int> leaves() const;
  Word word(int i) const;
  // counts[d][x]: nodes of type x in generation d.
  std::vector<std::vector<std::uint64_t>> type_counts() const;
};

// Largest level for which host graphs and explicit objects are built.
inline constexpr int kMaxTreeLevel = 12;
// Sparse trees (paths, interfaces, components) are limited by word indices and
// by node count instead.
inline constexpr int kMaxSparseLevel = 40;
inline constexpr std::size_t kMaxTreeNodes = std::size_t{1} << 26;

// Each node draws its outcome from (seed, tag, depth, word index).
TypedTree sample_typed_tree(const OffspringTable& table, int root_type, int n, const RngStream& rng,
                            std::uint64_t tag = RngStream::kForest, int root_entry = -1, int root_exit = -1);
// Same draws as sample_typed_tree, but only the per-generation counts are kept.
std::vector<std::vector<std::uint64_t>> stream_type_counts(const OffspringTable& table, int root_type, int n,
                                                           const RngStream& rng,
                                                           std::uint64_t tag = RngStream::kForest);

// Relabels a tree sampled from a collapsed table with fine types. Inner nodes
// take the subtype of the census member they drew; leaves draw it uniformly
// within their group.
TypedTree resolve_collapsed(const TypedTree& tree, const OffspringTable& fine, const std::vector<int>& group_of,
                            const RngStream& rng);

// Extends every leaf by extra generations using the tree's own table.
TypedTree refine(const TypedTree& tree, int extra, const RngStream& rng);

// --------------------------------------------------------------- forests

struct ForestSample {
  TypedTree tree;  // fine 7-type labels
  SpanningForest forest;
};

SpanningForest materialize_forest(const TypedTree& tree, const GraphRef& host);
ForestSample sample_spanning_tree(int n, const RngStream& rng);
// cls one of T1..R or T (subclass drawn uniformly).
ForestSample sample_forest(ForestClass cls, int n, const RngStream& rng);
// Uniform fine root for a class that may be the generic T.
int root_forest_type(ForestClass cls, const RngStream& rng);

// Counts by type (7) and by component count (3) at generation n.
struct ForestTypeCounts {
  std::array<std::uint64_t, 7> chi{};
  std::array<std::uint64_t, 3> components{};
};
ForestTypeCounts forest_counts(ForestClass cls, int n, const RngStream& rng);

// ----------------------------------------------------------------- paths

struct PathSample {
  TypedTree tree;  // fine 12-type labels, leaves in traversal order
  GraphRef host;
  std::vector<int> vertices;  // u1 ... u2
  std::array<std::uint64_t, 3> weight_counts{};  // by conn weight 1, 2, 3

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

std::vector<int> materialize_path(const TypedTree& tree, const GraphRef& host);
PathSample sample_lerw(int n, const RngStream& rng);

// ------------------------------------------------------------ components

struct ComponentSample {
  TypedTree tree;
  std::array<std::uint64_t, 7> weight_counts{};  // by component weight 1..7
  std::uint64_t edge_count = 0;                  // weight_counts . (2,1,0,1,0,0,0)
  std::vector<int> edges;                        // edge ids in G_n (empty unless materialized)
};

// tracked: bit j for corner u_{j+1}; must be a union of components of cls.
ComponentSample sample_component(ForestClass cls, unsigned tracked, int n, const RngStream& rng,
                                 bool materialize = true);

// ------------------------------------------------------------- interface

struct InterfaceSample {
  TypedTree tree;
  std::array<std::uint64_t, 3> class_counts{};
  std::vector<Word> cells;
};

// cls one of S1, S2, S3, R.
InterfaceSample sample_interface(ForestClass cls, int n, const RngStream& rng);

// ---------------------------------------------------------------- metric

// Unique-path distance in a forest.
int tree_metric(const SpanningForest& forest, int u, int v);
std::vector<int> tree_path(const SpanningForest& forest, int u, int v);

struct CurvePoint {
  double t;
  double x;
  double y;
};
// Vertex k of the path placed at time k / time_scale; time_scale <= 0 means
// alpha_bar^level.
std::vector<CurvePoint> curve_points(const std::vector<int>& path, const ExplicitGraph& host,
                                     double time_scale = 0);
// Linear interpolation, constant after the last point.
CurvePoint curve_at(const std::vector<CurvePoint>& curve, double t);

}  // namespace gasket

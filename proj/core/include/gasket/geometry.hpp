#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gasket/numeric.hpp"

namespace gasket {

// Address of a part: letters are stored 0-based and printed 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  static Word parse(const std::string& text);
  static Word from_index(std::uint64_t index, int length, int alphabet);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }

  std::uint64_t index(int alphabet) const;
  Word operator+(const Word& o) const;
  Word prefix(int k) const;
  bool has_prefix(const Word& p) const;
  std::string to_string() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

 private:
  std::vector<int> letters_;
};

// Coordinates in the skew lattice basis e1 = (1,0), e2 = (1/2, sqrt(3)/2).
struct Point {
  Rational x;
  Rational y;

  Rational cartesian_x() const { return x + y / 2; }
  double cartesian_y() const;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  // Lexicographic in Cartesian coordinates.
  bool operator<(const Point& o) const;
};

// x -> scale * R^rotation x + translation, R the rotation by 60 degrees.
struct AffineMap {
  Rational scale{1};
  int rotation = 0;
  Point translation{Rational(0), Rational(0)};

  Point apply(const Point& p) const;
  AffineMap compose(const AffineMap& inner) const;  // this after inner
  bool operator==(const AffineMap& o) const {
    return scale == o.scale && rotation == o.rotation && translation == o.translation;
  }
};

struct Gluing {
  int copy_a;
  int index_a;
  int copy_b;
  int index_b;
};

struct CellGraph {
  std::string name;
  std::vector<Point> boundary;
  std::vector<std::pair<int, int>> base_edges;
  std::vector<AffineMap> copies;
  std::vector<Gluing> gluings;

  int boundary_count() const { return static_cast<int>(boundary.size()); }
  int alphabet() const { return static_cast<int>(copies.size()); }
  int base_edge_count() const { return static_cast<int>(base_edges.size()); }
  // Letter of the copy that contains boundary vertex i, or -1 if not unique.
  int corner_copy(int i) const;
};

using CellRef = std::shared_ptr<const CellGraph>;

CellRef sg3_cell();
CellRef parse_cell(const std::string& json_text);
CellRef load_cell(const std::string& name_or_path);
std::string cell_to_json(const CellGraph& cell);
// Environment variable naming the default cell (built-in name or file path).
inline constexpr const char* kCellEnvVar = "GASKET_CELL";
CellRef default_cell();
void validate_cell(const CellGraph& cell);

class ExplicitGraph {
 public:
  ExplicitGraph(CellRef cell, int level);

  const CellRef& cell() const { return cell_; }
  int level() const { return level_; }
  int vertex_count() const { return static_cast<int>(coords_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int cell_count() const { return cell_count_; }
  int base_edge_count() const { return cell_->base_edge_count(); }
  int boundary_count() const { return cell_->boundary_count(); }

  const std::vector<Point>& coords() const { return coords_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& boundary() const { return boundary_; }
  // Vertex id of boundary vertex j of level-n cell c (cells in word order).
  int corner(int c, int j) const { return cell_corners_[static_cast<std::size_t>(c * boundary_count() + j)]; }
  int edge_id(int c, int base_edge) const { return c * base_edge_count() + base_edge; }
  int edge_cell(int e) const { return e / base_edge_count(); }

  int degree(int v) const { return adj_offsets_[static_cast<std::size_t>(v) + 1] - adj_offsets_[static_cast<std::size_t>(v)]; }
  int neighbor(int v, int k) const { return adj_targets_[static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)] + k)]; }
  int neighbor_edge(int v, int k) const { return adj_edges_[static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)] + k)]; }
  // Edge id joining u and v, or -1.
  int find_edge(int u, int v) const;
  bool connected() const;

 private:
  CellRef cell_;
  int level_;
  int cell_count_ = 0;
  std::vector<Point> coords_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> boundary_;
  std::vector<int> cell_corners_;
  std::vector<int> adj_offsets_;
  std::vector<int> adj_targets_;
  std::vector<int> adj_edges_;
};

using GraphRef = std::shared_ptr<const ExplicitGraph>;

// Cached, immutable; repeated calls return the same instance.
GraphRef build_graph(const CellRef& cell, int level);
GraphRef sg_graph(int level);

AffineMap word_map(const CellGraph& cell, const Word& w);

// Forest classes; the first seven follow the type order T1,T2,T3,S1,S2,S3,R.
// T is a tree whose subclass is undefined (generic cells), None is outside Q_n.
enum class ForestClass : int { T1 = 0, T2, T3, S1, S2, S3, R, T, None };

std::string class_name(ForestClass c);
ForestClass parse_class(const std::string& name);
int component_count(ForestClass c);
bool is_tree_class(ForestClass c);
// Base-edge indicator set of the canonical level-0 forest of a class.
std::vector<std::uint8_t> eta_edges(const CellGraph& cell, ForestClass c);

using EdgeSet = std::vector<std::uint8_t>;

struct SpanningForest {
  GraphRef host;
  EdgeSet edges;
  ForestClass cls = ForestClass::None;

  int edge_count() const;
  std::vector<int> edge_ids() const;
  bool operator==(const SpanningForest& o) const { return host == o.host && edges == o.edges; }
};

// Component label per vertex, or empty when the edge set contains a cycle.
std::vector<int> forest_components(const ExplicitGraph& g, const EdgeSet& edges);
ForestClass classify(const ExplicitGraph& g, const EdgeSet& edges);
SpanningForest make_forest(const GraphRef& host, EdgeSet edges);

SpanningForest restrict(const SpanningForest& forest, const Word& w);
SpanningForest trace(const SpanningForest& forest);

}  // namespace gasket

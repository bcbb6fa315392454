#include "gasket/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gasket/errors.hpp"
#include "gasket/exact.hpp"

namespace gasket {

namespace {

// Integer cumulative weights per row over the row's common denominator.
class Picker {
 public:
  explicit Picker(const OffspringTable& table) : rows_(table.rows.size()), totals_(table.rows.size(), 0) {
    for (std::size_t x = 0; x < table.rows.size(); ++x) {
      const auto& row = table.rows[x];
      if (row.empty()) continue;
      Integer l = 1;
      for (const auto& o : row) l = lcm(l, Integer(o.prob.get_den()));
      if (!l.fits_ulong_p()) throw PreconditionError("offspring denominators too large");
      std::uint64_t acc = 0;
      for (const auto& o : row) {
        Integer w = o.prob.get_num() * (l / o.prob.get_den());
        acc += w.get_ui();
        rows_[x].push_back(acc);
      }
      totals_[x] = acc;
    }
  }

  int pick(int type, std::uint64_t draw) const {
    const auto& cum = rows_[static_cast<std::size_t>(type)];
    if (cum.empty()) throw PreconditionError("type has no offspring law");
    std::uint64_t r = scale_below(draw, totals_[static_cast<std::size_t>(type)]);
    return static_cast<int>(std::upper_bound(cum.begin(), cum.end(), r) - cum.begin());
  }

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> totals_;
};

void check_level(int n, int limit = kMaxTreeLevel) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  if (n > limit) throw PreconditionError("level too large for a stored tree");
}

// Children of one outcome, oriented along the parent's traversal direction.
void append_children(TypedTree& t, int parent_idx, const Outcome& o) {
  TreeNode& parent = t.nodes[static_cast<std::size_t>(parent_idx)];
  const int alphabet = t.table->alphabet;
  const bool reversed = parent.entry >= 0 && parent.entry > parent.exit;
  const int first = static_cast<int>(t.nodes.size());
  const int depth = parent.depth + 1;
  const std::uint64_t base = parent.index * static_cast<std::uint64_t>(alphabet);
  parent.first_child = first;
  parent.child_count = static_cast<int>(o.children.size());
  parent.census = o.census_index;
  const std::size_t k = o.children.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Child& c = o.children[reversed ? k - 1 - i : i];
    TreeNode n;
    n.depth = depth;
    n.index = base + static_cast<std::uint64_t>(c.suffix);
    n.type = c.type;
    n.entry = reversed ? c.exit : c.entry;
    n.exit = reversed ? c.entry : c.exit;
    n.parent = parent_idx;
    t.nodes.push_back(n);
  }
}

void grow(TypedTree& t, int from_depth, int to_depth, const Picker& picker, const RngStream& rng,
          std::uint64_t tag) {
  for (int d = from_depth; d < to_depth; ++d) {
    int begin = t.generation_start[static_cast<std::size_t>(d)];
    int end = t.generation_start[static_cast<std::size_t>(d) + 1];
    for (int i = begin; i < end; ++i) {
      const TreeNode& n = t.nodes[static_cast<std::size_t>(i)];
      int k = picker.pick(n.type, rng.draw(tag, n.depth, n.index));
      append_children(t, i, t.table->rows[static_cast<std::size_t>(n.type)][static_cast<std::size_t>(k)]);
    }
    t.generation_start.push_back(static_cast<int>(t.nodes.size()));
    if (t.nodes.size() > kMaxTreeNodes) throw PreconditionError("tree exceeds the node limit");
  }
  t.depth = to_depth;
}

const SgTables& tables() { return sg_tables(); }

}  // namespace

// --------------------------------------------------------------- TypedTree

std::vector<int> TypedTree::leaves() const {
  std::vector<int> out;
  for (int i = generation_start[static_cast<std::size_t>(depth)]; i < generation_start[static_cast<std::size_t>(depth) + 1]; ++i)
    out.push_back(i);
  return out;
}

Word TypedTree::word(int i) const {
  const TreeNode& n = node(i);
  return Word::from_index(n.index, n.depth, table->alphabet);
}

std::vector<std::vector<std::uint64_t>> TypedTree::type_counts() const {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(depth) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(table->type_count()), 0));
  for (const auto& n : nodes) ++c[static_cast<std::size_t>(n.depth)][static_cast<std::size_t>(n.type)];
  return c;
}

TypedTree sample_typed_tree(const OffspringTable& table, int root_type, int n, const RngStream& rng,
                            std::uint64_t tag, int root_entry, int root_exit) {
  check_level(n, kMaxSparseLevel);
  if (root_type < 0 || root_type >= table.type_count()) throw PreconditionError("root type outside the alphabet");
  TypedTree t;
  t.table = &table;
  t.root_type = root_type;
  TreeNode root;
  root.type = root_type;
  root.entry = root_entry;
  root.exit = root_exit;
  t.nodes.push_back(root);
  t.generation_start = {0, 1};
  Picker picker(table);
  grow(t, 0, n, picker, rng, tag);
  return t;
}

std::vector<std::vector<std::uint64_t>> stream_type_counts(const OffspringTable& table, int root_type, int n,
                                                           const RngStream& rng, std::uint64_t tag) {
  check_level(n, kMaxSparseLevel);
  Picker picker(table);
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(n) + 1,
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(table.type_count()), 0));
  struct Item {
    int depth;
    std::uint64_t index;
    int type;
  };
  std::vector<Item> stack{{0, 0, root_type}};
  const auto alphabet = static_cast<std::uint64_t>(table.alphabet);
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    ++counts[static_cast<std::size_t>(it.depth)][static_cast<std::size_t>(it.type)];
    if (it.depth == n) continue;
    int k = picker.pick(it.type, rng.draw(tag, it.depth, it.index));
    for (const auto& c : table.rows[static_cast<std::size_t>(it.type)][static_cast<std::size_t>(k)].children)
      stack.push_back({it.depth + 1, it.index * alphabet + static_cast<std::uint64_t>(c.suffix), c.type});
  }
  return counts;
}

TypedTree resolve_collapsed(const TypedTree& tree, const OffspringTable& fine, const std::vector<int>& group_of,
                            const RngStream& rng) {
  std::map<std::pair<int, int>, int> by_census;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(tree.table->type_count()));
  for (int x = 0; x < fine.type_count(); ++x) {
    if (!fine.has_row(x)) continue;
    int g = group_of[static_cast<std::size_t>(x)];
    members[static_cast<std::size_t>(g)].push_back(x);
    for (const auto& o : fine.rows[static_cast<std::size_t>(x)]) by_census[{g, o.census_index}] = x;
  }
  TypedTree out = tree;
  out.table = &fine;
  for (auto& n : out.nodes) {
    const auto& group = members[static_cast<std::size_t>(n.type)];
    if (group.empty()) throw ConsistencyError("collapsed type without members");
    if (n.child_count > 0 || n.census >= 0) {
      auto it = by_census.find({n.type, n.census});
      if (it == by_census.end()) throw ConsistencyError("census member outside its group");
      n.type = it->second;
    } else {
      std::uint64_t d = rng.draw(RngStream::kResolve, n.depth, n.index);
      n.type = group[static_cast<std::size_t>(scale_below(d, group.size()))];
    }
  }
  out.root_type = out.nodes.front().type;
  return out;
}

TypedTree refine(const TypedTree& tree, int extra, const RngStream& rng) {
  if (extra < 0) throw PreconditionError("extra levels must be nonnegative");
  check_level(tree.depth + extra, kMaxSparseLevel);
  TypedTree t = tree;
  Picker picker(*t.table);
  grow(t, tree.depth, tree.depth + extra, picker, rng, RngStream::kRefine);
  return t;
}

// --------------------------------------------------------------- forests

SpanningForest materialize_forest(const TypedTree& tree, const GraphRef& host) {
  if (host->level() != tree.depth) throw PreconditionError("host level differs from tree depth");
  const CellGraph& cell = *host->cell();
  std::vector<EdgeSet> eta(kForestTypes);
  for (int x = 0; x < kForestTypes; ++x) eta[static_cast<std::size_t>(x)] = eta_edges(cell, static_cast<ForestClass>(x));
  EdgeSet edges(static_cast<std::size_t>(host->edge_count()), 0);
  for (int leaf : tree.leaves()) {
    const TreeNode& n = tree.node(leaf);
    const auto& m = eta[static_cast<std::size_t>(n.type)];
    for (int e = 0; e < cell.base_edge_count(); ++e)
      if (m[static_cast<std::size_t>(e)]) edges[static_cast<std::size_t>(host->edge_id(static_cast<int>(n.index), e))] = 1;
  }
  return make_forest(host, std::move(edges));
}

int root_forest_type(ForestClass cls, const RngStream& rng) {
  if (cls == ForestClass::T) return static_cast<int>(scale_below(rng.draw(RngStream::kRoot, 0, 0), 3));
  if (cls == ForestClass::None) throw PreconditionError("no forest class given");
  return static_cast<int>(cls);
}

ForestSample sample_forest(ForestClass cls, int n, const RngStream& rng) {
  check_level(n);
  const SgTables& t = tables();
  if (cls == ForestClass::None) throw PreconditionError("no forest class given");
  TypedTree fine;
  if (is_tree_class(cls) && cls != ForestClass::T) {
    fine = sample_typed_tree(t.forest, static_cast<int>(cls), n, rng);
  } else {
    auto group = forest_collapse_map();
    int root = cls == ForestClass::T ? 0 : group[static_cast<std::size_t>(cls)];
    fine = resolve_collapsed(sample_typed_tree(t.forest_collapsed, root, n, rng), t.forest, group, rng);
  }
  ForestSample s;
  s.forest = materialize_forest(fine, build_graph(sg3_cell(), n));
  s.tree = std::move(fine);
  return s;
}

ForestSample sample_spanning_tree(int n, const RngStream& rng) { return sample_forest(ForestClass::T, n, rng); }

ForestTypeCounts forest_counts(ForestClass cls, int n, const RngStream& rng) {
  auto counts = stream_type_counts(tables().forest, root_forest_type(cls, rng), n, rng);
  ForestTypeCounts c;
  for (int x = 0; x < kForestTypes; ++x) {
    c.chi[static_cast<std::size_t>(x)] = counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
    c.components[static_cast<std::size_t>(forest_type_weight(x) - 1)] += c.chi[static_cast<std::size_t>(x)];
  }
  return c;
}

// ----------------------------------------------------------------- paths

std::vector<int> materialize_path(const TypedTree& tree, const GraphRef& host) {
  if (host->level() != tree.depth) throw PreconditionError("host level differs from tree depth");
  std::vector<int> path;
  for (int leaf : tree.leaves()) {
    const TreeNode& n = tree.node(leaf);
    const int c = static_cast<int>(n.index);
    const ConnType ct = conn_types()[static_cast<std::size_t>(n.type)];
    int in = host->corner(c, n.entry);
    if (path.empty()) path.push_back(in);
    if (path.back() != in) throw ConsistencyError("consecutive path parts do not meet");
    if (conn_is_through(n.type)) path.push_back(host->corner(c, ct.marked));
    path.push_back(host->corner(c, n.exit));
  }
  return path;
}

PathSample sample_lerw(int n, const RngStream& rng) {
  check_level(n);
  const SgTables& t = tables();
  TypedTree collapsed = sample_typed_tree(t.path_collapsed, 2, n, rng, RngStream::kPath, 0, 1);
  PathSample s;
  s.tree = resolve_collapsed(collapsed, t.path, path_collapse_map(), rng);
  s.host = build_graph(sg3_cell(), n);
  s.vertices = materialize_path(s.tree, s.host);
  for (int leaf : s.tree.leaves())
    ++s.weight_counts[static_cast<std::size_t>(conn_weight(s.tree.node(leaf).type) - 1)];
  return s;
}

// ------------------------------------------------------------ components

ComponentSample sample_component(ForestClass cls, unsigned tracked, int n, const RngStream& rng, bool materialize) {
  check_level(n, materialize ? kMaxTreeLevel : kMaxSparseLevel);
  int base = root_forest_type(cls, rng);
  int root = comp_index(static_cast<ForestClass>(base), tracked);
  if (root < 0) throw PreconditionError("tracked corners are not a union of components of the class");
  const SgTables& t = tables();
  ComponentSample s;
  s.tree = sample_typed_tree(t.component, root, n, rng);
  static constexpr std::array<int, 7> kEdges = {2, 1, 0, 1, 0, 0, 0};
  for (int leaf : s.tree.leaves()) {
    int w = comp_weight(s.tree.node(leaf).type);
    ++s.weight_counts[static_cast<std::size_t>(w - 1)];
    s.edge_count += static_cast<std::uint64_t>(kEdges[static_cast<std::size_t>(w - 1)]);
  }
  if (materialize) {
    GraphRef host = build_graph(sg3_cell(), n);
    const CellGraph& cell = *host->cell();
    for (int leaf : s.tree.leaves()) {
      const TreeNode& node = s.tree.node(leaf);
      const CompType ct = comp_types()[static_cast<std::size_t>(node.type)];
      auto eta = eta_edges(cell, ct.base);
      for (int e = 0; e < cell.base_edge_count(); ++e) {
        if (!eta[static_cast<std::size_t>(e)]) continue;
        auto [a, b] = cell.base_edges[static_cast<std::size_t>(e)];
        if ((ct.tracked >> a & 1U) && (ct.tracked >> b & 1U)) s.edges.push_back(host->edge_id(static_cast<int>(node.index), e));
      }
    }
  }
  return s;
}

// ------------------------------------------------------------- interface

InterfaceSample sample_interface(ForestClass cls, int n, const RngStream& rng) {
  int root = -1;
  if (cls == ForestClass::S1 || cls == ForestClass::S2 || cls == ForestClass::S3) root = static_cast<int>(cls) - 3;
  if (cls == ForestClass::R) root = 6;
  if (root < 0) throw PreconditionError("interface needs a class with several components");
  if (n < 0) throw PreconditionError("level must be nonnegative");
  InterfaceSample s;
  s.tree = sample_typed_tree(tables().interface, root, n, rng);
  for (int leaf : s.tree.leaves()) {
    ++s.class_counts[static_cast<std::size_t>(interface_class(s.tree.node(leaf).type) - 1)];
    s.cells.push_back(s.tree.word(leaf));
  }
  return s;
}

// ---------------------------------------------------------------- metric

std::vector<int> tree_path(const SpanningForest& forest, int u, int v) {
  const ExplicitGraph& g = *forest.host;
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) throw PreconditionError("vertex id out of range");
  std::vector<int> prev(static_cast<std::size_t>(g.vertex_count()), -2);
  prev[static_cast<std::size_t>(u)] = -1;
  std::vector<int> queue{u};
  for (std::size_t h = 0; h < queue.size() && prev[static_cast<std::size_t>(v)] == -2; ++h) {
    int x = queue[h];
    for (int k = 0; k < g.degree(x); ++k) {
      int y = g.neighbor(x, k);
      if (!forest.edges[static_cast<std::size_t>(g.neighbor_edge(x, k))] || prev[static_cast<std::size_t>(y)] != -2) continue;
      prev[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (prev[static_cast<std::size_t>(v)] == -2) throw DisconnectedError("vertices lie in different components");
  std::vector<int> path;
  for (int x = v; x != -1; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

int tree_metric(const SpanningForest& forest, int u, int v) { return static_cast<int>(tree_path(forest, u, v).size()) - 1; }

std::vector<CurvePoint> curve_points(const std::vector<int>& path, const ExplicitGraph& host, double time_scale) {
  if (time_scale <= 0) time_scale = std::pow(constants().alpha_bar.to_double(), host.level());
  std::vector<CurvePoint> out;
  out.reserve(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Point& p = host.coords()[static_cast<std::size_t>(path[k])];
    out.push_back({static_cast<double>(k) / time_scale, to_double(p.cartesian_x()), p.cartesian_y()});
  }
  return out;
}

CurvePoint curve_at(const std::vector<CurvePoint>& curve, double t) {
  if (curve.empty()) throw PreconditionError("empty curve");
  if (t <= curve.front().t) return {t, curve.front().x, curve.front().y};
  if (t >= curve.back().t) return {t, curve.back().x, curve.back().y};
  auto it = std::upper_bound(curve.begin(), curve.end(), t, [](double s, const CurvePoint& p) { return s < p.t; });
  const CurvePoint& b = *it;
  const CurvePoint& a = *(it - 1);
  double f = (t - a.t) / (b.t - a.t);
  return {t, a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

}  // namespace gasket

#include "gasket/walk.hpp"

#include <algorithm>
#include <numeric>

#include "gasket/errors.hpp"

namespace gasket {

WalkRecord loop_erase(const WalkRecord& walk) {
  const auto& x = walk.vertices;
  WalkRecord out{walk.host, {}};
  if (x.empty()) return out;
  // last[v]: index of the final visit of v.
  std::vector<std::size_t> last;
  int max_id = 0;
  for (int v : x) max_id = std::max(max_id, v);
  last.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (std::size_t j = 0; j < x.size(); ++j) last[static_cast<std::size_t>(x[j])] = j;
  std::size_t i = last[static_cast<std::size_t>(x[0])];
  out.vertices.push_back(x[i]);
  while (i + 1 < x.size()) {
    i = last[static_cast<std::size_t>(x[i + 1])];
    out.vertices.push_back(x[i]);
  }
  return out;
}

bool is_self_avoiding(const std::vector<int>& path) {
  std::vector<int> s = path;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_walk(const ExplicitGraph& g, const std::vector<int>& vertices) {
  for (std::size_t k = 1; k < vertices.size(); ++k)
    if (g.find_edge(vertices[k - 1], vertices[k]) < 0) return false;
  return true;
}

WalkRecord random_walk_until(const GraphRef& g, int u, const std::vector<std::uint8_t>& stop, Rng& rng,
                             std::uint64_t cap) {
  WalkRecord w{g, {u}};
  int v = u;
  std::uint64_t steps = 0;
  while (!stop[static_cast<std::size_t>(v)]) {
    if (++steps > cap) throw WalkCapError("random walk exceeded the step cap");
    v = g->neighbor(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(g->degree(v)))));
    w.vertices.push_back(v);
  }
  return w;
}

std::vector<int> order_with_first(const ExplicitGraph& g, int u, int v) {
  std::vector<int> order{u, v};
  for (int x = 0; x < g.vertex_count(); ++x)
    if (x != u && x != v) order.push_back(x);
  return order;
}

SpanningForest wilson_ust(const GraphRef& g, Rng& rng, const std::vector<int>& order) {
  const int nv = g->vertex_count();
  if (!g->connected()) throw PreconditionError("Wilson's algorithm needs a connected graph");
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(static_cast<std::size_t>(nv));
    std::iota(ord.begin(), ord.end(), 0);
  }
  std::vector<std::uint8_t> in_tree(static_cast<std::size_t>(nv), 0);
  // next[v]: successor of v in the current walk; overwriting it erases loops.
  std::vector<int> next(static_cast<std::size_t>(nv), -1);
  std::vector<int> next_edge(static_cast<std::size_t>(nv), -1);
  EdgeSet edges(static_cast<std::size_t>(g->edge_count()), 0);
  in_tree[static_cast<std::size_t>(ord[0])] = 1;
  std::uint64_t steps = 0;
  for (std::size_t k = 1; k < ord.size(); ++k) {
    int start = ord[k];
    for (int v = start; !in_tree[static_cast<std::size_t>(v)];) {
      if (++steps > kWalkStepCap) throw WalkCapError("random walk exceeded the step cap");
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(g->degree(v))));
      next[static_cast<std::size_t>(v)] = g->neighbor(v, j);
      next_edge[static_cast<std::size_t>(v)] = g->neighbor_edge(v, j);
      v = next[static_cast<std::size_t>(v)];
    }
    for (int v = start; !in_tree[static_cast<std::size_t>(v)]; v = next[static_cast<std::size_t>(v)]) {
      in_tree[static_cast<std::size_t>(v)] = 1;
      edges[static_cast<std::size_t>(next_edge[static_cast<std::size_t>(v)])] = 1;
    }
  }
  return make_forest(g, std::move(edges));
}

WalkRecord lerw_between(const GraphRef& g, int u, int v, Rng& rng) {
  if (u == v) throw PreconditionError("endpoints must differ");
  if (!g->connected()) throw PreconditionError("graph must be connected");
  std::vector<std::uint8_t> stop(static_cast<std::size_t>(g->vertex_count()), 0);
  stop[static_cast<std::size_t>(v)] = 1;
  return loop_erase(random_walk_until(g, u, stop, rng));
}

}  // namespace gasket

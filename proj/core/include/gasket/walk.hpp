#pragma once

#include <cstdint>
#include <vector>

#include "gasket/geometry.hpp"
#include "gasket/rng.hpp"

namespace gasket {

// Vertex sequence in a host graph; consecutive vertices are adjacent.
struct WalkRecord {
  GraphRef host;
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline constexpr std::uint64_t kWalkStepCap = 100000000ULL;

// Chronological loop erasure: after visiting x, continue from the last visit of x.
WalkRecord loop_erase(const WalkRecord& walk);
bool is_self_avoiding(const std::vector<int>& path);
bool is_walk(const ExplicitGraph& g, const std::vector<int>& vertices);

// Simple random walk from u until it hits a vertex with stop[v] set.
WalkRecord random_walk_until(const GraphRef& g, int u, const std::vector<std::uint8_t>& stop, Rng& rng,
                             std::uint64_t cap = kWalkStepCap);

// Wilson's algorithm. The tree is grown from order[0] and walks start from the
// remaining vertices in order; an empty order means id order.
SpanningForest wilson_ust(const GraphRef& g, Rng& rng, const std::vector<int>& order = {});
// Order with u first, v second, the rest by id.
std::vector<int> order_with_first(const ExplicitGraph& g, int u, int v);

// Loop-erased random walk from u stopped at v.
WalkRecord lerw_between(const GraphRef& g, int u, int v, Rng& rng);

}  // namespace gasket

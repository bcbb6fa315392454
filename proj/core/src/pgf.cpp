#include <algorithm>

#include "gasket/errors.hpp"
#include "gasket/exact.hpp"

namespace gasket {

const std::vector<MultiPoly>& path_class_pgfs() {
  static const std::vector<MultiPoly> g = collapsed_pgfs(sg_tables().path, path_class_map(), 3);
  return g;
}

const std::vector<MultiPoly>& path_collapsed_pgfs() {
  static const std::vector<MultiPoly> g = collapsed_pgfs(sg_tables().path_collapsed, {0, 0, 0, 1, 1, 1}, 2);
  return g;
}

namespace {

Matrix<Rational> jacobian_at_one(const std::vector<MultiPoly>& g) {
  const std::size_t n = g.size();
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [e, c] : g[i].terms())
      for (std::size_t j = 0; j < n; ++j) m(i, j) += c * e[j];
  return m;
}

Poly evaluate(const MultiPoly& g, const std::vector<Poly>& args, std::size_t cap) {
  std::vector<std::vector<Poly>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) powers[i].push_back(Poly::monomial(0));
  Poly sum(std::vector<Integer>{}, 1);
  for (const auto& [e, c] : g.terms()) {
    Poly term = Poly::monomial(0).scaled(c);
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * args[i]);
      if (e[i] > 0) term = term * pw[static_cast<std::size_t>(e[i])];
    }
    if (static_cast<std::size_t>(std::max(term.degree(), 0)) > cap)
      throw DegreeCapError("length generating function exceeds the degree cap");
    sum = sum + term;
  }
  return sum;
}

std::vector<Poly> iterate(const std::vector<MultiPoly>& g, std::vector<Poly> q, int n, std::size_t cap) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  for (int k = 0; k < n; ++k) {
    std::vector<Poly> next;
    for (const auto& gi : g) next.push_back(evaluate(gi, q, cap));
    q = std::move(next);
  }
  return q;
}

Poly z_poly(std::size_t k) { return Poly::monomial(k); }

}  // namespace

Matrix<Rational> length_mean_matrix() { return jacobian_at_one(path_collapsed_pgfs()); }

LengthPgfs length_pgf(int n, std::size_t degree_cap) {
  Poly tree0 = z_poly(1).scaled(rat(2, 3)) + z_poly(2).scaled(rat(1, 3));
  auto q = iterate(path_collapsed_pgfs(), {tree0, z_poly(1)}, n, degree_cap);
  return {q[0], q[1]};
}

std::array<Poly, 3> length_pgf_by_class(int n, std::size_t degree_cap) {
  auto q = iterate(path_class_pgfs(), {z_poly(1), z_poly(2), z_poly(1)}, n, degree_cap);
  return {q[0], q[1], q[2]};
}

std::array<Rational, 2> length_means(int n) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  // First-order jets at z = 1: values stay 1, derivatives move by the Jacobian.
  Matrix<Rational> j = length_mean_matrix();
  std::vector<Rational> d{rat(4, 3), Rational(1)};
  for (int k = 0; k < n; ++k) d = times_col(j, d);
  return {d[0], d[1]};
}

std::array<QuadNum, 2> expected_length(int n) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  Matrix<Rational> m = length_mean_matrix();
  PerronData p = perron(m);
  const QuadNum& l1 = p.value.value;
  QuadNum l2 = QuadNum(m(0, 0) + m(1, 1)) - l1;
  std::vector<QuadNum> mu0{QuadNum(rat(4, 3)), QuadNum(1)};
  QuadNum proj = dot(p.left, mu0);
  QuadNum f1 = pow(l1, static_cast<unsigned long>(n));
  QuadNum f2 = pow(l2, static_cast<unsigned long>(n));
  std::array<QuadNum, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    QuadNum main = p.right[i] * proj;
    out[i] = f1 * main + f2 * (mu0[i] - main);
  }
  return out;
}

DistTable theta_distribution(int n, int group, std::size_t degree_cap) {
  Poly law;
  if (group == 0) {
    law = length_pgf(n, degree_cap).tree;
  } else if (group >= 1 && group <= 3) {
    law = length_pgf_by_class(n, degree_cap)[static_cast<std::size_t>(group - 1)];
  } else {
    throw PreconditionError("theta group must be 0..3");
  }
  std::map<Key, Rational> probs;
  for (std::size_t k = 0; k < law.size(); ++k) {
    Rational c = law.coeff(k);
    if (c != 0) probs.emplace(length_key(static_cast<std::int64_t>(k)), c);
  }
  DistTable t = DistTable::exact_law(std::move(probs));
  const Constants& k = constants();
  long double denom = pow(k.alpha_bar, static_cast<unsigned long>(n)).to_long_double() * k.length_scale.to_long_double();
  t.set_scale(1.0L / denom);
  return t;
}

namespace {

// Edges of the forest path between two vertices, in order.
std::vector<int> path_edges(const ExplicitGraph& g, std::uint32_t mask, int from, int to) {
  std::vector<int> via(static_cast<std::size_t>(g.vertex_count()), -2);
  via[static_cast<std::size_t>(from)] = -1;
  std::vector<int> queue{from};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int k = 0; k < g.degree(v); ++k) {
      int e = g.neighbor_edge(v, k);
      int w = g.neighbor(v, k);
      if (!((mask >> e) & 1U) || via[static_cast<std::size_t>(w)] != -2) continue;
      via[static_cast<std::size_t>(w)] = e;
      queue.push_back(w);
    }
  }
  if (via[static_cast<std::size_t>(to)] == -2) throw ConsistencyError("corners are not connected");
  std::vector<int> edges;
  for (int v = to; v != from;) {
    int e = via[static_cast<std::size_t>(v)];
    edges.push_back(e);
    auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
    v = a == v ? b : a;
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Matrix<Rational> generic_length_matrix(const Census& census) {
  const ExplicitGraph& g1 = *census.g1;
  const int b = census.cell->boundary_count();
  if (b != 2 && b != 3) throw PreconditionError("length growth needs two or three corners");
  const int types = b == 2 ? 1 : 2;
  Matrix<Rational> m(static_cast<std::size_t>(types), static_cast<std::size_t>(types));
  const int u = g1.boundary()[0];
  const int v = g1.boundary()[1];
  for (int row = 0; row < types; ++row) {
    std::vector<int> members;
    for (const auto& [cls, idx] : census.by_class) {
      bool take = row == 0 ? is_tree_class(cls) : cls == ForestClass::S3;
      if (take) members.insert(members.end(), idx.begin(), idx.end());
    }
    if (members.empty()) throw ConsistencyError("census has no forests of a required class");
    Rational p(1, static_cast<unsigned long>(members.size()));
    for (int idx : members) {
      const CensusEntry& entry = census.entry(idx);
      int last = -1;
      for (int e : path_edges(g1, entry.mask, u, v)) {
        int copy = g1.edge_cell(e);
        if (copy == last) continue;
        last = copy;
        ForestClass part = entry.parts[static_cast<std::size_t>(copy)];
        int col = component_count(part) == 1 ? 0 : 1;
        if (col >= types) throw ConsistencyError("path crosses a disconnected part");
        m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) += p;
      }
    }
  }
  return m;
}

AlgebraicValue length_growth(const Census& census) { return dominant_eigenvalue(generic_length_matrix(census)); }

}  // namespace gasket

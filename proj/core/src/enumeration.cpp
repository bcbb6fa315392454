#include "gasket/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include <json.hpp>

#include "gasket/errors.hpp"

namespace gasket {

// ------------------------------------------------------------------ types

int forest_type_weight(int type) { return component_count(static_cast<ForestClass>(type)); }

std::string forest_type_name(int type) { return class_name(static_cast<ForestClass>(type)); }

const std::array<ConnType, kConnTypes>& conn_types() {
  static const std::array<ConnType, kConnTypes> types = {{
      {ForestClass::T2, 0}, {ForestClass::T3, 0}, {ForestClass::T1, 1}, {ForestClass::T3, 1},
      {ForestClass::T1, 2}, {ForestClass::T2, 2}, {ForestClass::T1, 0}, {ForestClass::T2, 1},
      {ForestClass::T3, 2}, {ForestClass::S1, 0}, {ForestClass::S2, 1}, {ForestClass::S3, 2},
  }};
  return types;
}

int conn_index(ForestClass base, int marked) {
  const auto& t = conn_types();
  for (int i = 0; i < kConnTypes; ++i)
    if (t[static_cast<std::size_t>(i)].base == base && t[static_cast<std::size_t>(i)].marked == marked) return i;
  return -1;
}

std::string conn_name(int type) {
  const auto& t = conn_types()[static_cast<std::size_t>(type)];
  return class_name(t.base) + "/k" + std::to_string(t.marked + 1);
}

int conn_weight(int type) { return type < 6 ? 1 : (type < 9 ? 2 : 3); }

bool conn_is_through(int type) { return type >= 6 && type < 9; }

const std::array<CompType, kCompTypes>& comp_types() {
  static const std::array<CompType, kCompTypes> types = {{
      {ForestClass::T1, 7}, {ForestClass::T2, 7}, {ForestClass::T3, 7},
      {ForestClass::S1, 7}, {ForestClass::S1, 6}, {ForestClass::S1, 1},
      {ForestClass::S2, 7}, {ForestClass::S2, 5}, {ForestClass::S2, 2},
      {ForestClass::S3, 7}, {ForestClass::S3, 3}, {ForestClass::S3, 4},
      {ForestClass::R, 7},  {ForestClass::R, 6},  {ForestClass::R, 5}, {ForestClass::R, 3},
      {ForestClass::R, 1},  {ForestClass::R, 2},  {ForestClass::R, 4},
  }};
  return types;
}

int comp_index(ForestClass base, unsigned tracked) {
  const auto& t = comp_types();
  for (int i = 0; i < kCompTypes; ++i)
    if (t[static_cast<std::size_t>(i)].base == base && t[static_cast<std::size_t>(i)].tracked == tracked) return i;
  return -1;
}

std::string comp_name(int type) {
  const auto& t = comp_types()[static_cast<std::size_t>(type)];
  std::string s = class_name(t.base) + "{";
  for (int j = 0; j < 3; ++j)
    if (t.tracked & (1U << j)) s += std::to_string(j + 1);
  return s + "}";
}

int comp_weight(int type) {
  const auto& t = comp_types()[static_cast<std::size_t>(type)];
  int tracked = __builtin_popcount(t.tracked);
  switch (component_count(t.base)) {
    case 1:
      return 1;
    case 2:
      return tracked == 3 ? 2 : (tracked == 2 ? 4 : 5);
    default:
      return tracked == 3 ? 3 : (tracked == 2 ? 6 : 7);
  }
}

const std::array<InterfaceType, kInterfaceTypes>& interface_types() {
  static const std::array<InterfaceType, kInterfaceTypes> types = {{
      {ForestClass::S1, -1}, {ForestClass::S2, -1}, {ForestClass::S3, -1},
      {ForestClass::R, 0},   {ForestClass::R, 1},   {ForestClass::R, 2}, {ForestClass::R, -1},
  }};
  return types;
}

std::string interface_name(int type) {
  const auto& t = interface_types()[static_cast<std::size_t>(type)];
  if (t.base != ForestClass::R) return class_name(t.base);
  return t.lone < 0 ? "R*" : "R|" + std::to_string(t.lone + 1);
}

int interface_class(int type) { return type < 3 ? 1 : (type < 6 ? 2 : 3); }

// ----------------------------------------------------------------- census

std::size_t Census::class_size(ForestClass c) const {
  auto it = by_class.find(c);
  return it == by_class.end() ? 0 : it->second.size();
}

Census enumerate_cell_forests(const CellRef& cell) {
  Census census;
  census.cell = cell;
  census.g1 = build_graph(cell, 1);
  GraphRef g0 = build_graph(cell, 0);
  const int e1 = census.g1->edge_count();
  const int e0 = cell->base_edge_count();
  if (e1 > 30) throw PreconditionError("cell has too many edges to enumerate");
  EdgeSet edges(static_cast<std::size_t>(e1));
  EdgeSet part(static_cast<std::size_t>(e0));
  const std::uint64_t total = std::uint64_t{1} << e1;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int e = 0; e < e1; ++e) edges[static_cast<std::size_t>(e)] = (mask >> e) & 1U;
    ForestClass cls = classify(*census.g1, edges);
    if (cls == ForestClass::None) continue;
    CensusEntry entry;
    entry.mask = static_cast<std::uint32_t>(mask);
    entry.cls = cls;
    for (int l = 0; l < cell->alphabet(); ++l) {
      for (int e = 0; e < e0; ++e) part[static_cast<std::size_t>(e)] = edges[static_cast<std::size_t>(l * e0 + e)];
      entry.parts.push_back(classify(*g0, part));
    }
    census.by_class[cls].push_back(static_cast<int>(census.entries.size()));
    census.entries.push_back(std::move(entry));
  }
  census.subsets_examined = total;
  return census;
}

const Census& sg_census() {
  static const Census census = enumerate_cell_forests(sg3_cell());
  return census;
}

// ------------------------------------------------------- table utilities

OffspringTable OffspringTable::grouped() const {
  OffspringTable t;
  t.name = name;
  t.alphabet = alphabet;
  t.type_names = type_names;
  t.rows.resize(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    std::map<std::vector<Child>, Rational> acc;
    for (const auto& o : rows[x]) acc[o.children] += o.prob;
    for (auto& [children, prob] : acc) t.rows[x].push_back({children, prob, -1});
  }
  return t;
}

void OffspringTable::check_normalized() const {
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].empty()) continue;
    Rational s(0);
    for (const auto& o : rows[x]) {
      if (o.prob <= 0) throw ConsistencyError(name + ": nonpositive probability for " + type_names[x]);
      s += o.prob;
    }
    if (s != 1) throw ConsistencyError(name + ": row " + type_names[x] + " sums to " + to_string(s));
  }
}

static void require_subclasses(const Census& census) {
  if (census.cell->boundary_count() != 3) throw PreconditionError("typed tables need three boundary vertices");
  for (const auto& e : census.entries)
    if (e.cls == ForestClass::T) throw ConsistencyError("tree subclasses are undefined for this cell");
  UniformityReport rep = check_uniformity(census);
  if (!rep.pass) throw ConsistencyError("trace preimages are not uniform; no GW table for this cell");
}

static std::vector<int> component_labels(const Census& census, const CensusEntry& e) {
  const int e1 = census.g1->edge_count();
  EdgeSet edges(static_cast<std::size_t>(e1));
  for (int k = 0; k < e1; ++k) edges[static_cast<std::size_t>(k)] = (e.mask >> k) & 1U;
  return forest_components(*census.g1, edges);
}

static int local_corner(const ExplicitGraph& g1, int copy, int vertex) {
  for (int j = 0; j < g1.boundary_count(); ++j)
    if (g1.corner(copy, j) == vertex) return j;
  return -1;
}

OffspringTable derive_offspring_7(const Census& census) {
  require_subclasses(census);
  OffspringTable t;
  t.name = "forest";
  t.alphabet = census.cell->alphabet();
  for (int x = 0; x < kForestTypes; ++x) t.type_names.push_back(forest_type_name(x));
  t.rows.resize(kForestTypes);
  for (int x = 0; x < kForestTypes; ++x) {
    const auto& members = census.by_class.at(static_cast<ForestClass>(x));
    Rational p(1, static_cast<unsigned long>(members.size()));
    for (int idx : members) {
      Outcome o;
      o.prob = p;
      o.census_index = idx;
      const auto& parts = census.entry(idx).parts;
      for (int l = 0; l < t.alphabet; ++l) o.children.push_back({l, static_cast<int>(parts[static_cast<std::size_t>(l)])});
      t.rows[static_cast<std::size_t>(x)].push_back(std::move(o));
    }
  }
  t.check_normalized();
  return t;
}

// Vertex path between two vertices in the forest given by a census mask.
static std::vector<std::pair<int, int>> forest_path(const ExplicitGraph& g, std::uint32_t mask, int from, int to) {
  std::vector<int> prev_edge(static_cast<std::size_t>(g.vertex_count()), -2);
  std::vector<int> prev_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> stack{from};
  prev_edge[static_cast<std::size_t>(from)] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k = 0; k < g.degree(v); ++k) {
      int e = g.neighbor_edge(v, k);
      int w = g.neighbor(v, k);
      if (!((mask >> e) & 1U) || prev_edge[static_cast<std::size_t>(w)] != -2) continue;
      prev_edge[static_cast<std::size_t>(w)] = e;
      prev_vertex[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  if (prev_edge[static_cast<std::size_t>(to)] == -2) throw ConsistencyError("marked corners are not connected");
  std::vector<std::pair<int, int>> path;  // (vertex, edge used to arrive)
  for (int v = to; v != from; v = prev_vertex[static_cast<std::size_t>(v)])
    path.emplace_back(v, prev_edge[static_cast<std::size_t>(v)]);
  path.emplace_back(from, -1);
  std::reverse(path.begin(), path.end());
  return path;
}

OffspringTable derive_offspring_12(const Census& census) {
  require_subclasses(census);
  const ExplicitGraph& g1 = *census.g1;
  OffspringTable t;
  t.name = "path";
  t.alphabet = census.cell->alphabet();
  for (int x = 0; x < kConnTypes; ++x) t.type_names.push_back(conn_name(x));
  t.rows.resize(kConnTypes);
  for (int x = 0; x < kConnTypes; ++x) {
    const ConnType ct = conn_types()[static_cast<std::size_t>(x)];
    int a = ct.marked == 0 ? 1 : 0;
    int b = ct.marked == 2 ? 1 : 2;
    const auto& members = census.by_class.at(ct.base);
    Rational p(1, static_cast<unsigned long>(members.size()));
    for (int idx : members) {
      const auto& entry = census.entry(idx);
      auto path = forest_path(g1, entry.mask, g1.boundary()[static_cast<std::size_t>(a)],
                              g1.boundary()[static_cast<std::size_t>(b)]);
      Outcome o;
      o.prob = p;
      o.census_index = idx;
      std::size_t k = 1;
      while (k < path.size()) {
        int copy = g1.edge_cell(path[k].second);
        int start = path[k - 1].first;
        while (k + 1 < path.size() && g1.edge_cell(path[k + 1].second) == copy) ++k;
        int stop = path[k].first;
        ++k;
        int in = local_corner(g1, copy, start);
        int out = local_corner(g1, copy, stop);
        int marked = 3 - in - out;
        int type = conn_index(entry.parts[static_cast<std::size_t>(copy)], marked);
        if (in < 0 || out < 0 || type < 0) throw ConsistencyError("path crosses a part in an impossible way");
        o.children.push_back({copy, type, in, out});
      }
      t.rows[static_cast<std::size_t>(x)].push_back(std::move(o));
    }
  }
  t.check_normalized();
  return t;
}

OffspringTable derive_offspring_19(const Census& census) {
  require_subclasses(census);
  const ExplicitGraph& g1 = *census.g1;
  OffspringTable t;
  t.name = "component";
  t.alphabet = census.cell->alphabet();
  for (int x = 0; x < kCompTypes; ++x) t.type_names.push_back(comp_name(x));
  t.rows.resize(kCompTypes);
  for (int x = 0; x < kCompTypes; ++x) {
    const CompType ct = comp_types()[static_cast<std::size_t>(x)];
    const auto& members = census.by_class.at(ct.base);
    Rational p(1, static_cast<unsigned long>(members.size()));
    for (int idx : members) {
      const auto& entry = census.entry(idx);
      auto comp = component_labels(census, entry);
      std::set<int> tracked;
      for (int j = 0; j < 3; ++j)
        if (ct.tracked & (1U << j)) tracked.insert(comp[static_cast<std::size_t>(g1.boundary()[static_cast<std::size_t>(j)])]);
      Outcome o;
      o.prob = p;
      o.census_index = idx;
      for (int l = 0; l < t.alphabet; ++l) {
        unsigned k = 0;
        for (int j = 0; j < 3; ++j)
          if (tracked.count(comp[static_cast<std::size_t>(g1.corner(l, j))])) k |= 1U << j;
        if (k == 0) continue;
        int type = comp_index(entry.parts[static_cast<std::size_t>(l)], k);
        if (type < 0) throw ConsistencyError("tracked corners do not form a union of components");
        o.children.push_back({l, type});
      }
      t.rows[static_cast<std::size_t>(x)].push_back(std::move(o));
    }
  }
  t.check_normalized();
  return t;
}

OffspringTable derive_offspring_interface(const Census& census) {
  require_subclasses(census);
  const ExplicitGraph& g1 = *census.g1;
  OffspringTable t;
  t.name = "interface";
  t.alphabet = census.cell->alphabet();
  for (int x = 0; x < kInterfaceTypes; ++x) t.type_names.push_back(interface_name(x));
  t.rows.resize(kInterfaceTypes);
  for (int x = 0; x < kInterfaceTypes; ++x) {
    const InterfaceType it = interface_types()[static_cast<std::size_t>(x)];
    const auto& members = census.by_class.at(it.base);
    Rational p(1, static_cast<unsigned long>(members.size()));
    for (int idx : members) {
      const auto& entry = census.entry(idx);
      auto comp = component_labels(census, entry);
      if (it.lone >= 0) {
        int a = comp[static_cast<std::size_t>(g1.boundary()[static_cast<std::size_t>((it.lone + 1) % 3)])];
        int b = comp[static_cast<std::size_t>(g1.boundary()[static_cast<std::size_t>((it.lone + 2) % 3)])];
        for (auto& c : comp)
          if (c == a) c = b;
      }
      Outcome o;
      o.prob = p;
      o.census_index = idx;
      for (int l = 0; l < t.alphabet; ++l) {
        int lab[3];
        for (int j = 0; j < 3; ++j) lab[j] = comp[static_cast<std::size_t>(g1.corner(l, j))];
        std::set<int> blocks(lab, lab + 3);
        if (blocks.size() < 2) continue;
        ForestClass part = entry.parts[static_cast<std::size_t>(l)];
        int type = -1;
        if (part == ForestClass::R) {
          if (blocks.size() == 3) {
            type = 6;
          } else {
            for (int j = 0; j < 3; ++j)
              if (lab[j] != lab[(j + 1) % 3] && lab[j] != lab[(j + 2) % 3]) type = 3 + j;
          }
        } else if (component_count(part) == 2) {
          type = static_cast<int>(part) - 3;
        }
        if (type < 0) throw ConsistencyError("interface child with a connected part");
        o.children.push_back({l, type});
      }
      t.rows[static_cast<std::size_t>(x)].push_back(std::move(o));
    }
  }
  t.check_normalized();
  return t;
}

OffspringTable collapse_table(const OffspringTable& table, const std::vector<int>& group_of,
                              const std::vector<std::string>& group_names, const std::string& name) {
  OffspringTable t;
  t.name = name;
  t.alphabet = table.alphabet;
  t.type_names = group_names;
  t.rows.resize(group_names.size());
  for (std::size_t g = 0; g < group_names.size(); ++g) {
    std::vector<int> members;
    for (int x = 0; x < table.type_count(); ++x)
      if (group_of[static_cast<std::size_t>(x)] == static_cast<int>(g) && table.has_row(x)) members.push_back(x);
    for (int x : members)
      for (const auto& o : table.rows[static_cast<std::size_t>(x)]) {
        Outcome c = o;
        c.prob /= static_cast<unsigned long>(members.size());
        for (auto& ch : c.children) ch.type = group_of[static_cast<std::size_t>(ch.type)];
        t.rows[g].push_back(std::move(c));
      }
  }
  t.check_normalized();
  return t;
}

std::vector<int> forest_collapse_map() { return {0, 0, 0, 1, 2, 3, 4}; }

std::vector<int> forest_symmetry_map() { return {0, 0, 0, 1, 1, 1, 2}; }

std::vector<int> path_collapse_map() { return {0, 0, 1, 1, 2, 2, 0, 1, 2, 3, 4, 5}; }

OffspringTable collapsed_forest_table(const OffspringTable& table7) {
  return collapse_table(table7, forest_collapse_map(), {"T", "S1", "S2", "S3", "R"}, "forest-collapsed");
}

OffspringTable collapsed_path_table(const OffspringTable& table12) {
  return collapse_table(table12, path_collapse_map(), {"T/k1", "T/k2", "T/k3", "S1/k1", "S2/k2", "S3/k3"},
                        "path-collapsed");
}

std::vector<MultiPoly> collapsed_pgfs(const OffspringTable& table, const std::vector<int>& group_of, int groups) {
  std::vector<MultiPoly> result(static_cast<std::size_t>(groups), MultiPoly(static_cast<std::size_t>(groups)));
  std::vector<bool> seen(static_cast<std::size_t>(groups), false);
  for (int x = 0; x < table.type_count(); ++x) {
    if (!table.has_row(x)) continue;
    MultiPoly poly(static_cast<std::size_t>(groups));
    for (const auto& o : table.rows[static_cast<std::size_t>(x)]) {
      MultiPoly::Exponents e(static_cast<std::size_t>(groups), 0);
      for (const auto& ch : o.children) ++e[static_cast<std::size_t>(group_of[static_cast<std::size_t>(ch.type)])];
      poly.add_term(e, o.prob);
    }
    auto g = static_cast<std::size_t>(group_of[static_cast<std::size_t>(x)]);
    if (!seen[g]) {
      result[g] = poly;
      seen[g] = true;
    } else if (!(result[g] == poly)) {
      throw ConsistencyError(table.name + ": members of a collapsed class have different offspring laws");
    }
  }
  return result;
}

std::vector<MultiPoly> table_pgfs(const OffspringTable& table) {
  const auto n = static_cast<std::size_t>(table.type_count());
  std::vector<MultiPoly> result(n, MultiPoly(n));
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& o : table.rows[x]) {
      MultiPoly::Exponents e(n, 0);
      for (const auto& ch : o.children) ++e[static_cast<std::size_t>(ch.type)];
      result[x].add_term(e, o.prob);
    }
  return result;
}

bool postponable(const OffspringTable& table, const std::vector<int>& group_of) {
  std::map<int, unsigned long> group_size;
  for (int g : group_of) ++group_size[g];
  for (const auto& row : table.rows) {
    std::map<std::vector<Child>, std::map<std::vector<Child>, Rational>> split;
    for (const auto& o : row) {
      std::vector<Child> key = o.children;
      for (auto& ch : key) ch.type = group_of[static_cast<std::size_t>(ch.type)];
      split[key][o.children] += o.prob;
    }
    for (const auto& [key, actual] : split) {
      Rational total(0);
      unsigned long combos = 1;
      for (const auto& ch : key) combos *= group_size[ch.type];
      for (const auto& [tuple, p] : actual) total += p;
      if (actual.size() != combos) return false;
      for (const auto& [tuple, p] : actual)
        if (p * combos != total) return false;
    }
  }
  return true;
}

UniformityReport check_uniformity(const Census& census) {
  UniformityReport rep;
  const int b = census.cell->boundary_count();
  std::uint64_t trees = 0;
  for (const auto& [cls, members] : census.by_class)
    if (is_tree_class(cls)) trees += members.size();

  if (b == 3) {
    std::uint64_t t1 = census.class_size(ForestClass::T1);
    rep.subclasses_even = t1 > 0 && census.class_size(ForestClass::T2) == t1 &&
                          census.class_size(ForestClass::T3) == t1 && 3 * t1 == trees;
    for (int c = 0; c < kForestTypes; ++c)
      rep.preimage_counts[forest_type_name(c)] = {census.class_size(static_cast<ForestClass>(c))};
  } else {
    rep.subclasses_even = true;
    rep.preimage_counts["T"] = {trees};
    rep.preimage_counts["R"] = {census.class_size(ForestClass::R)};
  }

  // Level-1 class sizes by connectivity class over level-0 class sizes.
  auto connectivity = [](ForestClass c) { return is_tree_class(c) ? ForestClass::T : c; };
  std::map<ForestClass, Rational> ratio;
  for (const auto& [cls, members] : census.by_class) {
    ForestClass k = connectivity(cls);
    Rational n1(static_cast<unsigned long>(k == ForestClass::T ? trees : members.size()));
    Rational n0(k == ForestClass::T && b == 3 ? 3 : 1);
    ratio[k] = n1 / n0;
  }
  rep.weights_constant = true;
  for (const auto& [cls, members] : census.by_class) {
    std::set<Rational> weights;
    for (int idx : members) {
      Rational w(1);
      for (ForestClass part : census.entry(idx).parts) {
        auto it = ratio.find(connectivity(part));
        w *= it == ratio.end() ? Rational(0) : it->second;
      }
      weights.insert(w);
    }
    if (weights.size() > 1) {
      rep.weights_constant = false;
      rep.detail += "class " + class_name(cls) + " has " + std::to_string(weights.size()) + " distinct weights; ";
    }
  }
  if (!rep.subclasses_even) rep.detail += "tree subclasses do not split the spanning trees evenly; ";
  rep.pass = rep.subclasses_even && rep.weights_constant;
  if (rep.pass) rep.detail = "uniform";
  return rep;
}

std::string table_to_json(const OffspringTable& table) {
  OffspringTable g = table.grouped();
  nlohmann::json j;
  j["name"] = g.name;
  j["types"] = g.type_names;
  for (int x = 0; x < g.type_count(); ++x) {
    if (!g.has_row(x)) continue;
    nlohmann::json row = nlohmann::json::array();
    for (const auto& o : g.rows[static_cast<std::size_t>(x)]) {
      nlohmann::json kids = nlohmann::json::array();
      for (const auto& c : o.children) {
        nlohmann::json k = {{"suffix", c.suffix + 1}, {"type", g.type_names[static_cast<std::size_t>(c.type)]}};
        if (c.entry >= 0) {
          k["entry"] = c.entry + 1;
          k["exit"] = c.exit + 1;
        }
        kids.push_back(k);
      }
      row.push_back({{"children", kids}, {"prob", to_string(o.prob)}});
    }
    j["rows"][g.type_names[static_cast<std::size_t>(x)]] = row;
  }
  return j.dump(2);
}

std::string census_to_json(const Census& census) {
  nlohmann::json j;
  j["cell"] = census.cell->name;
  j["subsets_examined"] = census.subsets_examined;
  for (const auto& [cls, members] : census.by_class) {
    nlohmann::json list = nlohmann::json::array();
    for (int idx : members) {
      const auto& e = census.entry(idx);
      nlohmann::json parts = nlohmann::json::array();
      for (auto p : e.parts) parts.push_back(class_name(p));
      list.push_back({{"edges", e.mask}, {"parts", parts}});
    }
    j["classes"][class_name(cls)] = list;
  }
  return j.dump(2);
}

}  // namespace gasket

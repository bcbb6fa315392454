#include "gasket/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gasket/errors.hpp"

namespace gasket {

// ------------------------------------------------------------------- Word

Word Word::parse(const std::string& text) {
  std::vector<int> letters;
  if (text.empty() || text == "e") return Word();
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) letters.push_back(std::stoi(tok) - 1);
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad word letter in '" + text + "'");
      letters.push_back(c - '1');
    }
  }
  return Word(std::move(letters));
}

Word Word::from_index(std::uint64_t index, int length, int alphabet) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (int k = length - 1; k >= 0; --k) {
    letters[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::uint64_t>(alphabet));
    index /= static_cast<std::uint64_t>(alphabet);
  }
  return Word(std::move(letters));
}

std::uint64_t Word::index(int alphabet) const {
  std::uint64_t idx = 0;
  for (int l : letters_) idx = idx * static_cast<std::uint64_t>(alphabet) + static_cast<std::uint64_t>(l);
  return idx;
}

Word Word::operator+(const Word& o) const {
  std::vector<int> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(l));
}

Word Word::prefix(int k) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + k));
}

bool Word::has_prefix(const Word& p) const {
  return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

std::string Word::to_string() const {
  bool wide = false;
  for (int l : letters_) wide = wide || l >= 9;
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (wide) {
      if (i) s += ",";
      s += std::to_string(letters_[i] + 1);
    } else {
      s.push_back(static_cast<char>('1' + letters_[i]));
    }
  }
  return s;
}

// ------------------------------------------------------------ Point / map

double Point::cartesian_y() const { return to_double(y) * std::sqrt(3.0) / 2.0; }

bool Point::operator<(const Point& o) const {
  Rational a = cartesian_x();
  Rational b = o.cartesian_x();
  if (a != b) return a < b;
  return y < o.y;
}

Point AffineMap::apply(const Point& p) const {
  Rational x = p.x;
  Rational y = p.y;
  for (int k = 0; k < ((rotation % 6) + 6) % 6; ++k) {
    Rational nx = -y;
    Rational ny = x + y;
    x = nx;
    y = ny;
  }
  return Point{scale * x + translation.x, scale * y + translation.y};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  AffineMap r;
  r.scale = scale * inner.scale;
  r.rotation = (rotation + inner.rotation) % 6;
  r.translation = apply(inner.translation);
  return r;
}

AffineMap word_map(const CellGraph& cell, const Word& w) {
  AffineMap m;
  for (int l : w.letters()) m = m.compose(cell.copies.at(static_cast<std::size_t>(l)));
  return m;
}

// ------------------------------------------------------------------ cells

int CellGraph::corner_copy(int i) const {
  int found = -1;
  for (int l = 0; l < alphabet(); ++l) {
    for (const auto& b : boundary) {
      if (copies[static_cast<std::size_t>(l)].apply(b) == boundary[static_cast<std::size_t>(i)]) {
        if (found >= 0 && found != l) return -1;
        found = l;
      }
    }
  }
  return found;
}

static std::vector<std::pair<int, int>> default_edges(int b) {
  if (b == 3) return {{1, 2}, {2, 0}, {0, 1}};
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) e.emplace_back(i, j);
  return e;
}

CellRef sg3_cell() {
  static const CellRef cell = [] {
    auto c = std::make_shared<CellGraph>();
    c->name = "sg3";
    c->boundary = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}};
    c->base_edges = default_edges(3);
    for (const auto& t : c->boundary) {
      AffineMap m;
      m.scale = rat(1, 2);
      m.translation = Point{t.x / 2, t.y / 2};
      c->copies.push_back(m);
    }
    c->gluings = {{0, 1, 1, 0}, {0, 2, 2, 0}, {1, 2, 2, 1}};
    validate_cell(*c);
    return CellRef(c);
  }();
  return cell;
}

static Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw CellValidationError("cell coordinates must be integers or rational strings");
}

static Point json_point(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 2) throw CellValidationError("point must be a 2-element array");
  return Point{json_rational(v[0]), json_rational(v[1])};
}

CellRef parse_cell(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw CellValidationError(std::string("cell file is not valid JSON: ") + e.what());
  }
  auto c = std::make_shared<CellGraph>();
  try {
    c->name = j.value("name", std::string("custom"));
    int b = j.at("boundary_count").get<int>();
    for (const auto& p : j.at("boundary")) c->boundary.push_back(json_point(p));
    if (static_cast<int>(c->boundary.size()) != b) throw CellValidationError("boundary_count does not match boundary list");
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) c->base_edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    } else {
      c->base_edges = default_edges(b);
    }
    for (const auto& cp : j.at("copies")) {
      AffineMap m;
      m.scale = json_rational(cp.at("scale"));
      m.translation = json_point(cp.at("translation"));
      m.rotation = cp.value("rotation", 0);
      c->copies.push_back(m);
    }
    for (const auto& g : j.value("gluings", nlohmann::json::array())) {
      c->gluings.push_back({g.at(0).at(0).get<int>() - 1, g.at(0).at(1).get<int>() - 1,
                            g.at(1).at(0).get<int>() - 1, g.at(1).at(1).get<int>() - 1});
    }
  } catch (const nlohmann::json::exception& e) {
    throw CellValidationError(std::string("malformed cell description: ") + e.what());
  }
  validate_cell(*c);
  return c;
}

CellRef load_cell(const std::string& name_or_path) {
  if (name_or_path.empty() || name_or_path == "sg3") return sg3_cell();
  std::ifstream in(name_or_path);
  if (!in) in.open(std::string(GASKET_CELL_DIR) + "/" + name_or_path + ".json");
  if (!in) throw CellValidationError("unknown cell '" + name_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cell(ss.str());
}

CellRef default_cell() {
  const char* env = std::getenv(kCellEnvVar);
  return load_cell(env ? std::string(env) : std::string());
}

std::string cell_to_json(const CellGraph& cell) {
  nlohmann::json j;
  auto pt = [](const Point& p) { return nlohmann::json::array({to_string(p.x), to_string(p.y)}); };
  j["name"] = cell.name;
  j["boundary_count"] = cell.boundary_count();
  for (const auto& p : cell.boundary) j["boundary"].push_back(pt(p));
  for (const auto& [a, b] : cell.base_edges) j["edges"].push_back({a + 1, b + 1});
  for (const auto& m : cell.copies) {
    j["copies"].push_back({{"scale", to_string(m.scale)}, {"translation", pt(m.translation)}, {"rotation", m.rotation}});
  }
  j["gluings"] = nlohmann::json::array();
  for (const auto& g : cell.gluings) {
    j["gluings"].push_back({{g.copy_a + 1, g.index_a + 1}, {g.copy_b + 1, g.index_b + 1}});
  }
  return j.dump(2);
}

void validate_cell(const CellGraph& cell) {
  const int b = cell.boundary_count();
  const int m = cell.alphabet();
  if (b < 2) throw CellValidationError("cell needs at least two boundary vertices");
  if (m < 1) throw CellValidationError("cell needs at least one copy");
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (cell.boundary[static_cast<std::size_t>(i)] == cell.boundary[static_cast<std::size_t>(j)])
        throw CellValidationError("boundary vertices must be distinct");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : cell.base_edges) {
    if (u < 0 || v < 0 || u >= b || v >= b || u == v) throw CellValidationError("base edge out of range");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw CellValidationError("duplicate base edge");
  }
  for (const auto& c : cell.copies) {
    if (c.scale <= 0 || c.scale >= 1) throw CellValidationError("copy scale must lie in (0,1)");
    if (c.rotation < 0 || c.rotation > 5) throw CellValidationError("copy rotation must be in 0..5");
  }
  auto image = [&](int copy, int idx) {
    return cell.copies[static_cast<std::size_t>(copy)].apply(cell.boundary[static_cast<std::size_t>(idx)]);
  };
  std::vector<int> parent(static_cast<std::size_t>(m * b));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& g : cell.gluings) {
    if (g.copy_a < 0 || g.copy_a >= m || g.copy_b < 0 || g.copy_b >= m || g.index_a < 0 || g.index_a >= b ||
        g.index_b < 0 || g.index_b >= b)
      throw CellValidationError("gluing index out of range");
    if (image(g.copy_a, g.index_a) != image(g.copy_b, g.index_b))
      throw CellValidationError("gluing identifies vertices with unequal coordinates");
    parent[static_cast<std::size_t>(find(g.copy_a * b + g.index_a))] = find(g.copy_b * b + g.index_b);
  }
  for (int s = 0; s < m * b; ++s)
    for (int t = s + 1; t < m * b; ++t)
      if (s / b != t / b && image(s / b, s % b) == image(t / b, t % b) && find(s) != find(t))
        throw CellValidationError("copies " + std::to_string(s / b + 1) + " and " + std::to_string(t / b + 1) +
                                  " meet in a vertex that no gluing identifies");
  for (int i = 0; i < b; ++i) {
    bool hit = false;
    for (int s = 0; s < m * b && !hit; ++s) hit = image(s / b, s % b) == cell.boundary[static_cast<std::size_t>(i)];
    if (!hit) throw CellValidationError("boundary vertex " + std::to_string(i + 1) + " is not covered by any copy");
  }
}

// ---------------------------------------------------------- ExplicitGraph

ExplicitGraph::ExplicitGraph(CellRef cell, int level) : cell_(std::move(cell)), level_(level) {
  if (level < 0) throw PreconditionError("level must be nonnegative");
  const int b = cell_->boundary_count();
  const int m = cell_->alphabet();
  std::vector<AffineMap> maps{AffineMap{}};
  for (int k = 0; k < level; ++k) {
    std::vector<AffineMap> next;
    next.reserve(maps.size() * static_cast<std::size_t>(m));
    for (const auto& w : maps)
      for (const auto& c : cell_->copies) next.push_back(w.compose(c));
    maps.swap(next);
  }
  cell_count_ = static_cast<int>(maps.size());

  struct Slot {
    Rational cx;
    Rational y;
    Point p;
    int slot;
  };
  std::vector<Slot> slots;
  slots.reserve(maps.size() * static_cast<std::size_t>(b));
  for (std::size_t c = 0; c < maps.size(); ++c)
    for (int j = 0; j < b; ++j) {
      Point p = maps[c].apply(cell_->boundary[static_cast<std::size_t>(j)]);
      slots.push_back({p.cartesian_x(), p.y, p, static_cast<int>(c) * b + j});
    }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& s) {
    int c = cmp(a.cx, s.cx);
    if (c != 0) return c < 0;
    c = cmp(a.y, s.y);
    if (c != 0) return c < 0;
    return a.slot < s.slot;
  });
  cell_corners_.assign(slots.size(), -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i == 0 || slots[i].p != slots[i - 1].p) coords_.push_back(slots[i].p);
    cell_corners_[static_cast<std::size_t>(slots[i].slot)] = static_cast<int>(coords_.size()) - 1;
  }

  std::set<std::pair<int, int>> seen;
  for (int c = 0; c < cell_count_; ++c)
    for (auto [u, v] : cell_->base_edges) {
      int a = corner(c, u);
      int z = corner(c, v);
      auto e = std::make_pair(std::min(a, z), std::max(a, z));
      if (!seen.insert(e).second) throw CellValidationError("two copies share an edge");
      edges_.push_back(e);
    }

  for (const auto& p : cell_->boundary) {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), p);
    if (it == coords_.end() || *it != p) throw CellValidationError("boundary vertex missing from level graph");
    boundary_.push_back(static_cast<int>(it - coords_.begin()));
  }

  std::vector<int> deg(coords_.size(), 0);
  for (auto [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  adj_offsets_.assign(coords_.size() + 1, 0);
  for (std::size_t v = 0; v < coords_.size(); ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
  adj_targets_.assign(static_cast<std::size_t>(adj_offsets_.back()), 0);
  adj_edges_.assign(static_cast<std::size_t>(adj_offsets_.back()), 0);
  std::vector<int> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[static_cast<std::size_t>(e)];
    adj_targets_[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)])] = v;
    adj_edges_[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = e;
    adj_targets_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)])] = u;
    adj_edges_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = e;
  }
}

int ExplicitGraph::find_edge(int u, int v) const {
  for (int k = 0; k < degree(u); ++k)
    if (neighbor(u, k) == v) return neighbor_edge(u, k);
  return -1;
}

bool ExplicitGraph::connected() const {
  if (coords_.empty()) return true;
  std::vector<char> seen(coords_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k = 0; k < degree(v); ++k) {
      int w = neighbor(v, k);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == coords_.size();
}

GraphRef build_graph(const CellRef& cell, int level) {
  static std::mutex mu;
  static std::map<std::pair<const CellGraph*, int>, GraphRef> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(cell.get(), level);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const ExplicitGraph>(cell, level);
  cache.emplace(key, g);
  return g;
}

GraphRef sg_graph(int level) { return build_graph(sg3_cell(), level); }

// ---------------------------------------------------------------- forests

std::string class_name(ForestClass c) {
  static const char* names[] = {"T1", "T2", "T3", "S1", "S2", "S3", "R", "T", "none"};
  return names[static_cast<int>(c)];
}

ForestClass parse_class(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(ForestClass::None); ++i)
    if (class_name(static_cast<ForestClass>(i)) == name) return static_cast<ForestClass>(i);
  throw std::invalid_argument("unknown forest class '" + name + "'");
}

int component_count(ForestClass c) {
  switch (c) {
    case ForestClass::T1:
    case ForestClass::T2:
    case ForestClass::T3:
    case ForestClass::T:
      return 1;
    case ForestClass::S1:
    case ForestClass::S2:
    case ForestClass::S3:
      return 2;
    case ForestClass::R:
      return 3;
    default:
      return 0;
  }
}

bool is_tree_class(ForestClass c) { return component_count(c) == 1; }

std::vector<std::uint8_t> eta_edges(const CellGraph& cell, ForestClass c) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(cell.base_edge_count()), 0);
  const int b = cell.boundary_count();
  int ci = static_cast<int>(c);
  for (int e = 0; e < cell.base_edge_count(); ++e) {
    auto [u, v] = cell.base_edges[static_cast<std::size_t>(e)];
    bool on = false;
    if (b == 2) {
      on = c == ForestClass::T || is_tree_class(c);
    } else if (b == 3) {
      if (ci <= 2) on = u == ci || v == ci;
      else if (ci <= 5) on = u != ci - 3 && v != ci - 3;
      else if (c == ForestClass::R) on = false;
      else throw PreconditionError("class " + class_name(c) + " has no canonical level-0 forest");
    } else {
      throw PreconditionError("canonical level-0 forests need two or three boundary vertices");
    }
    mask[static_cast<std::size_t>(e)] = on ? 1 : 0;
  }
  return mask;
}

int SpanningForest::edge_count() const {
  return static_cast<int>(std::count(edges.begin(), edges.end(), std::uint8_t{1}));
}

std::vector<int> SpanningForest::edge_ids() const {
  std::vector<int> ids;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e]) ids.push_back(static_cast<int>(e));
  return ids;
}

std::vector<int> forest_components(const ExplicitGraph& g, const EdgeSet& edges) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e]) continue;
    auto [u, v] = g.edges()[e];
    int a = find(u);
    int z = find(v);
    if (a == z) return {};
    parent[static_cast<std::size_t>(a)] = z;
  }
  for (int v = 0; v < g.vertex_count(); ++v) parent[static_cast<std::size_t>(v)] = find(v);
  return parent;
}

// Whether the forest paths from corner i to every other corner stay inside
// the copies holding those corners.
static bool detour_free(const ExplicitGraph& g, const EdgeSet& edges, int i) {
  const CellGraph& cell = *g.cell();
  std::vector<int> parent_edge(static_cast<std::size_t>(g.vertex_count()), -2);
  std::vector<int> parent_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
  int root = g.boundary()[static_cast<std::size_t>(i)];
  std::vector<int> stack{root};
  parent_edge[static_cast<std::size_t>(root)] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k = 0; k < g.degree(v); ++k) {
      int e = g.neighbor_edge(v, k);
      int w = g.neighbor(v, k);
      if (!edges[static_cast<std::size_t>(e)] || parent_edge[static_cast<std::size_t>(w)] != -2) continue;
      parent_edge[static_cast<std::size_t>(w)] = e;
      parent_vertex[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  std::uint64_t per_copy = static_cast<std::uint64_t>(g.cell_count() / cell.alphabet());
  int ci = cell.corner_copy(i);
  for (int j = 0; j < g.boundary_count(); ++j) {
    if (j == i) continue;
    int cj = cell.corner_copy(j);
    for (int v = g.boundary()[static_cast<std::size_t>(j)]; v != root; v = parent_vertex[static_cast<std::size_t>(v)]) {
      int copy = static_cast<int>(static_cast<std::uint64_t>(g.edge_cell(parent_edge[static_cast<std::size_t>(v)])) / per_copy);
      if (copy != ci && copy != cj) return false;
    }
  }
  return true;
}

ForestClass classify(const ExplicitGraph& g, const EdgeSet& edges) {
  auto comp = forest_components(g, edges);
  if (comp.empty()) return ForestClass::None;
  const int b = g.boundary_count();
  std::vector<char> anchored(comp.size(), 0);
  for (int u : g.boundary()) anchored[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!anchored[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]) return ForestClass::None;
  std::vector<int> label(static_cast<std::size_t>(b));
  std::set<int> blocks;
  for (int j = 0; j < b; ++j) {
    label[static_cast<std::size_t>(j)] = comp[static_cast<std::size_t>(g.boundary()[static_cast<std::size_t>(j)])];
    blocks.insert(label[static_cast<std::size_t>(j)]);
  }
  const int k = static_cast<int>(blocks.size());
  if (b == 2) return k == 1 ? ForestClass::T : ForestClass::R;
  if (b != 3) {
    if (k == 1) return ForestClass::T;
    return k == b ? ForestClass::R : ForestClass::None;
  }
  if (k == 3) return ForestClass::R;
  if (k == 2) {
    for (int i = 0; i < 3; ++i) {
      int a = label[static_cast<std::size_t>((i + 1) % 3)];
      int z = label[static_cast<std::size_t>((i + 2) % 3)];
      if (a == z) return static_cast<ForestClass>(3 + i);
    }
  }
  if (g.level() == 0) {
    for (int i = 0; i < 3; ++i) {
      auto eta = eta_edges(*g.cell(), static_cast<ForestClass>(i));
      if (std::equal(eta.begin(), eta.end(), edges.begin())) return static_cast<ForestClass>(i);
    }
    return ForestClass::T;
  }
  int found = -1;
  for (int i = 0; i < 3; ++i) {
    if (g.cell()->corner_copy(i) < 0) return ForestClass::T;
    if (detour_free(g, edges, i)) {
      if (found >= 0) return ForestClass::T;
      found = i;
    }
  }
  return found >= 0 ? static_cast<ForestClass>(found) : ForestClass::T;
}

SpanningForest make_forest(const GraphRef& host, EdgeSet edges) {
  if (static_cast<int>(edges.size()) != host->edge_count()) throw PreconditionError("edge set size mismatch");
  SpanningForest f{host, std::move(edges), ForestClass::None};
  f.cls = classify(*host, f.edges);
  return f;
}

SpanningForest restrict(const SpanningForest& forest, const Word& w) {
  const ExplicitGraph& g = *forest.host;
  if (w.empty()) return forest;
  if (w.size() > g.level()) throw PreconditionError("word longer than the forest level");
  const int m = g.cell()->alphabet();
  for (int l : w.letters())
    if (l < 0 || l >= m) throw PreconditionError("word letter outside the alphabet");
  GraphRef small = build_graph(g.cell(), g.level() - w.size());
  std::size_t span = static_cast<std::size_t>(small->edge_count());
  std::size_t start = static_cast<std::size_t>(w.index(m)) * span;
  EdgeSet edges(forest.edges.begin() + static_cast<long>(start), forest.edges.begin() + static_cast<long>(start + span));
  return make_forest(small, std::move(edges));
}

static const std::vector<ForestClass>& level1_lookup(const CellRef& cell) {
  static std::mutex mu;
  static std::map<const CellGraph*, std::vector<ForestClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cell.get());
  if (it != cache.end()) return it->second;
  GraphRef g1 = build_graph(cell, 1);
  int bits = g1->edge_count();
  if (bits > 24) throw PreconditionError("cell too large for level-1 lookup");
  std::vector<ForestClass> table(std::size_t{1} << bits);
  EdgeSet edges(static_cast<std::size_t>(bits));
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    for (int e = 0; e < bits; ++e) edges[static_cast<std::size_t>(e)] = (mask >> e) & 1U;
    table[mask] = classify(*g1, edges);
  }
  return cache.emplace(cell.get(), std::move(table)).first->second;
}

SpanningForest trace(const SpanningForest& forest) {
  const ExplicitGraph& g = *forest.host;
  if (g.level() < 1) throw PreconditionError("trace needs a forest of level at least 1");
  const CellRef& cell = g.cell();
  const auto& lookup = level1_lookup(cell);
  GraphRef coarse = build_graph(cell, g.level() - 1);
  const int e0 = cell->base_edge_count();
  const std::size_t span = static_cast<std::size_t>(cell->alphabet() * e0);
  std::vector<std::vector<std::uint8_t>> eta(7);
  for (int c = 0; c < 7; ++c) {
    if (cell->boundary_count() == 2 && c != static_cast<int>(ForestClass::R)) continue;
    eta[static_cast<std::size_t>(c)] = eta_edges(*cell, static_cast<ForestClass>(c));
  }
  if (cell->boundary_count() == 2) eta[0] = eta_edges(*cell, ForestClass::T);
  EdgeSet out(static_cast<std::size_t>(coarse->edge_count()), 0);
  for (int c = 0; c < coarse->cell_count(); ++c) {
    std::size_t mask = 0;
    for (std::size_t k = 0; k < span; ++k)
      if (forest.edges[static_cast<std::size_t>(c) * span + k]) mask |= std::size_t{1} << k;
    ForestClass part = lookup[mask];
    if (part == ForestClass::None) throw InvalidForestError("a 1-part restriction is not in Q_1");
    int idx = static_cast<int>(part);
    if (part == ForestClass::T) {
      if (cell->boundary_count() != 2) throw InvalidForestError("tree part without a subclass cannot be traced");
      idx = 0;
    }
    const auto& m = eta[static_cast<std::size_t>(idx)];
    for (int e = 0; e < e0; ++e)
      if (m[static_cast<std::size_t>(e)]) out[static_cast<std::size_t>(coarse->edge_id(c, e))] = 1;
  }
  return make_forest(coarse, std::move(out));
}

}  // namespace gasket

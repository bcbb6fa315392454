#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "gasket/analysis.hpp"
#include "gasket/enumeration.hpp"
#include "gasket/errors.hpp"
#include "gasket/exact.hpp"
#include "gasket/sampler.hpp"
#include "gasket/validation.hpp"
#include "gasket/walk.hpp"
#include "render.hpp"

namespace gasket::cli {

using nlohmann::json;

json to_json(const RunConfig& c) {
  return {{"command", c.command}, {"level", c.level}, {"class", c.cls},       {"seed", c.seed},  {"samples", c.samples},
          {"out", c.out},         {"format", c.format}, {"cell", c.cell}, {"strict", c.strict}};
}

json to_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}, {"approx", to_double(r)}};
}

json to_json(const QuadNum& q) {
  return {{"p", to_json(q.p())}, {"q", to_json(q.q())}, {"radicand", q.radicand().get_str()}, {"approx", q.to_double()}};
}

json to_json(const AlgebraicValue& v) {
  json j = {{"text", v.to_string()}, {"approx", static_cast<double>(v.approx())}};
  if (v.exact) {
    j["value"] = to_json(v.value);
  } else {
    j["interval"] = {to_json(v.lo), to_json(v.hi)};
    j["polynomial"] = v.poly.to_string();
  }
  return j;
}

namespace {

struct Extra {
  int group = 0;
  int bins = 40;
  std::string part = "tree";
  std::string tracked;
  std::vector<int> only;
  bool path = false;
};

// Output produced by one command: a JSON document, CSV text or SVG text.
struct Output {
  json doc;
  std::string text;
};

template <class T>
json to_json_vector(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json_matrix(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json_vector(m.row(i)));
  return rows;
}

std::string csv_rational(const Rational& r) { return r.get_num().get_str() + "," + r.get_den().get_str() + "," + std::to_string(to_double(r)); }

CellRef resolve_cell(const RunConfig& c) { return c.cell.empty() ? default_cell() : load_cell(c.cell); }

bool is_builtin(const CellRef& cell) {
  CellRef sg = sg3_cell();
  return cell.get() == sg.get() || cell_to_json(*cell) == cell_to_json(*sg);
}

void require_builtin(const RunConfig& c) {
  if (!is_builtin(resolve_cell(c)))
    throw PreconditionError("'" + c.command + "' uses the branching tables of the built-in gasket cell only");
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw PreconditionError("format '" + c.format + "' is not available for '" + c.command + "'");
}

ForestClass class_or(const RunConfig& c, ForestClass fallback) { return c.cls.empty() ? fallback : parse_class(c.cls); }

RngStream sample_stream(const RunConfig& c, int i) { return RngStream(c.seed).child(static_cast<std::uint64_t>(i)); }

json vertex_json(const ExplicitGraph& g, int v) {
  const Point& p = g.coords()[static_cast<std::size_t>(v)];
  return {{"id", v}, {"x", to_string(p.x)}, {"y", to_string(p.y)}, {"cx", to_double(p.cartesian_x())}, {"cy", p.cartesian_y()}};
}

json edges_json(const ExplicitGraph& g, const std::vector<int>& edge_ids) {
  json edges = json::array();
  std::map<int, int> used;
  for (int e : edge_ids) {
    auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
    edges.push_back({a, b});
    used[a];
    used[b];
  }
  json vertices = json::array();
  for (const auto& [v, unused] : used) vertices.push_back(vertex_json(g, v));
  return {{"edges", edges}, {"vertices", vertices}};
}

std::string edges_csv(const ExplicitGraph& g, const std::vector<int>& edge_ids, int sample) {
  std::string out;
  for (int e : edge_ids) {
    auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
    const Point& p = g.coords()[static_cast<std::size_t>(a)];
    const Point& q = g.coords()[static_cast<std::size_t>(b)];
    out += std::to_string(sample) + "," + std::to_string(e) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
           to_string(p.x) + "," + to_string(p.y) + "," + to_string(q.x) + "," + to_string(q.y) + "\n";
  }
  return out;
}

const char* kEdgesCsvHeader = "sample,edge,u,v,u_x,u_y,v_x,v_y\n";

// ------------------------------------------------------------- commands

Output cmd_count(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  CellRef cell = resolve_cell(c);
  Output o;
  if (!is_builtin(cell)) {
    GraphRef g = build_graph(cell, c.level);
    Integer trees = matrix_tree_count(*g);
    Census census = enumerate_cell_forests(cell);
    json sizes;
    for (const auto& [cls, members] : census.by_class) sizes[class_name(cls)] = members.size();
    o.doc = {{"level", c.level}, {"spanning_trees", trees.get_str()}, {"level1_class_sizes", sizes}};
    o.text = "level,spanning_trees\n" + std::to_string(c.level) + "," + trees.get_str() + "\n";
    return o;
  }
  ForestCounts f = count_forests(c.level);
  bool closed = f == closed_form_counts(c.level);
  o.doc = {{"level", c.level},
           {"tau", f.tau.get_str()},
           {"sigma", f.sigma.get_str()},
           {"rho", f.rho.get_str()},
           {"spanning_trees", Integer(3 * f.tau).get_str()},
           {"closed_form_agrees", closed}};
  o.text = "level,tau,sigma,rho,spanning_trees\n";
  for (int n = 0; n <= c.level; ++n) {
    ForestCounts g = count_forests(n);
    o.text += std::to_string(n) + "," + g.tau.get_str() + "," + g.sigma.get_str() + "," + g.rho.get_str() + "," +
              Integer(3 * g.tau).get_str() + "\n";
  }
  return o;
}

json matrix_report(const Matrix<Rational>& m) {
  json j = {{"matrix", to_json_matrix(m)}};
  json spec = json::array();
  for (const auto& [value, mult] : real_spectrum(m)) spec.push_back({{"value", to_json(value)}, {"multiplicity", mult}});
  j["spectrum"] = spec;
  try {
    PerronData p = perron(m);
    j["dominant"] = to_json(p.value);
    j["left"] = to_json_vector(p.left);
    j["right"] = to_json_vector(p.right);
  } catch (const PreconditionError& e) {
    j["dominant"] = to_json(dominant_eigenvalue(m));
    j["note"] = e.what();
  }
  return j;
}

Output cmd_eigen(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  CellRef cell = resolve_cell(c);
  std::vector<std::pair<std::string, Matrix<Rational>>> mats;
  Output o;
  if (is_builtin(cell)) {
    mats = {{"forest", forest_mean_matrix()},     {"path", path_mean_matrix()},   {"component", component_mean_matrix()},
            {"interface", interface_mean_matrix()}, {"degree", degree_matrix()}, {"length", length_mean_matrix()}};
  } else {
    Census census = enumerate_cell_forests(cell);
    mats = {{"length", generic_length_matrix(census)}};
    UniformityReport u = check_uniformity(census);
    o.doc["uniformity"] = {{"pass", u.pass}, {"detail", u.detail}};
  }
  o.text = "matrix,row,col,num,den,approx\n";
  for (const auto& [name, m] : mats) {
    o.doc["matrices"][name] = matrix_report(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        o.text += name + "," + std::to_string(i) + "," + std::to_string(j) + "," + csv_rational(m(i, j)) + "\n";
  }
  return o;
}

Output cmd_degree(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  require_builtin(c);
  DegreeVectors d = degree_vectors(c.level);
  DegreeLimits lim = degree_limit_constants();
  Output o;
  o.text = "h,class,num,den,approx\n";
  json laws;
  for (std::size_t h = 0; h < d.size(); ++h)
    for (int x = 0; x < kForestTypes; ++x) {
      const Rational& p = d[h][static_cast<std::size_t>(x)];
      laws[forest_type_name(x)][std::to_string(h)] = to_json(p);
      o.text += std::to_string(h) + "," + forest_type_name(x) + "," + csv_rational(p) + "\n";
    }
  json w;
  json prop;
  for (int h = 1; h <= 4; ++h) {
    w[std::to_string(h)] = to_json(lim.w[static_cast<std::size_t>(h)]);
    prop[std::to_string(h)] = to_json(lim.proportion[static_cast<std::size_t>(h)]);
  }
  o.doc = {{"level", c.level},
           {"corner_degree", laws},
           {"midpoint_w", w},
           {"midpoint_proportion", prop},
           {"corner_limit", {{"1", to_json(lim.corner_degree1)}, {"2", to_json(lim.corner_degree2)}}}};
  return o;
}

Poly length_law_for(const RunConfig& c, const Extra& x) {
  if (x.part == "tree" || x.part == "separated") {
    LengthPgfs p = length_pgf(c.level);
    return x.part == "tree" ? p.tree : p.separated;
  }
  auto by = length_pgf_by_class(c.level);
  if (x.part == "nonthrough") return by[0];
  if (x.part == "through") return by[1];
  throw PreconditionError("part must be tree, separated, nonthrough or through");
}

Output cmd_length_dist(const RunConfig& c, const Extra& x) {
  require_format(c, {"json", "csv"});
  require_builtin(c);
  Poly law = length_law_for(c, x);
  Output o;
  json coeffs = json::array();
  o.text = "length,num,den,approx\n";
  for (std::size_t k = 0; k < law.size(); ++k) {
    Rational p = law.coeff(k);
    if (p == 0) continue;
    coeffs.push_back({{"length", k}, {"probability", to_json(p)}});
    o.text += std::to_string(k) + "," + csv_rational(p) + "\n";
  }
  o.doc = {{"level", c.level}, {"part", x.part}, {"mean", to_json(law.mean())}, {"distribution", coeffs}};
  if (x.part == "tree" || x.part == "separated")
    o.doc["mean_closed_form"] = to_json(expected_length(c.level)[x.part == "tree" ? 0 : 1]);
  return o;
}

Output cmd_theta(const RunConfig& c, const Extra& x) {
  require_format(c, {"json", "csv"});
  require_builtin(c);
  DistTable t = theta_distribution(c.level, x.group);
  const long double scale = t.scale();
  const auto& probs = t.exact_probs();
  double hi = static_cast<double>(static_cast<long double>(probs.rbegin()->first.at(0)) * scale);
  int bins = std::max(1, x.bins);
  double width = hi / bins;
  std::vector<double> mass(static_cast<std::size_t>(bins), 0.0);
  json table = json::array();
  for (const auto& [key, p] : probs) {
    double v = static_cast<double>(static_cast<long double>(key.at(0)) * scale);
    auto b = std::min<std::size_t>(static_cast<std::size_t>(v / width), static_cast<std::size_t>(bins - 1));
    mass[b] += to_double(p);
    table.push_back({{"length", key.at(0)}, {"value", v}, {"probability", to_json(p)}});
  }
  Output o;
  json hist = json::array();
  o.text = "bin_lo,bin_hi,density\n";
  for (int b = 0; b < bins; ++b) {
    double lo = b * width;
    double density = mass[static_cast<std::size_t>(b)] / width;
    hist.push_back({{"lo", lo}, {"hi", lo + width}, {"density", density}});
    std::ostringstream line;
    line.precision(9);
    line << lo << "," << lo + width << "," << density << "\n";
    o.text += line.str();
  }
  TailFit fit = tail_diagnostic(t);
  o.doc = {{"level", c.level},
           {"group", x.group},
           {"mean", static_cast<double>(t.mean())},
           {"table", table},
           {"histogram", hist},
           {"tail", {{"upper_slope", fit.upper_slope},
                     {"upper_reference", fit.upper_reference},
                     {"lower_slope", fit.lower_slope},
                     {"lower_reference", fit.lower_reference},
                     {"survival_monotone", fit.survival_monotone},
                     {"warning", fit.warning}}}};
  return o;
}

// Forest-like commands share the output shape.
template <class Make>
Output forest_output(const RunConfig& c, Make make) {
  require_format(c, {"json", "csv", "svg"});
  Output o;
  json samples = json::array();
  o.text = kEdgesCsvHeader;
  for (int i = 0; i < std::max(1, c.samples); ++i) {
    auto [forest, extra] = make(sample_stream(c, i));
    if (c.format == "svg") {
      o.text = render_forest_svg(forest);
      return o;
    }
    const ExplicitGraph& g = *forest.host;
    json s = edges_json(g, forest.edge_ids());
    s["class"] = class_name(forest.cls);
    s["edge_count"] = forest.edge_count();
    s.update(extra);
    samples.push_back(s);
    o.text += edges_csv(g, forest.edge_ids(), i);
  }
  o.doc = {{"level", c.level}, {"samples", samples}};
  return o;
}

json type_counts_json(const TypedTree& t) {
  json counts;
  auto tc = t.type_counts();
  const auto& last = tc.back();
  for (std::size_t x = 0; x < last.size(); ++x) counts[t.table->type_names[x]] = last[x];
  return counts;
}

Output cmd_sample_tree(const RunConfig& c) {
  require_builtin(c);
  return forest_output(c, [&](const RngStream& rng) {
    ForestSample s = sample_spanning_tree(c.level, rng);
    return std::make_pair(s.forest, json{{"leaf_types", type_counts_json(s.tree)}});
  });
}

Output cmd_sample_forest(const RunConfig& c) {
  require_builtin(c);
  ForestClass cls = class_or(c, ForestClass::T);
  return forest_output(c, [&](const RngStream& rng) {
    ForestSample s = sample_forest(cls, c.level, rng);
    return std::make_pair(s.forest, json{{"leaf_types", type_counts_json(s.tree)}});
  });
}

Output cmd_wilson(const RunConfig& c, const Extra& x) {
  CellRef cell = resolve_cell(c);
  GraphRef g = build_graph(cell, c.level);
  if (!x.path)
    return forest_output(c, [&](const RngStream& rng) {
      Rng r = rng.sequential(RngStream::kWalk);
      return std::make_pair(wilson_ust(g, r), json::object());
    });
  require_format(c, {"json", "csv", "svg"});
  Output o;
  json samples = json::array();
  o.text = "sample,step,vertex,x,y\n";
  for (int i = 0; i < std::max(1, c.samples); ++i) {
    Rng r = sample_stream(c, i).sequential(RngStream::kWalk);
    WalkRecord w = lerw_between(g, g->boundary()[0], g->boundary()[1], r);
    if (c.format == "svg") {
      o.text = render_path_svg(*g, w.vertices);
      return o;
    }
    json verts = json::array();
    for (std::size_t k = 0; k < w.vertices.size(); ++k) {
      verts.push_back(vertex_json(*g, w.vertices[k]));
      const Point& p = g->coords()[static_cast<std::size_t>(w.vertices[k])];
      o.text += std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(w.vertices[k]) + "," + to_string(p.x) +
                "," + to_string(p.y) + "\n";
    }
    samples.push_back({{"length", w.length()}, {"path", verts}});
  }
  o.doc = {{"level", c.level}, {"samples", samples}};
  return o;
}

Output cmd_sample_lerw(const RunConfig& c) {
  require_builtin(c);
  require_format(c, {"json", "csv", "svg"});
  Output o;
  json samples = json::array();
  o.text = "sample,step,vertex,x,y\n";
  for (int i = 0; i < std::max(1, c.samples); ++i) {
    PathSample s = sample_lerw(c.level, sample_stream(c, i));
    if (c.format == "svg") {
      o.text = render_path_svg(*s.host, s.vertices);
      return o;
    }
    json verts = json::array();
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      verts.push_back(vertex_json(*s.host, s.vertices[k]));
      const Point& p = s.host->coords()[static_cast<std::size_t>(s.vertices[k])];
      o.text += std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(s.vertices[k]) + "," + to_string(p.x) +
                "," + to_string(p.y) + "\n";
    }
    samples.push_back({{"length", s.length()},
                       {"parts", {{"single", s.weight_counts[0]}, {"through", s.weight_counts[1]}, {"separated", s.weight_counts[2]}}},
                       {"path", verts}});
  }
  o.doc = {{"level", c.level}, {"samples", samples}};
  return o;
}

unsigned parse_tracked(const std::string& text) {
  unsigned bits = 0;
  for (char ch : text) {
    if (ch < '1' || ch > '3') throw PreconditionError("tracked corners are digits 1..3, e.g. 23");
    bits |= 1U << (ch - '1');
  }
  return bits;
}

Output cmd_component(const RunConfig& c, const Extra& x) {
  require_builtin(c);
  require_format(c, {"json", "csv", "svg"});
  ForestClass cls = class_or(c, ForestClass::S1);
  unsigned tracked = parse_tracked(x.tracked.empty() ? "23" : x.tracked);
  const bool materialize = c.level <= kMaxTreeLevel;
  if (!materialize && c.format != "json") throw PreconditionError("edge export needs level <= " + std::to_string(kMaxTreeLevel));
  Output o;
  json samples = json::array();
  o.text = kEdgesCsvHeader;
  for (int i = 0; i < std::max(1, c.samples); ++i) {
    ComponentSample s = sample_component(cls, tracked, c.level, sample_stream(c, i), materialize);
    if (c.format == "svg") {
      o.text = render_edges_svg(*build_graph(sg3_cell(), c.level), s.edges);
      return o;
    }
    json j = {{"edge_count", s.edge_count}, {"edge_fraction", static_cast<double>(s.edge_count) / std::pow(3.0, c.level)}};
    json w = json::array();
    for (auto v : s.weight_counts) w.push_back(v);
    j["class_counts"] = w;
    if (materialize) {
      GraphRef g = build_graph(sg3_cell(), c.level);
      j.update(edges_json(*g, s.edges));
      o.text += edges_csv(*g, s.edges, i);
    }
    samples.push_back(j);
  }
  o.doc = {{"level", c.level}, {"tracked", x.tracked.empty() ? "23" : x.tracked}, {"samples", samples}};
  return o;
}

Output cmd_interface(const RunConfig& c) {
  require_builtin(c);
  require_format(c, {"json", "csv", "svg"});
  ForestClass cls = class_or(c, ForestClass::S1);
  Output o;
  json samples = json::array();
  o.text = "sample,cell\n";
  for (int i = 0; i < std::max(1, c.samples); ++i) {
    InterfaceSample s = sample_interface(cls, c.level, sample_stream(c, i));
    if (c.format == "svg") {
      o.text = render_cells_svg(*sg3_cell(), s.cells);
      return o;
    }
    json cells = json::array();
    for (const auto& w : s.cells) {
      cells.push_back(w.to_string());
      o.text += std::to_string(i) + "," + w.to_string() + "\n";
    }
    samples.push_back({{"class_counts", {s.class_counts[0], s.class_counts[1], s.class_counts[2]}},
                       {"cell_count", s.cells.size()},
                       {"cells", cells}});
  }
  o.doc = {{"level", c.level}, {"samples", samples}};
  return o;
}

Output cmd_constants(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  require_builtin(c);
  const Constants& k = constants();
  Output o;
  json a = json::array();
  for (const auto& v : k.a) a.push_back(to_json(v));
  o.doc = {{"alpha_bar", to_json(k.alpha_bar)},
           {"alpha_check", to_json(k.alpha_check)},
           {"a", a},
           {"v_L", to_json_vector(k.v_l)},
           {"v_hat_L", to_json_vector(k.v_hat_l)},
           {"v_hat_R", to_json_vector(k.v_hat_r)},
           {"v_bar_L", to_json_vector(k.v_bar_l)},
           {"v_bar_R", to_json_vector(k.v_bar_r)},
           {"length_scale", to_json(k.length_scale)},
           {"resistance_scale", to_json(k.resistance_scale)},
           {"gamma_l", static_cast<double>(k.gamma_l)},
           {"gamma_r", static_cast<double>(k.gamma_r)},
           {"dim_H_path", static_cast<double>(k.dim_path)},
           {"dim_interface_bound", static_cast<double>(k.dim_interface_bound)},
           {"upper_tail_exponent", static_cast<double>(k.upper_tail_exponent)},
           {"lower_tail_exponent", static_cast<double>(k.lower_tail_exponent)}};
  std::ostringstream csv;
  csv.precision(12);
  csv << "name,value\n";
  csv << "alpha_bar," << k.alpha_bar.to_double() << "\nalpha_check," << k.alpha_check.to_double() << "\n";
  for (std::size_t i = 0; i < k.a.size(); ++i) csv << "a" << i + 1 << "," << k.a[i].to_double() << "\n";
  csv << "length_scale," << k.length_scale.to_double() << "\ngamma_l," << static_cast<double>(k.gamma_l) << "\ngamma_r,"
      << static_cast<double>(k.gamma_r) << "\ndim_H_path," << static_cast<double>(k.dim_path) << "\ndim_interface_bound,"
      << static_cast<double>(k.dim_interface_bound) << "\nupper_tail_exponent," << static_cast<double>(k.upper_tail_exponent)
      << "\nlower_tail_exponent," << static_cast<double>(k.lower_tail_exponent) << "\n";
  o.text = csv.str();
  return o;
}

Output cmd_validate(const RunConfig& c, const Extra& x, int& exit_code) {
  require_format(c, {"json", "csv"});
  ValidationConfig vc;
  vc.seed = c.seed;
  vc.strict = c.strict;
  vc.only = x.only;
  auto reports = run_validation_suite(vc, [&](const ValidationReport& r) { std::cerr << format_report_line(r, c.strict) << "\n"; });
  exit_code = suite_passed(reports, c.strict) ? kExitOk : kExitValidation;
  Output o;
  o.doc = json::parse(reports_to_json(reports, vc));
  o.text = "criterion,name,hard,pass,statistic,threshold,samples,seconds\n";
  for (const auto& r : reports) {
    std::ostringstream line;
    line.precision(9);
    line << r.criterion << ",\"" << r.name << "\"," << r.hard << "," << r.pass << "," << r.statistic << "," << r.threshold
         << "," << r.samples << "," << r.seconds << "\n";
    o.text += line.str();
  }
  return o;
}

void emit(const RunConfig& c, Output& o) {
  std::string body;
  if (c.format == "json") {
    o.doc["config"] = to_json(c);
    body = o.doc.dump(2) + "\n";
  } else {
    body = o.text;
  }
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + c.out);
  f << body;
}

}  // namespace

int cli_dispatch(int argc, char** argv) {
  CLI::App app{"Uniform spanning trees and loop-erased walks on gasket graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  Extra extra;

  struct Spec {
    const char* name;
    const char* help;
  };
  const std::vector<Spec> specs = {
      {"count", "forest class sizes and spanning tree counts"},
      {"eigen", "mean matrices and their eigen-data"},
      {"degree", "corner degree laws and midpoint degree limits"},
      {"length-dist", "exact law of the corner-to-corner path length"},
      {"theta", "rescaled path length: table, histogram, tail fit"},
      {"sample-tree", "uniform spanning tree from the branching sampler"},
      {"sample-forest", "uniform forest of a class from the branching sampler"},
      {"sample-lerw", "loop-erased walk between u1 and u2 from the branching sampler"},
      {"component", "component of tracked corners in a uniform forest"},
      {"interface", "cells where two forest components meet"},
      {"wilson", "uniform spanning tree (or loop-erased walk with --path) by Wilson's algorithm"},
      {"validate", "acceptance checks"},
      {"constants", "exact eigenvalues, eigenvectors and scaling exponents"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--level", cfg.level, "graph level n")->capture_default_str()->check(CLI::Range(0, 40));
    sub->add_option("--samples", cfg.samples, "number of samples")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--cell", cfg.cell, "cell name or JSON file (default: $GASKET_CELL, then the gasket)");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "json, csv or svg")->capture_default_str()->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--class", cfg.cls, "forest class: T, T1, T2, T3, S1, S2, S3 or R");
    sub->add_flag("--strict", cfg.strict, "soft checks also decide the exit code");
    subs[s.name] = sub;
  }
  subs["theta"]->add_option("--group", extra.group, "0 tree, 1 non-through, 2 through, 3 separated")->check(CLI::Range(0, 3));
  subs["theta"]->add_option("--bins", extra.bins, "histogram bins")->check(CLI::PositiveNumber);
  subs["length-dist"]->add_option("--part", extra.part, "tree, separated, nonthrough or through");
  subs["component"]->add_option("--tracked", extra.tracked, "tracked corners as digits, default 23");
  subs["validate"]->add_option("--only", extra.only, "criterion numbers to run")->check(CLI::Range(1, kCriteria));
  subs["wilson"]->add_flag("--path", extra.path, "loop-erased walk from u1 to u2 instead of a tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cfg.command = name;
  if (cfg.format == "svg" && cfg.samples > 1) std::cerr << "svg output renders the first sample only\n";

  try {
    int exit_code = kExitOk;
    Output o;
    const std::string& cmd = cfg.command;
    if (cmd == "count") o = cmd_count(cfg);
    else if (cmd == "eigen") o = cmd_eigen(cfg);
    else if (cmd == "degree") o = cmd_degree(cfg);
    else if (cmd == "length-dist") o = cmd_length_dist(cfg, extra);
    else if (cmd == "theta") o = cmd_theta(cfg, extra);
    else if (cmd == "sample-tree") o = cmd_sample_tree(cfg);
    else if (cmd == "sample-forest") o = cmd_sample_forest(cfg);
    else if (cmd == "sample-lerw") o = cmd_sample_lerw(cfg);
    else if (cmd == "component") o = cmd_component(cfg, extra);
    else if (cmd == "interface") o = cmd_interface(cfg);
    else if (cmd == "wilson") o = cmd_wilson(cfg, extra);
    else if (cmd == "validate") o = cmd_validate(cfg, extra, exit_code);
    else if (cmd == "constants") o = cmd_constants(cfg);
    emit(cfg, o);
    return exit_code;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CellValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace gasket::cli

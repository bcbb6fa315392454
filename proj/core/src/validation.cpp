#include "gasket/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include "gasket/analysis.hpp"
#include "gasket/eigen.hpp"
#include "gasket/enumeration.hpp"
#include "gasket/errors.hpp"
#include "gasket/exact.hpp"
#include "gasket/reference.hpp"
#include "gasket/sampler.hpp"
#include "gasket/walk.hpp"

namespace gasket {

namespace {

using Clock = std::chrono::steady_clock;
using Float50 = boost::multiprecision::cpp_bin_float_50;

ValidationReport make_report(int criterion, const std::string& name, bool hard) {
  ValidationReport r;
  r.criterion = criterion;
  r.name = name;
  r.hard = hard;
  return r;
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// Equality in the real field: p + q sqrt(d) with possibly different radicands.
bool same_value(const QuadNum& a, const QuadNum& b) {
  if (a.p() != b.p() || sgn(a.q()) != sgn(b.q())) return false;
  return a.q() * a.q() * Rational(a.radicand()) == b.q() * b.q() * Rational(b.radicand());
}

bool same_vector(const std::vector<QuadNum>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_value(a[i], QuadNum(b[i]))) return false;
  return true;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

class Notes {
 public:
  void fail(const std::string& what) {
    ok_ = false;
    add(what);
  }
  void add(const std::string& what) {
    if (!text_.empty()) text_ += "; ";
    text_ += what;
  }
  void check(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  bool ok() const { return ok_; }
  const std::string& text() const { return text_; }

 private:
  bool ok_ = true;
  std::string text_;
};

Key mask_key(std::uint32_t mask, int edges) {
  Key k;
  for (int e = 0; e < edges; ++e)
    if ((mask >> e) & 1U) k.push_back(e);
  return k;
}

Key forest_key(const SpanningForest& f) {
  auto ids = f.edge_ids();
  return Key(ids.begin(), ids.end());
}

DistTable exact_length_law(const Poly& law) {
  std::map<Key, Rational> probs;
  for (std::size_t k = 0; k < law.size(); ++k) {
    Rational c = law.coeff(k);
    if (c != 0) probs.emplace(length_key(static_cast<std::int64_t>(k)), c);
  }
  return DistTable::exact_law(std::move(probs));
}

// ------------------------------------------------------------------ 1

ValidationReport exact_counts(const ValidationConfig& cfg) {
  ValidationReport r = make_report(1, "exact forest counts", true);
  auto start = Clock::now();
  Notes notes;
  for (int n = 0; n <= cfg.count_max_level; ++n)
    notes.check(count_forests(n) == closed_form_counts(n), "recursion differs from closed form at n=" + std::to_string(n));
  ForestCounts c1 = count_forests(1);
  notes.check(c1.tau == 18 && c1.sigma == 30 && c1.rho == 50, "level-1 counts are not (18, 30, 50)");
  const Census& census = sg_census();
  std::size_t census_trees = 0;
  for (const auto& [cls, members] : census.by_class)
    if (is_tree_class(cls)) census_trees += members.size();
  Integer closed = spanning_tree_count(1);
  Integer det = matrix_tree_count(*sg_graph(1));
  notes.check(closed == reference::kSpanningTreesLevel1, "closed-form tree count " + to_string(closed));
  notes.check(census_trees == reference::kSpanningTreesLevel1, "census tree count " + std::to_string(census_trees));
  notes.check(det == reference::kSpanningTreesLevel1, "matrix-tree count " + to_string(det));
  r.seconds = elapsed(start);
  r.statistic = r.seconds;
  r.threshold = cfg.count_seconds;
  notes.check(r.seconds < cfg.count_seconds, "runtime over budget");
  r.pass = notes.ok();
  r.detail = notes.ok() ? "n<=" + std::to_string(cfg.count_max_level) + " exact; 54 trees three ways" : notes.text();
  return r;
}

// ------------------------------------------------------------------ 2

ValidationReport census_uniformity(const ValidationConfig& cfg) {
  ValidationReport r = make_report(2, "census and trace uniformity", true);
  auto start = Clock::now();
  Notes notes;
  Census census = enumerate_cell_forests(sg3_cell());
  notes.check(census.subsets_examined == 512, "examined " + std::to_string(census.subsets_examined) + " subsets");
  for (int c = 0; c < kForestTypes; ++c) {
    auto size = census.class_size(static_cast<ForestClass>(c));
    notes.check(size == static_cast<std::size_t>(reference::kClassSizes[static_cast<std::size_t>(c)]),
                "class " + forest_type_name(c) + " has " + std::to_string(size));
  }
  // Trace every level-1 forest and count preimages of each level-0 forest.
  GraphRef g1 = census.g1;
  std::map<std::pair<int, Key>, std::uint64_t> preimages;
  for (const auto& e : census.entries) {
    EdgeSet edges(static_cast<std::size_t>(g1->edge_count()), 0);
    for (int k = 0; k < g1->edge_count(); ++k) edges[static_cast<std::size_t>(k)] = (e.mask >> k) & 1U;
    SpanningForest t = trace(make_forest(g1, edges));
    notes.check(t.cls == e.cls, "trace changed the class of a forest");
    ++preimages[{static_cast<int>(e.cls), forest_key(t)}];
  }
  for (const auto& [key, count] : preimages) {
    auto expected = static_cast<std::uint64_t>(reference::kClassSizes[static_cast<std::size_t>(key.first)]);
    notes.check(count == expected, "level-0 forest of class " + forest_type_name(key.first) + " has " +
                                       std::to_string(count) + " preimages");
  }
  notes.check(preimages.size() == kForestTypes, "trace images are not the seven level-0 forests");
  notes.check(check_uniformity(census).pass, "uniformity report failed");
  r.seconds = elapsed(start);
  r.statistic = r.seconds;
  r.threshold = cfg.census_seconds;
  notes.check(r.seconds < cfg.census_seconds, "runtime over budget");
  r.samples = census.subsets_examined;
  r.pass = notes.ok();
  r.detail = notes.ok() ? "sizes (18,18,18,30,30,30,50); preimages constant per class" : notes.text();
  return r;
}

// ------------------------------------------------------------------ 3

// Child types by suffix for one outcome, summed over equal tuples.
std::map<std::vector<int>, Rational> row_by_suffix(const std::vector<Outcome>& row) {
  std::map<std::vector<int>, Rational> out;
  for (const auto& o : row) {
    std::vector<Child> kids = o.children;
    std::sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) { return a.suffix < b.suffix; });
    std::vector<int> types;
    for (const auto& c : kids) types.push_back(c.type);
    out[types] += o.prob;
  }
  return out;
}

ValidationReport derived_tables(const ValidationConfig& cfg) {
  ValidationReport r = make_report(3, "derived tables equal reference tables", true);
  auto start = Clock::now();
  Notes notes;

  notes.check(forest_mean_matrix() == reference::forest_mean(), "forest mean matrix");
  notes.check(path_mean_matrix() == reference::path_mean(), "path mean matrix");
  notes.check(component_mean_matrix() == reference::component_mean(), "component mean matrix");
  notes.check(interface_mean_matrix() == reference::interface_mean(), "interface mean matrix");
  notes.check(degree_matrix() == reference::degree(), "degree matrix");

  PerronData forest = perron(forest_mean_matrix());
  notes.check(same_value(forest.value.value, QuadNum(3)), "forest eigenvalue is not 3");
  notes.check(same_vector(forest.left, reference::forest_left()), "forest left eigenvector");

  PerronData path = perron(path_mean_matrix());
  notes.check(same_value(path.value.value, reference::alpha_bar()), "path eigenvalue " + path.value.to_string());
  auto a = reference::a();
  for (std::size_t i = 0; i < path.left.size(); ++i) {
    const QuadNum& want = i < 9 ? a[3] : a[4];
    notes.check(same_value(path.left[i], want), "path left eigenvector entry " + std::to_string(i));
  }
  const Constants& k = constants();
  for (std::size_t i = 0; i < 5; ++i)
    notes.check(same_value(k.a[i], a[i]), "a_" + std::to_string(i + 1) + " = " + k.a[i].to_string());
  notes.check(same_value(k.length_scale, reference::length_scale()), "length scale " + k.length_scale.to_string());

  PerronData comp = perron(component_mean_matrix());
  notes.check(same_value(comp.value.value, QuadNum(3)), "component eigenvalue is not 3");
  notes.check(same_vector(comp.right, reference::component_right()), "component right eigenvector");
  notes.check(same_vector(comp.left, reference::component_left()), "component left eigenvector");

  PerronData iface = perron(interface_mean_matrix());
  notes.check(same_value(iface.value.value, reference::alpha_check()), "interface eigenvalue " + iface.value.to_string());

  std::vector<Rational> spectrum;
  for (const auto& [value, mult] : real_spectrum(degree_matrix())) {
    if (!value.exact || !value.value.is_rational()) {
      notes.fail("irrational degree eigenvalue " + value.to_string());
      continue;
    }
    for (int i = 0; i < mult; ++i) spectrum.push_back(value.value.p());
  }
  std::sort(spectrum.rbegin(), spectrum.rend());
  notes.check(spectrum == reference::degree_spectrum(), "degree spectrum");

  const OffspringTable& table = sg_tables().path;
  for (const auto& row : reference::path_rows()) {
    std::map<std::vector<int>, Rational> want;
    for (const auto& o : row.outcomes) want[o.types] += o.prob;
    auto got = row_by_suffix(table.rows[static_cast<std::size_t>(row.parent)]);
    notes.check(got == want, "path offspring row " + conn_name(row.parent));
  }

  r.seconds = elapsed(start);
  r.statistic = r.seconds;
  r.threshold = cfg.tables_seconds;
  notes.check(r.seconds < cfg.tables_seconds, "runtime over budget");
  r.pass = notes.ok();
  r.detail = notes.ok() ? "five matrices, eigen-data and three offspring rows equal" : notes.text();
  return r;
}

// ------------------------------------------------------------------ 4

ValidationReport degree_distribution(const ValidationConfig& cfg) {
  ValidationReport r = make_report(4, "corner and midpoint degree laws", true);
  auto start = Clock::now();
  Notes notes;
  for (int n = 1; n <= cfg.degree_max_level; ++n)
    notes.check(degree_vectors(n) == degree_vectors_closed(n), "closed form differs at n=" + std::to_string(n));
  DegreeLimits lim = degree_limit_constants();
  auto w = reference::degree_w();
  auto prop = reference::degree_proportion();
  for (int h = 1; h <= 4; ++h) {
    notes.check(lim.w[static_cast<std::size_t>(h)] == w[static_cast<std::size_t>(h - 1)],
                "w(" + std::to_string(h) + ") = " + to_string(lim.w[static_cast<std::size_t>(h)]));
    notes.check(lim.proportion[static_cast<std::size_t>(h)] == prop[static_cast<std::size_t>(h - 1)],
                "proportion(" + std::to_string(h) + ")");
  }
  notes.check(midpoint_series(ForestClass::T1, 1) == reference::degree_series(), "tree series at h=1");
  notes.check(lim.corner_degree1 == reference::corner_degree1() && lim.corner_degree2 == reference::corner_degree2(),
              "corner degree limits");
  r.seconds = elapsed(start);
  r.statistic = r.seconds;
  r.threshold = cfg.degree_seconds;
  notes.check(r.seconds < cfg.degree_seconds, "runtime over budget");
  r.pass = notes.ok();
  r.detail = notes.ok() ? "n<=" + std::to_string(cfg.degree_max_level) + " exact; w and proportions exact" : notes.text();
  return r;
}

// ------------------------------------------------------------------ 5

ValidationReport length_law(const ValidationConfig& cfg) {
  ValidationReport r = make_report(5, "path length law", true);
  auto start = Clock::now();
  Notes notes;
  for (int n = 0; n <= cfg.length_max_level; ++n) {
    std::array<Rational, 2> means;
    if (n <= cfg.length_pgf_max_level) {
      LengthPgfs pgf = length_pgf(n);
      notes.check(pgf.tree.total() == 1 && pgf.separated.total() == 1, "length law not normalized at n=" + std::to_string(n));
      means = {pgf.tree.mean(), pgf.separated.mean()};
    } else {
      means = length_means(n);
    }
    auto closed = expected_length(n);
    for (int i = 0; i < 2; ++i)
      notes.check(same_value(closed[static_cast<std::size_t>(i)], QuadNum(means[static_cast<std::size_t>(i)])),
                  "mean differs from closed form at n=" + std::to_string(n));
  }
  auto m0 = length_means(0);
  notes.check(m0 == reference::length_mean_level0(), "level-0 means");

  // Level-1 means by direct enumeration of the census.
  const Census& census = sg_census();
  GraphRef g1 = census.g1;
  const int u1 = g1->boundary()[0];
  const int u2 = g1->boundary()[1];
  auto census_mean = [&](auto accept) {
    Rational total(0);
    unsigned long count = 0;
    for (const auto& e : census.entries) {
      if (!accept(e.cls)) continue;
      EdgeSet edges(static_cast<std::size_t>(g1->edge_count()), 0);
      for (int k = 0; k < g1->edge_count(); ++k) edges[static_cast<std::size_t>(k)] = (e.mask >> k) & 1U;
      total += tree_metric(make_forest(g1, edges), u1, u2);
      ++count;
    }
    return std::make_pair(Rational(total / count), count);
  };
  auto [tree_mean, trees] = census_mean([](ForestClass c) { return is_tree_class(c); });
  auto [sep_mean, seps] = census_mean([](ForestClass c) { return c == ForestClass::S3; });
  auto closed1 = expected_length(1);
  notes.check(trees == 54 && seps == 30, "census sizes");
  notes.check(same_value(closed1[0], QuadNum(tree_mean)), "tree mean by enumeration " + to_string(tree_mean));
  notes.check(same_value(closed1[1], QuadNum(sep_mean)), "separated mean by enumeration " + to_string(sep_mean));
  auto ref1 = reference::length_mean_level1();
  notes.check(tree_mean == ref1[0] && sep_mean == ref1[1], "level-1 means differ from the reference values");

  r.seconds = elapsed(start);
  r.statistic = r.seconds;
  r.threshold = cfg.length_seconds;
  notes.check(r.seconds < cfg.length_seconds, "runtime over budget");
  r.pass = notes.ok();
  r.detail = notes.ok() ? "means exact for n<=" + std::to_string(cfg.length_max_level) + "; level 1: " +
                              to_string(tree_mean) + ", " + to_string(sep_mean)
                        : notes.text();
  return r;
}

// ------------------------------------------------------------------ 6

ValidationReport sampler_vs_wilson(const ValidationConfig& cfg) {
  ValidationReport r = make_report(6, "branching sampler agrees with Wilson", true);
  auto start = Clock::now();
  Notes notes;
  RngStream root(cfg.seed);

  // (a) Wilson on G_1 against the uniform law on the census trees.
  GraphRef g1 = sg_graph(1);
  std::map<Key, Rational> uniform;
  const Census& census = sg_census();
  for (const auto& e : census.entries)
    if (is_tree_class(e.cls)) uniform[mask_key(e.mask, g1->edge_count())] = rat(1, reference::kSpanningTreesLevel1);
  DistTable wilson_trees = DistTable::empirical();
  Rng wr = root.sequential(RngStream::kWalk, 1);
  for (int s = 0; s < cfg.wilson_tree_samples; ++s) wilson_trees.add(forest_key(wilson_ust(g1, wr)));
  ChiSquareResult chi = chi_square(wilson_trees, DistTable::exact_law(uniform));
  notes.check(chi.p_value > cfg.chi_square_p, "Wilson G_1 chi-square p " + fmt(chi.p_value));
  notes.add("(a) p=" + fmt(chi.p_value));

  // (b) and (c): length at level lerw_level against the exact law.
  DistTable exact = exact_length_law(length_pgf(cfg.lerw_level).tree);
  DistTable gw = DistTable::empirical();
  RngStream gw_root = root.child(2);
  for (int s = 0; s < cfg.lerw_samples; ++s)
    gw.add(length_key(sample_lerw(cfg.lerw_level, gw_root.child(static_cast<std::uint64_t>(s))).length()));
  double tv_gw = tv_distance(gw, exact);
  notes.check(tv_gw < cfg.lerw_tv, "branching length TV " + fmt(tv_gw));
  notes.add("(b) TV=" + fmt(tv_gw));

  GraphRef gn = sg_graph(cfg.lerw_level);
  DistTable walk = DistTable::empirical();
  Rng lr = root.sequential(RngStream::kWalk, 3);
  for (int s = 0; s < cfg.lerw_samples; ++s)
    walk.add(length_key(lerw_between(gn, gn->boundary()[0], gn->boundary()[1], lr).length()));
  double tv_walk = tv_distance(walk, exact);
  notes.check(tv_walk < cfg.lerw_tv, "Wilson length TV " + fmt(tv_walk));
  notes.add("(c) TV=" + fmt(tv_walk));

  // (d) full paths on G_2, two-sample.
  GraphRef g2 = sg_graph(2);
  const int u1 = g2->boundary()[0];
  const int u2 = g2->boundary()[1];
  auto order = order_with_first(*g2, u2, u1);
  DistTable gw_paths = DistTable::empirical();
  DistTable wilson_paths = DistTable::empirical();
  RngStream path_root = root.child(4);
  Rng pr = root.sequential(RngStream::kWalk, 5);
  for (int s = 0; s < cfg.path_samples; ++s) {
    auto p = sample_lerw(2, path_root.child(static_cast<std::uint64_t>(s))).vertices;
    gw_paths.add(Key(p.begin(), p.end()));
    auto q = tree_path(wilson_ust(g2, pr, order), u1, u2);
    wilson_paths.add(Key(q.begin(), q.end()));
  }
  double tv_paths = tv_distance(gw_paths, wilson_paths);
  // Same statistic between two independent branching samples: the level of
  // TV produced by sampling noise alone.
  DistTable gw_again = DistTable::empirical();
  RngStream again_root = root.child(6);
  for (int s = 0; s < cfg.path_samples; ++s) {
    auto p = sample_lerw(2, again_root.child(static_cast<std::uint64_t>(s))).vertices;
    gw_again.add(Key(p.begin(), p.end()));
  }
  double floor = tv_distance(gw_paths, gw_again);
  notes.check(tv_paths < cfg.path_tv, "G_2 path two-sample TV " + fmt(tv_paths));
  notes.add("(d) TV=" + fmt(tv_paths) + " over " + std::to_string(std::max(gw_paths.support_size(), wilson_paths.support_size())) +
            " paths, branching-vs-branching TV " + fmt(floor));

  r.seconds = elapsed(start);
  notes.check(r.seconds < cfg.sampler_seconds, "runtime over budget");
  r.statistic = tv_paths;
  r.threshold = cfg.path_tv;
  r.samples = static_cast<std::uint64_t>(cfg.wilson_tree_samples) + 2ULL * static_cast<std::uint64_t>(cfg.lerw_samples) +
              3ULL * static_cast<std::uint64_t>(cfg.path_samples);
  r.pass = notes.ok();
  r.detail = notes.text();
  return r;
}

// ------------------------------------------------------------------ 7

ValidationReport trace_invariance(const ValidationConfig& cfg) {
  ValidationReport r = make_report(7, "trace of level-2 samples is level-1 uniform", true);
  auto start = Clock::now();
  RngStream root(cfg.seed);
  DistTable traced = DistTable::empirical();
  DistTable direct = DistTable::empirical();
  RngStream a = root.child(7);
  RngStream b = root.child(8);
  for (int s = 0; s < cfg.trace_samples; ++s) {
    traced.add(forest_key(trace(sample_forest(ForestClass::T1, 2, a.child(static_cast<std::uint64_t>(s))).forest)));
    direct.add(forest_key(sample_forest(ForestClass::T1, 1, b.child(static_cast<std::uint64_t>(s))).forest));
  }
  r.statistic = tv_distance(traced, direct);
  r.threshold = cfg.trace_tv;
  r.pass = r.statistic < r.threshold && traced.support_size() == 18;
  r.samples = 2ULL * static_cast<std::uint64_t>(cfg.trace_samples);
  r.detail = "two-sample TV over " + std::to_string(traced.support_size()) + " T1 members";
  r.seconds = elapsed(start);
  return r;
}

// ------------------------------------------------------------------ 8

ValidationReport concentration(const ValidationConfig& cfg) {
  ValidationReport r = make_report(8, "type counts, component mass and interface growth", true);
  auto start = Clock::now();
  Notes notes;
  RngStream root(cfg.seed);
  const double scale = std::pow(3.0, cfg.count_level);

  std::vector<std::vector<double>> chi(kForestTypes);
  std::vector<std::vector<double>> comps(3);
  RngStream cr = root.child(9);
  for (int s = 0; s < cfg.count_seeds; ++s) {
    ForestTypeCounts c = forest_counts(ForestClass::T, cfg.count_level, cr.child(static_cast<std::uint64_t>(s)));
    for (int x = 0; x < kForestTypes; ++x) chi[static_cast<std::size_t>(x)].push_back(static_cast<double>(c.chi[static_cast<std::size_t>(x)]) / scale);
    for (int w = 0; w < 3; ++w) comps[static_cast<std::size_t>(w)].push_back(static_cast<double>(c.components[static_cast<std::size_t>(w)]) / scale);
  }
  auto vl = reference::forest_left();
  double worst = 0;
  for (int x = 0; x < kForestTypes; ++x) {
    MeanEstimate e = estimate_mean(chi[static_cast<std::size_t>(x)]);
    double target = to_double(vl[static_cast<std::size_t>(x)]);
    double z = std::fabs(e.mean - target) / e.standard_error;
    worst = std::max(worst, z);
    notes.check(within_se(e, target, cfg.se_multiple), "type " + forest_type_name(x) + " off by " + fmt(z) + " SE");
  }
  const std::array<Rational, 3> comp_target = {rat(53, 96), rat(38, 96), rat(5, 96)};
  for (int w = 0; w < 3; ++w) {
    MeanEstimate e = estimate_mean(comps[static_cast<std::size_t>(w)]);
    double target = to_double(comp_target[static_cast<std::size_t>(w)]);
    double z = std::fabs(e.mean - target) / e.standard_error;
    worst = std::max(worst, z);
    notes.check(within_se(e, target, cfg.se_multiple), std::to_string(w + 1) + "-component parts off by " + fmt(z) + " SE");
  }
  notes.add("counts worst " + fmt(worst) + " SE");

  // Component of u2, u3 in an S1 forest.
  const unsigned tracked = 0b110;
  std::vector<double> fraction;
  RngStream pr = root.child(10);
  const double cscale = std::pow(3.0, cfg.component_level);
  for (int s = 0; s < cfg.component_seeds; ++s) {
    ComponentSample c = sample_component(ForestClass::S1, tracked, cfg.component_level, pr.child(static_cast<std::uint64_t>(s)), false);
    fraction.push_back(static_cast<double>(c.edge_count) / cscale);
  }
  MeanEstimate fe = estimate_mean(fraction);
  const double comp_limit = 1.5 * 5.0 / 6.0;
  notes.check(within_se(fe, comp_limit, cfg.se_multiple), "component edge mass " + fmt(fe.mean) + " vs 5/4");
  {
    std::vector<Rational> init(7, Rational(0));
    init[static_cast<std::size_t>(comp_weight(comp_index(ForestClass::S1, tracked)) - 1)] = 1;
    auto counts = expected_type_counts(component_mean_matrix(), init, cfg.component_level);
    static constexpr std::array<int, 7> kEdges = {2, 1, 0, 1, 0, 0, 0};
    Rational edges(0);
    for (int w = 0; w < 7; ++w) edges += counts[static_cast<std::size_t>(w)] * kEdges[static_cast<std::size_t>(w)];
    notes.add("component mass " + fmt(fe.mean) + " +- " + fmt(fe.standard_error) + ", exact at this level " +
              fmt(to_double(edges) / cscale) + ", limit 1.25");
  }

  // Interface growth from exact powers.
  std::vector<Rational> v = {Rational(1), Rational(0), Rational(0)};
  const Matrix<Rational> mi = interface_mean_matrix();
  Rational prev(1);
  Rational ratio(0);
  for (int n = 1; n <= cfg.interface_level; ++n) {
    v = row_times(v, mi);
    Rational total = v[0] + v[1] + v[2];
    ratio = total / prev;
    prev = total;
  }
  double alpha_check = reference::alpha_check().to_double();
  double rel = std::fabs(to_double(ratio) / alpha_check - 1);
  notes.check(rel < cfg.interface_tolerance, "interface growth ratio off by " + fmt(rel));
  notes.add("interface ratio rel. error " + fmt(rel));

  r.statistic = worst;
  r.threshold = cfg.se_multiple;
  r.samples = static_cast<std::uint64_t>(cfg.count_seeds + cfg.component_seeds);
  r.pass = notes.ok();
  r.detail = notes.text();
  r.seconds = elapsed(start);
  return r;
}

// ------------------------------------------------------------------ 9

Float50 to_float50(const QuadNum& q) {
  auto rat50 = [](const Rational& v) { return Float50(v.get_num().get_str()) / Float50(v.get_den().get_str()); };
  return rat50(q.p()) + rat50(q.q()) * boost::multiprecision::sqrt(Float50(q.radicand().get_str()));
}

bool agree(double value, double ref, int digits) {
  double unit = std::pow(10.0, std::floor(std::log10(std::fabs(ref))) - (digits - 1));
  return std::fabs(value - ref) <= unit;
}

ValidationReport constants_check(const ValidationConfig& cfg) {
  ValidationReport r = make_report(9, "scaling constants", true);
  auto start = Clock::now();
  Notes notes;
  const Constants& k = constants();
  Float50 la = boost::multiprecision::log(to_float50(k.alpha_bar));
  Float50 lc = boost::multiprecision::log(to_float50(k.alpha_check));
  Float50 l2 = boost::multiprecision::log(Float50(2));
  Float50 l3 = boost::multiprecision::log(Float50(3));
  Float50 gl = l2 / la;
  Float50 gr = l3 / la;
  struct Item {
    const char* name;
    Float50 independent;
    long double library;
    double expected;
  };
  const auto& dec = reference::kDecimals;
  std::vector<Item> items = {
      {"gamma_l", gl, k.gamma_l, dec.gamma_l},
      {"gamma_r", gr, k.gamma_r, dec.gamma_r},
      {"path dimension", la / l2, k.dim_path, dec.dim_path},
      {"interface bound", lc / l2, k.dim_interface_bound, dec.dim_interface_bound},
      {"upper tail exponent", gr / (gr - 1), k.upper_tail_exponent, dec.upper_tail_exponent},
      {"lower tail exponent", gl / (1 - gl), k.lower_tail_exponent, dec.lower_tail_exponent},
  };
  double worst = 0;
  for (const auto& it : items) {
    double ind = it.independent.convert_to<double>();
    double lib = static_cast<double>(it.library);
    notes.check(agree(lib, ind, cfg.significant_digits + 6), std::string(it.name) + " library value differs");
    notes.check(agree(ind, it.expected, cfg.significant_digits),
                std::string(it.name) + " = " + fmt(ind) + " vs reference " + fmt(it.expected));
    worst = std::max(worst, std::fabs(ind - it.expected) / std::fabs(it.expected));
  }
  r.statistic = worst;
  r.threshold = std::pow(10.0, 1 - cfg.significant_digits);
  r.pass = notes.ok();
  r.detail = notes.ok() ? std::to_string(items.size()) + " constants agree to " + std::to_string(cfg.significant_digits) +
                              " significant digits"
                        : notes.text();
  r.seconds = elapsed(start);
  return r;
}

// ------------------------------------------------------------------ 10

ValidationReport theta_moments(const ValidationConfig& cfg) {
  ValidationReport r = make_report(10, "rescaled length law", false);
  auto start = Clock::now();
  Notes notes;
  std::array<DistTable, 4> theta;
  for (int g = 0; g < 4; ++g) theta[static_cast<std::size_t>(g)] = theta_distribution(cfg.theta_level, g);
  std::set<Key> keys;
  for (const auto& t : theta)
    for (const auto& [key, p] : t.exact_probs()) keys.insert(key);
  bool mixture = true;
  for (const auto& key : keys) {
    Rational lhs = theta[0].exact_probability(key);
    Rational rhs = rat(2, 3) * theta[1].exact_probability(key) + rat(1, 3) * theta[2].exact_probability(key);
    if (lhs != rhs) mixture = false;
  }
  notes.check(mixture, "mixture identity fails");
  auto a = reference::a();
  std::array<double, 4> target = {(QuadNum(rat(2, 3)) * a[0] + QuadNum(rat(1, 3)) * a[1]).to_double(), a[0].to_double(),
                                  a[1].to_double(), a[2].to_double()};
  double worst = 0;
  for (int g = 0; g < 4; ++g) {
    double mean = static_cast<double>(theta[static_cast<std::size_t>(g)].mean());
    double rel = std::fabs(mean / target[static_cast<std::size_t>(g)] - 1);
    worst = std::max(worst, rel);
    notes.check(rel < cfg.theta_mean_tolerance, "group " + std::to_string(g) + " mean " + fmt(mean));
  }
  notes.add("means worst rel. error " + fmt(worst));
  TailFit fit = tail_diagnostic(theta[0]);
  double up = std::fabs(fit.upper_slope / fit.upper_reference - 1);
  double lo = std::fabs(fit.lower_slope / fit.lower_reference - 1);
  notes.check(fit.warning.empty(), fit.warning);
  notes.check(up < cfg.tail_tolerance, "upper tail slope " + fmt(fit.upper_slope));
  notes.check(lo < cfg.tail_tolerance, "lower tail slope " + fmt(fit.lower_slope));
  notes.add("tail slopes " + fmt(fit.upper_slope) + " (ref " + fmt(fit.upper_reference) + "), " + fmt(fit.lower_slope) +
            " (ref " + fmt(fit.lower_reference) + ")");
  r.statistic = worst;
  r.threshold = cfg.theta_mean_tolerance;
  r.pass = notes.ok();
  r.detail = notes.text();
  r.seconds = elapsed(start);
  return r;
}

// ------------------------------------------------------------------ 11

ValidationReport refinement(const ValidationConfig& cfg) {
  ValidationReport r = make_report(11, "refinement increments shrink", false);
  auto start = Clock::now();
  CauchyResult c = refinement_cauchy_experiment(cfg.cauchy_m0, cfg.cauchy_m1, cfg.cauchy_seeds, cfg.seed);
  std::string medians;
  for (std::size_t i = 0; i + 1 < c.levels.size(); ++i) medians += (i ? " " : "") + fmt(c.levels[i].median_increment);
  r.pass = c.monotone;
  r.statistic = c.levels.size() > 1 ? c.levels[c.levels.size() - 2].median_increment : 0;
  r.threshold = c.levels.empty() ? 0 : c.levels.front().median_increment;
  r.samples = static_cast<std::uint64_t>(cfg.cauchy_seeds);
  r.detail = "medians " + medians;
  r.seconds = elapsed(start);
  return r;
}

// ------------------------------------------------------------------ 12

double mean_lerw_length(const GraphRef& g, int samples, Rng& rng) {
  long double total = 0;
  for (int s = 0; s < samples; ++s) total += lerw_between(g, g->boundary()[0], g->boundary()[1], rng).length();
  return static_cast<double>(total / samples);
}

ValidationReport variants(const ValidationConfig& cfg) {
  ValidationReport r = make_report(12, "variant cells", false);
  auto start = Clock::now();
  Notes notes;
  struct Variant {
    std::string cell;
    QuadNum growth;
    double dimension;
  };
  std::vector<Variant> list = {{cfg.koch_cell, QuadNum(reference::koch_growth()), reference::kKochDimension},
                               {cfg.two_subdivision_cell, reference::two_subdivision_growth(), reference::kTwoSubdivisionDimension}};
  RngStream root(cfg.seed);
  double worst = 0;
  std::uint64_t id = 20;
  for (const auto& v : list) {
    CellRef cell;
    try {
      cell = load_cell(v.cell);
    } catch (const Error& e) {
      notes.fail(e.what());
      continue;
    }
    Census census = enumerate_cell_forests(cell);
    AlgebraicValue growth = length_growth(census);
    notes.check(growth.exact && same_value(growth.value, v.growth), cell->name + " growth " + growth.to_string());
    double scale = to_double(cell->copies.front().scale);
    double dim = static_cast<double>(std::log(growth.approx()) / std::log(1.0L / scale));
    notes.check(std::fabs(dim - v.dimension) < cfg.dimension_tolerance, cell->name + " dimension " + fmt(dim));
    Rng rng = root.sequential(RngStream::kWalk, id++);
    double l0 = mean_lerw_length(build_graph(cell, cfg.variant_level), cfg.variant_samples, rng);
    double l1 = mean_lerw_length(build_graph(cell, cfg.variant_level + 1), cfg.variant_samples, rng);
    double rel = std::fabs(l1 / l0 / growth.approx() - 1);
    worst = std::max(worst, rel);
    notes.check(rel < cfg.variant_ratio_tolerance, cell->name + " walk ratio off by " + fmt(rel));
    notes.add(cell->name + ": growth " + growth.to_string() + ", dim " + fmt(dim) + ", walk ratio " + fmt(l1 / l0));
  }
  r.statistic = worst;
  r.threshold = cfg.variant_ratio_tolerance;
  r.samples = 4ULL * static_cast<std::uint64_t>(cfg.variant_samples);
  r.pass = notes.ok();
  r.detail = notes.text();
  r.seconds = elapsed(start);
  return r;
}

}  // namespace

ValidationReport run_criterion(int criterion, const ValidationConfig& config) {
  static const std::array<ValidationReport (*)(const ValidationConfig&), kCriteria> runners = {
      exact_counts, census_uniformity, derived_tables, degree_distribution, length_law,   sampler_vs_wilson,
      trace_invariance, concentration, constants_check, theta_moments,    refinement, variants};
  if (criterion < 1 || criterion > kCriteria) throw PreconditionError("no criterion " + std::to_string(criterion));
  auto start = Clock::now();
  try {
    return runners[static_cast<std::size_t>(criterion - 1)](config);
  } catch (const std::exception& e) {
    ValidationReport r;
    r.criterion = criterion;
    r.name = "criterion " + std::to_string(criterion);
    r.hard = criterion <= 9;
    r.detail = std::string("error: ") + e.what();
    r.seconds = elapsed(start);
    return r;
  }
}

std::vector<ValidationReport> run_validation_suite(const ValidationConfig& config,
                                                   const std::function<void(const ValidationReport&)>& on_report) {
  std::vector<ValidationReport> out;
  for (int c = 1; c <= kCriteria; ++c) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), c) == config.only.end()) continue;
    out.push_back(run_criterion(c, config));
    if (on_report) on_report(out.back());
  }
  return out;
}

bool suite_passed(const std::vector<ValidationReport>& reports, bool strict) {
  return std::all_of(reports.begin(), reports.end(),
                     [strict](const ValidationReport& r) { return r.pass || !r.gating(strict); });
}

std::string format_report_line(const ValidationReport& r, bool strict) {
  std::string status = r.pass ? "PASS" : (r.gating(strict) ? "FAIL" : "SOFT-FAIL");
  std::ostringstream os;
  os << status << " [" << r.criterion << "] " << (r.hard ? "(H) " : "(S) ") << r.name << ": statistic " << fmt(r.statistic)
     << " threshold " << fmt(r.threshold) << " (" << fmt(r.seconds) << " s)";
  if (!r.detail.empty()) os << " | " << r.detail;
  return os.str();
}

std::string reports_to_json(const std::vector<ValidationReport>& reports, const ValidationConfig& config) {
  nlohmann::json j;
  j["seed"] = config.seed;
  j["strict"] = config.strict;
  j["passed"] = suite_passed(reports, config.strict);
  j["criteria"] = nlohmann::json::array();
  for (const auto& r : reports) {
    j["criteria"].push_back({{"criterion", r.criterion},
                             {"name", r.name},
                             {"hard", r.hard},
                             {"pass", r.pass},
                             {"statistic", r.statistic},
                             {"threshold", r.threshold},
                             {"samples", r.samples},
                             {"seconds", r.seconds},
                             {"detail", r.detail}});
  }
  return j.dump(2);
}

}  // namespace gasket

#include "gasket/exact.hpp"

#include <cmath>
#include <mutex>

#include "gasket/errors.hpp"

namespace gasket {

// ------------------------------------------------------------- counting

ForestCounts count_forests(int n) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  ForestCounts c{1, 1, 1};
  for (int k = 0; k < n; ++k) {
    ForestCounts next;
    next.tau = 18 * c.tau * c.tau * c.sigma;
    next.sigma = 21 * c.tau * c.sigma * c.sigma + 9 * c.tau * c.tau * c.rho;
    next.rho = 14 * c.sigma * c.sigma * c.sigma + 36 * c.tau * c.sigma * c.rho;
    c = next;
  }
  return c;
}

namespace {

Integer exact_quarter(const Integer& v) {
  if (v < 0 || !mpz_divisible_ui_p(v.get_mpz_t(), 4)) throw ConsistencyError("closed form exponent is not integral");
  return v / 4;
}

Integer power_of(unsigned long prime, const Integer& exponent) {
  if (!exponent.fits_ulong_p()) throw PreconditionError("level too large for the closed form");
  return pow_int(Integer(prime), exponent.get_ui());
}

}  // namespace

ForestCounts closed_form_counts(int n) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  // (5/3)^{k n / 2} 540^{(3^n - 1)/4} with 540 = 2^2 3^3 5, k = -1, 1, 3.
  Integer p3 = pow_int(Integer(3), static_cast<unsigned long>(n));
  Integer e2 = (p3 - 1) / 2;
  auto make = [&](long k) -> Integer {
    Integer e3 = exact_quarter(3 * (p3 - 1) - 2 * k * n);
    Integer e5 = exact_quarter((p3 - 1) + 2 * k * n);
    return power_of(2, e2) * power_of(3, e3) * power_of(5, e5);
  };
  return {make(-1), make(1), make(3)};
}

Integer spanning_tree_count(int n) { return 3 * count_forests(n).tau; }

Integer matrix_tree_count(const ExplicitGraph& g) {
  const int v = g.vertex_count();
  if (v <= 1) return 1;
  Matrix<Integer> lap(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1));
  for (const auto& [a, b] : g.edges()) {
    for (int x : {a, b})
      if (x > 0) lap(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x - 1)) += 1;
    if (a > 0 && b > 0) {
      lap(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) -= 1;
      lap(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) -= 1;
    }
  }
  return determinant(lap);
}

bool constraint_identities(const std::vector<Integer>& chi, int n, int components) {
  if (chi.size() != 7) return false;
  static const int w1[7] = {1, 1, 1, 1, 1, 1, 1};
  static const int w2[7] = {2, 2, 2, 1, 1, 1, 0};
  static const int w3[7] = {1, 1, 1, -1, -1, -1, -3};
  Integer s1 = 0, s2 = 0, s3 = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    s1 += chi[i] * w1[i];
    s2 += chi[i] * w2[i];
    s3 += chi[i] * w3[i];
  }
  Integer p3 = pow_int(Integer(3), static_cast<unsigned long>(n));
  return s1 == p3 && 2 * s2 == 3 * (p3 + 1) - 2 * components && s3 == 3 - 2 * components;
}

// --------------------------------------------------------- mean matrices

Matrix<Rational> mean_matrix(const OffspringTable& table) {
  const auto n = static_cast<std::size_t>(table.type_count());
  Matrix<Rational> m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& o : table.rows[x])
      for (const auto& ch : o.children) m(x, static_cast<std::size_t>(ch.type)) += o.prob;
  return m;
}

Matrix<Rational> class_mean_matrix(const OffspringTable& table, const std::vector<int>& group_of, int groups) {
  auto pgfs = collapsed_pgfs(table, group_of, groups);
  const auto g = static_cast<std::size_t>(groups);
  Matrix<Rational> m(g, g);
  for (std::size_t x = 0; x < g; ++x)
    for (const auto& [e, c] : pgfs[x].terms())
      for (std::size_t y = 0; y < g; ++y) m(x, y) += c * e[y];
  return m;
}

std::vector<Rational> expected_type_counts(const Matrix<Rational>& m, const std::vector<Rational>& init, int n) {
  std::vector<Rational> v = init;
  for (int k = 0; k < n; ++k) v = row_times(v, m);
  return v;
}

const SgTables& sg_tables() {
  static const SgTables tables = [] {
    const Census& c = sg_census();
    SgTables t;
    t.forest = derive_offspring_7(c);
    t.path = derive_offspring_12(c);
    t.component = derive_offspring_19(c);
    t.interface = derive_offspring_interface(c);
    t.forest_collapsed = collapsed_forest_table(t.forest);
    t.path_collapsed = collapsed_path_table(t.path);
    return t;
  }();
  return tables;
}

std::vector<int> component_class_map() {
  std::vector<int> m;
  for (int i = 0; i < kCompTypes; ++i) m.push_back(comp_weight(i) - 1);
  return m;
}

std::vector<int> interface_class_map() {
  std::vector<int> m;
  for (int i = 0; i < kInterfaceTypes; ++i) m.push_back(interface_class(i) - 1);
  return m;
}

std::vector<int> path_class_map() {
  std::vector<int> m;
  for (int i = 0; i < kConnTypes; ++i) m.push_back(conn_weight(i) - 1);
  return m;
}

Matrix<Rational> forest_mean_matrix() { return mean_matrix(sg_tables().forest); }
Matrix<Rational> path_mean_matrix() { return mean_matrix(sg_tables().path); }
Matrix<Rational> component_mean_matrix() {
  return class_mean_matrix(sg_tables().component, component_class_map(), 7);
}
Matrix<Rational> interface_mean_matrix() {
  return class_mean_matrix(sg_tables().interface, interface_class_map(), 3);
}

// -------------------------------------------------------------- degrees

Matrix<Rational> degree_matrix(const Census& census) {
  const CellGraph& cell = *census.cell;
  int copy = cell.corner_copy(0);
  if (cell.boundary_count() != 3 || copy < 0) throw PreconditionError("degree matrix needs three corners");
  Matrix<Rational> d(kForestTypes, kForestTypes);
  for (int x = 0; x < kForestTypes; ++x) {
    auto it = census.by_class.find(static_cast<ForestClass>(x));
    if (it == census.by_class.end()) throw ConsistencyError("class missing from census");
    Rational p(1, static_cast<unsigned long>(it->second.size()));
    for (int idx : it->second) {
      ForestClass part = census.entry(idx).parts[static_cast<std::size_t>(copy)];
      if (static_cast<int>(part) >= kForestTypes) throw ConsistencyError("part class outside the seven types");
      d(static_cast<std::size_t>(x), static_cast<std::size_t>(part)) += p;
    }
  }
  return d;
}

Matrix<Rational> degree_matrix() {
  static const Matrix<Rational> d = degree_matrix(sg_census());
  return d;
}

DegreeVectors initial_degree_vectors(const CellGraph& cell) {
  DegreeVectors d;
  for (auto& v : d) v.assign(kForestTypes, Rational(0));
  for (int x = 0; x < kForestTypes; ++x) {
    auto eta = eta_edges(cell, static_cast<ForestClass>(x));
    int deg = 0;
    for (int e = 0; e < cell.base_edge_count(); ++e) {
      const auto& [a, b] = cell.base_edges[static_cast<std::size_t>(e)];
      if (eta[static_cast<std::size_t>(e)] && (a == 0 || b == 0)) ++deg;
    }
    if (deg > 2) throw ConsistencyError("corner degree above two at level zero");
    d[static_cast<std::size_t>(deg)][static_cast<std::size_t>(x)] = 1;
  }
  return d;
}

DegreeVectors degree_vectors(int n) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  DegreeVectors d = initial_degree_vectors(*sg3_cell());
  const Matrix<Rational> dm = degree_matrix();
  for (int k = 0; k < n; ++k)
    for (auto& v : d) v = times_col(dm, v);
  return d;
}

std::vector<Rational> ExpSum::at(int n) const {
  if (n < valid_from) throw PreconditionError("closed form used below its range");
  std::vector<Rational> out;
  for (const auto& [lambda, c] : terms) {
    if (out.empty()) out.assign(c.size(), Rational(0));
    Rational p = pow_rat(lambda, n);
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i] * p;
  }
  return out;
}

namespace {

struct Decomposition {
  int start = 0;                                                      // r0
  std::vector<std::pair<Rational, std::vector<Rational>>> eigvecs;  // nonzero eigenvalues
};

const Decomposition& degree_decomposition() {
  static const Decomposition dec = [] {
    Decomposition out;
    Matrix<Rational> dm = degree_matrix();
    for (const auto& [value, mult] : real_spectrum(dm)) {
      if (!value.exact || !value.value.is_rational()) throw ConsistencyError("degree matrix has an irrational eigenvalue");
      Rational lambda = value.value.p();
      if (lambda == 0) {
        out.start = mult;
        continue;
      }
      auto space = eigenspace(dm, QuadNum(lambda));
      if (static_cast<int>(space.size()) != mult) throw ConsistencyError("degree matrix is not diagonalizable");
      for (const auto& v : space) {
        std::vector<Rational> r;
        for (const auto& q : v) r.push_back(q.p());
        out.eigvecs.emplace_back(lambda, r);
      }
    }
    std::size_t total = out.eigvecs.size() + static_cast<std::size_t>(out.start);
    if (total != dm.rows()) throw ConsistencyError("degree matrix has complex eigenvalues");
    return out;
  }();
  return dec;
}

}  // namespace

const std::array<ExpSum, 3>& degree_closed_forms() {
  static const std::array<ExpSum, 3> forms = [] {
    const Decomposition& dec = degree_decomposition();
    DegreeVectors base = degree_vectors(dec.start);
    const std::size_t k = dec.eigvecs.size();
    Matrix<Rational> basis(kForestTypes, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < kForestTypes; ++i) basis(i, j) = dec.eigvecs[j].second[i];
    std::array<ExpSum, 3> out;
    for (int h = 0; h < 3; ++h) {
      std::vector<Rational> coeff;
      try {
        coeff = solve(basis, base[static_cast<std::size_t>(h)]);
      } catch (const std::domain_error&) {
        throw ConsistencyError("degree vector outside the nonzero eigenspaces");
      }
      ExpSum& s = out[static_cast<std::size_t>(h)];
      for (std::size_t j = 0; j < k; ++j) {
        if (coeff[j] == 0) continue;
        const Rational& lambda = dec.eigvecs[j].first;
        Rational c = coeff[j] * pow_rat(lambda, -dec.start);
        std::vector<Rational> v = dec.eigvecs[j].second;
        for (auto& x : v) x *= c;
        // Merge terms with equal eigenvalue.
        bool merged = false;
        for (auto& [mu, w] : s.terms)
          if (mu == lambda) {
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
            merged = true;
          }
        if (!merged) s.terms.emplace_back(lambda, v);
      }
      s.valid_from = dec.start;
    }
    // Earliest level from which all three closed forms hold.
    int from = dec.start;
    while (from > 0) {
      DegreeVectors d = degree_vectors(from - 1);
      bool ok = true;
      for (int h = 0; h < 3; ++h) {
        ExpSum probe = out[static_cast<std::size_t>(h)];
        probe.valid_from = 0;
        if (probe.at(from - 1) != d[static_cast<std::size_t>(h)]) ok = false;
      }
      if (!ok) break;
      --from;
    }
    for (auto& s : out) s.valid_from = from;
    return out;
  }();
  return forms;
}

DegreeVectors degree_vectors_closed(int n) {
  const auto& forms = degree_closed_forms();
  DegreeVectors d;
  for (int h = 0; h < 3; ++h) d[static_cast<std::size_t>(h)] = forms[static_cast<std::size_t>(h)].at(n);
  return d;
}

namespace {

// Class of a forest after swapping corners 0 and j.
int swap_corner(int cls, int j) {
  if (j == 0 || cls == static_cast<int>(ForestClass::R)) return cls;
  int base = cls < 3 ? 0 : 3;
  int corner = cls - base;
  if (corner == 0) corner = j;
  else if (corner == j) corner = 0;
  return base + corner;
}

// Scalar exponential sum: lambda -> coefficient.
using ScalarSum = std::map<Rational, Rational>;

ScalarSum product(const ScalarSum& a, const ScalarSum& b) {
  ScalarSum out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) out[x * y] += c * d;
  return out;
}

// Law of the degree of local corner j in a forest of class cls, as a sum
// valid from the closed-form start.
ScalarSum degree_law(int cls, int j, int h) {
  ScalarSum s;
  if (h < 0 || h > 2) return s;
  const auto& form = degree_closed_forms()[static_cast<std::size_t>(h)];
  auto idx = static_cast<std::size_t>(swap_corner(cls, j));
  for (const auto& [lambda, v] : form.terms)
    if (v[idx] != 0) s[lambda] += v[idx];
  return s;
}

Rational degree_prob(const DegreeVectors& d, int cls, int j, int h) {
  if (h < 0 || h > 2) return Rational(0);
  return d[static_cast<std::size_t>(h)][static_cast<std::size_t>(swap_corner(cls, j))];
}

}  // namespace

Rational midpoint_degree_expectation(ForestClass x, int h, int r) {
  const Census& census = sg_census();
  const CellGraph& cell = *census.cell;
  DegreeVectors d = degree_vectors(r);
  const auto& members = census.by_class.at(x);
  Rational total(0);
  for (int idx : members) {
    const auto& parts = census.entry(idx).parts;
    for (const auto& g : cell.gluings) {
      int ca = static_cast<int>(parts[static_cast<std::size_t>(g.copy_a)]);
      int cb = static_cast<int>(parts[static_cast<std::size_t>(g.copy_b)]);
      for (int l = 0; l <= h; ++l)
        total += degree_prob(d, ca, g.index_a, l) * degree_prob(d, cb, g.index_b, h - l);
    }
  }
  return total / static_cast<unsigned long>(members.size());
}

Rational midpoint_series(ForestClass x, int h) {
  const Census& census = sg_census();
  const CellGraph& cell = *census.cell;
  const int start = degree_closed_forms()[0].valid_from;
  Rational sum(0);
  for (int r = 0; r < start; ++r) sum += midpoint_degree_expectation(x, h, r) / pow_rat(Rational(3), r + 1);
  // From r = start on, the expectation is a finite exponential sum in r.
  ScalarSum m;
  const auto& members = census.by_class.at(x);
  for (int idx : members) {
    const auto& parts = census.entry(idx).parts;
    for (const auto& g : cell.gluings) {
      int ca = static_cast<int>(parts[static_cast<std::size_t>(g.copy_a)]);
      int cb = static_cast<int>(parts[static_cast<std::size_t>(g.copy_b)]);
      for (int l = 0; l <= h; ++l)
        for (const auto& [mu, c] : product(degree_law(ca, g.index_a, l), degree_law(cb, g.index_b, h - l)))
          m[mu] += c;
    }
  }
  Rational third(1, 3);
  for (const auto& [mu, c] : m) {
    if (c == 0) continue;
    Rational coeff = c / static_cast<unsigned long>(members.size());
    // sum_{r >= start} 3^{-r-1} mu^r
    sum += coeff * pow_rat(third, start + 1) * pow_rat(mu, start) / (1 - mu * third);
  }
  return sum;
}

DegreeLimits degree_limit_constants() {
  static const DegreeLimits lim = [] {
    DegreeLimits out;
    PerronData p = perron(forest_mean_matrix());
    Rational sum(0);
    for (int h = 1; h <= 4; ++h) {
      Rational w(0);
      for (int x = 0; x < kForestTypes; ++x) {
        const QuadNum& v = p.left[static_cast<std::size_t>(x)];
        if (!v.is_rational()) throw ConsistencyError("left eigenvector is not rational");
        w += v.p() * midpoint_series(static_cast<ForestClass>(x), h);
      }
      out.w[static_cast<std::size_t>(h)] = w;
      sum += w;
    }
    out.w[0] = 0;
    out.proportion[0] = 0;
    for (int h = 1; h <= 4; ++h) out.proportion[static_cast<std::size_t>(h)] = out.w[static_cast<std::size_t>(h)] / sum;
    // Limits of the corner law: the eigenvalue-one terms.
    for (int h = 1; h <= 2; ++h) {
      Rational limit(0);
      for (const auto& [lambda, v] : degree_closed_forms()[static_cast<std::size_t>(h)].terms)
        if (lambda == 1) limit = v[0];
      (h == 1 ? out.corner_degree1 : out.corner_degree2) = limit;
    }
    return out;
  }();
  return lim;
}

// ------------------------------------------------------------- constants

const Constants& constants() {
  static const Constants k = [] {
    Constants c;
    PerronData forest = perron(forest_mean_matrix());
    PerronData path = perron(path_mean_matrix());
    PerronData comp = perron(component_mean_matrix());
    PerronData iface = perron(interface_mean_matrix());
    c.alpha_bar = path.value.value;
    c.alpha_check = iface.value.value;
    c.v_l = forest.left;
    c.v_hat_l = comp.left;
    c.v_hat_r = comp.right;
    c.v_bar_l = path.left;
    c.v_bar_r = path.right;
    // Right vector is constant on the non-through, through and S groups;
    // the left vector on tree types and S types.
    c.a = {path.right[0], path.right[6], path.right[9], path.left[0], path.left[9]};
    // Limit of alpha^{-n} E d_T(u1,u2) divided by E theta_0 = (2/3) a1 + (1/3) a2.
    auto m = length_mean_matrix();
    PerronData len = perron(m);
    // alpha^{-n} M^n mu0 -> v_R (v_L . mu0); mu0 = (4/3, 1).
    QuadNum proj = len.left[0] * QuadNum(rat(4, 3)) + len.left[1];
    QuadNum limit = len.right[0] * proj;
    QuadNum theta0 = QuadNum(rat(2, 3)) * c.a[0] + QuadNum(rat(1, 3)) * c.a[1];
    c.length_scale = limit / theta0;
    c.resistance_scale = rat(5, 3);
    long double la = std::log(c.alpha_bar.to_long_double());
    c.gamma_l = std::log(2.0L) / la;
    c.gamma_r = std::log(3.0L) / la;
    c.dim_path = la / std::log(2.0L);
    c.dim_interface_bound = std::log(c.alpha_check.to_long_double()) / std::log(2.0L);
    c.upper_tail_exponent = c.gamma_r / (c.gamma_r - 1);
    c.lower_tail_exponent = c.gamma_l / (1 - c.gamma_l);
    return c;
  }();
  return k;
}

}  // namespace gasket

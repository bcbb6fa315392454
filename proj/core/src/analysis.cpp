#include "gasket/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>

#include "gasket/errors.hpp"
#include "gasket/exact.hpp"
#include "gasket/sampler.hpp"

namespace gasket {

static std::set<Key> union_support(const DistTable& a, const DistTable& b) {
  std::set<Key> keys;
  for (const auto& k : a.support()) keys.insert(k);
  for (const auto& k : b.support()) keys.insert(k);
  return keys;
}

double tv_distance(const DistTable& a, const DistTable& b) {
  double s = 0;
  for (const auto& k : union_support(a, b)) s += std::fabs(a.probability(k) - b.probability(k));
  return s / 2;
}

Rational tv_distance_exact(const DistTable& a, const DistTable& b) {
  Rational s(0);
  for (const auto& k : union_support(a, b)) s += abs(a.exact_probability(k) - b.exact_probability(k));
  return s / 2;
}

ChiSquareResult chi_square(const DistTable& empirical, const DistTable& exact, double min_expected) {
  if (empirical.is_exact() || !exact.is_exact()) throw PreconditionError("chi-square needs empirical vs exact");
  ChiSquareResult r;
  const double n = static_cast<double>(empirical.total());
  if (n == 0) throw PreconditionError("no samples");
  for (const auto& k : empirical.support())
    if (exact.exact_probability(k) == 0) return r;  // impossible outcome observed: p = 0
  double pooled_obs = 0;
  double pooled_exp = 0;
  int bins = 0;
  for (const auto& [k, p] : exact.exact_probs()) {
    double e = n * to_double(p);
    double o = static_cast<double>(empirical.count(k));
    if (e < min_expected) {
      pooled_obs += o;
      pooled_exp += e;
      ++r.pooled_bins;
      continue;
    }
    r.statistic += (o - e) * (o - e) / e;
    ++bins;
  }
  if (pooled_exp > 0) {
    r.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++bins;
  }
  r.dof = bins - 1;
  if (r.dof < 1) {
    r.p_value = 1;
    return r;
  }
  boost::math::chi_squared dist(r.dof);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

MeanEstimate estimate_mean(const std::vector<double>& xs) {
  MeanEstimate e;
  e.n = xs.size();
  if (xs.empty()) return e;
  long double s = 0;
  for (double x : xs) s += x;
  long double m = s / static_cast<long double>(xs.size());
  long double v = 0;
  for (double x : xs) v += (x - m) * (x - m);
  if (xs.size() > 1) v /= static_cast<long double>(xs.size() - 1);
  e.mean = static_cast<double>(m);
  e.standard_error = static_cast<double>(std::sqrt(v / static_cast<long double>(xs.size())));
  return e;
}

bool within_se(const MeanEstimate& e, double target, double k) {
  return std::fabs(e.mean - target) <= k * e.standard_error;
}

static long double log_integer(const Integer& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp) * std::log(2.0L);
}

long double log_rational(const Rational& r) {
  if (r <= 0) throw PreconditionError("log of a nonpositive rational");
  return log_integer(r.get_num()) - log_integer(r.get_den());
}

static double ls_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) return 0;
  double mx = 0;
  double my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0;
  double sxx = 0;
  for (auto [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxx > 0 ? sxy / sxx : 0;
}

TailFit tail_diagnostic(const DistTable& theta, double tail_hi, double tail_lo) {
  if (!theta.is_exact()) throw PreconditionError("tail diagnostic needs an exact law");
  const Constants& k = constants();
  TailFit f;
  f.upper_reference = static_cast<double>(k.upper_tail_exponent);
  f.lower_reference = -static_cast<double>(k.lower_tail_exponent);
  const auto& probs = theta.exact_probs();
  const long double scale = theta.scale();
  const long double log_hi = std::log(static_cast<long double>(tail_hi));
  const long double log_lo = std::log(static_cast<long double>(tail_lo));

  // Survival P(X >= s) from the top.
  std::vector<std::pair<double, double>> upper;
  Rational surv(0);
  f.survival_monotone = true;
  Rational prev(0);
  for (auto it = probs.rbegin(); it != probs.rend(); ++it) {
    surv += it->second;
    if (surv < prev) f.survival_monotone = false;
    prev = surv;
    if (surv >= 1) continue;
    long double lp = log_rational(surv);
    if (lp > log_hi || lp < log_lo) continue;
    long double s = static_cast<long double>(it->first.at(0)) * scale;
    upper.emplace_back(static_cast<double>(std::log(s)), static_cast<double>(std::log(-lp)));
  }
  // Distribution function P(X <= s) from the bottom.
  std::vector<std::pair<double, double>> lower;
  Rational cdf(0);
  for (const auto& [key, p] : probs) {
    cdf += p;
    if (cdf >= 1) break;
    long double lp = log_rational(cdf);
    if (lp > log_hi || lp < log_lo) continue;
    long double s = static_cast<long double>(key.at(0)) * scale;
    lower.emplace_back(static_cast<double>(std::log(s)), static_cast<double>(std::log(-lp)));
  }
  f.upper_points = static_cast<int>(upper.size());
  f.lower_points = static_cast<int>(lower.size());
  f.upper_slope = ls_slope(upper);
  f.lower_slope = ls_slope(lower);
  if (f.upper_points < 3 || f.lower_points < 3) f.warning = "insufficient tail mass for a fit";
  return f;
}

CauchyResult refinement_cauchy_experiment(int m0, int m1, int seeds, std::uint64_t base_seed) {
  if (m0 < 0 || m1 <= m0) throw PreconditionError("need 0 <= m0 < m1");
  if (seeds < 1) throw PreconditionError("need at least one seed");
  const int levels = m1 - m0 + 1;
  const long double alpha = constants().alpha_bar.to_long_double();
  std::vector<std::vector<double>> x(static_cast<std::size_t>(levels));
  auto scaled_length = [&](const TypedTree& t) {
    long double len = 0;
    for (int leaf : t.leaves()) len += conn_is_through(t.node(leaf).type) ? 2 : 1;
    return static_cast<double>(len / std::pow(alpha, t.depth));
  };
  for (int s = 0; s < seeds; ++s) {
    RngStream rng(base_seed + static_cast<std::uint64_t>(s));
    TypedTree t = sample_lerw(m0, rng).tree;
    x[0].push_back(scaled_length(t));
    for (int m = 1; m < levels; ++m) {
      t = refine(t, 1, rng);
      x[static_cast<std::size_t>(m)].push_back(scaled_length(t));
    }
  }
  CauchyResult r;
  r.monotone = true;
  for (int m = 0; m < levels; ++m) {
    CauchyLevel lv;
    lv.level = m0 + m;
    const auto& xm = x[static_cast<std::size_t>(m)];
    lv.mean_x = estimate_mean(xm).mean;
    lv.exact_mean_x = static_cast<double>(expected_length(lv.level)[0].to_long_double() / std::pow(alpha, lv.level));
    lv.nonpositive = static_cast<std::size_t>(std::count_if(xm.begin(), xm.end(), [](double v) { return v <= 0; }));
    if (m + 1 < levels) {
      std::vector<double> inc;
      const auto& next = x[static_cast<std::size_t>(m) + 1];
      for (std::size_t i = 0; i < xm.size(); ++i) inc.push_back(std::fabs(next[i] - xm[i]));
      std::nth_element(inc.begin(), inc.begin() + static_cast<long>(inc.size() / 2), inc.end());
      lv.median_increment = inc[inc.size() / 2];
      if (!r.levels.empty() && !(lv.median_increment < r.levels.back().median_increment)) r.monotone = false;
    }
    r.levels.push_back(lv);
  }
  return r;
}

}  // namespace gasket

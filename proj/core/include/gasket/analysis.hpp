#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gasket/distribution.hpp"
#include "gasket/numeric.hpp"

namespace gasket {

// Half the l1 distance over the union of supports.
double tv_distance(const DistTable& a, const DistTable& b);
// Exact when both tables are exact.
Rational tv_distance_exact(const DistTable& a, const DistTable& b);

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double p_value = 0;
  int pooled_bins = 0;
};
// Pearson test of an empirical table against an exact law; bins with an
// expected count below min_expected are pooled. Empirical mass outside the
// exact support gives p = 0.
ChiSquareResult chi_square(const DistTable& empirical, const DistTable& exact, double min_expected = 5.0);

struct MeanEstimate {
  double mean = 0;
  double standard_error = 0;
  std::size_t n = 0;
};
MeanEstimate estimate_mean(const std::vector<double>& xs);
bool within_se(const MeanEstimate& e, double target, double k = 3.0);

// log of a positive rational without overflow.
long double log_rational(const Rational& r);

struct TailFit {
  double upper_slope = 0;  // d log(-log P(X >= s)) / d log s
  double lower_slope = 0;  // d log(-log P(X <= s)) / d log s
  double upper_reference = 0;
  double lower_reference = 0;
  int upper_points = 0;
  int lower_points = 0;
  bool survival_monotone = false;
  std::string warning;
};
// Least-squares slopes on the tails of an exact rescaled length law. Upper
// tail: survival in [upper_hi, upper_lo]; lower tail: distribution function
// in the same window.
TailFit tail_diagnostic(const DistTable& theta, double tail_hi = 1e-2, double tail_lo = 1e-12);

struct CauchyLevel {
  int level = 0;
  double median_increment = 0;  // median over seeds of |x_{m+1} - x_m|
  double mean_x = 0;
  double exact_mean_x = 0;
  std::size_t nonpositive = 0;
};
struct CauchyResult {
  std::vector<CauchyLevel> levels;
  bool monotone = false;
};
// x_m = alpha_bar^{-m} d_{T_m}(u1, u2) along coupled refinements of one LERW
// tree per seed, for m = m0 .. m1.
CauchyResult refinement_cauchy_experiment(int m0, int m1, int seeds, std::uint64_t base_seed = 0);

}  // namespace gasket

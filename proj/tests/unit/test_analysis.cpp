#include <gtest/gtest.h>

#include <cmath>

#include "gasket/analysis.hpp"
#include "gasket/exact.hpp"
#include "gasket/rng.hpp"

using namespace gasket;

namespace {

DistTable law(std::initializer_list<std::pair<std::int64_t, Rational>> entries) {
  std::map<Key, Rational> probs;
  for (const auto& [k, p] : entries) probs[length_key(k)] = p;
  return DistTable::exact_law(probs);
}

}  // namespace

TEST(TotalVariation, Examples) {
  DistTable u = law({{1, rat(1, 3)}, {2, rat(1, 3)}, {3, rat(1, 3)}});
  EXPECT_EQ(tv_distance_exact(u, u), 0);
  EXPECT_EQ(tv_distance_exact(law({{1, rat(1)}}), law({{2, rat(1)}})), 1);
  DistTable v = law({{1, rat(1, 2)}, {2, rat(1, 4)}, {3, rat(1, 4)}});
  EXPECT_EQ(tv_distance_exact(u, v), rat(1, 6));
  EXPECT_NEAR(tv_distance(u, v), 1.0 / 6.0, 1e-15);
}

TEST(TotalVariation, EmpiricalAgainstExact) {
  DistTable e = DistTable::empirical();
  e.add(length_key(1), 3);
  e.add(length_key(2), 1);
  EXPECT_EQ(e.total(), 4u);
  EXPECT_NEAR(tv_distance(e, law({{1, rat(1, 2)}, {2, rat(1, 2)}})), 0.25, 1e-15);
}

TEST(ChiSquare, AcceptsDrawsFromTheLaw) {
  DistTable exact = law({{1, rat(2, 3)}, {2, rat(1, 3)}});
  DistTable e = DistTable::empirical();
  Rng rng(4);
  for (int i = 0; i < 20000; ++i) e.add(length_key(rng.below(3) == 0 ? 2 : 1));
  ChiSquareResult r = chi_square(e, exact);
  EXPECT_EQ(r.dof, 1);
  EXPECT_GT(r.p_value, 1e-4);
}

TEST(ChiSquare, RejectsAWrongLaw) {
  DistTable e = DistTable::empirical();
  e.add(length_key(1), 5000);
  e.add(length_key(2), 5000);
  EXPECT_LT(chi_square(e, law({{1, rat(2, 3)}, {2, rat(1, 3)}})).p_value, 1e-10);
}

TEST(ChiSquare, OutsideSupportGivesZero) {
  DistTable e = DistTable::empirical();
  e.add(length_key(7));
  EXPECT_EQ(chi_square(e, law({{1, rat(1)}})).p_value, 0);
}

TEST(Mean, StandardError) {
  MeanEstimate m = estimate_mean({1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.standard_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-12);
  EXPECT_TRUE(within_se(m, 3.0, 1.0));
  EXPECT_FALSE(within_se(m, 4.0, 1.0));
}

TEST(LogRational, HugeValues) {
  Rational r(pow_int(Integer(3), 5000), pow_int(Integer(2), 7000));
  EXPECT_NEAR(static_cast<double>(log_rational(r)), 5000 * std::log(3.0) - 7000 * std::log(2.0), 1e-6);
}

TEST(Tail, SlopesAgainstTheExponents) {
  TailFit f = tail_diagnostic(theta_distribution(7));
  EXPECT_TRUE(f.survival_monotone);
  EXPECT_GE(f.upper_points, 3);
  EXPECT_GE(f.lower_points, 3);
  EXPECT_NEAR(f.upper_reference, 4.053954, 1e-6);
  EXPECT_NEAR(f.lower_reference, -5.154759, 1e-6);
  EXPECT_LT(std::fabs(f.upper_slope / f.upper_reference - 1), 0.35);
  EXPECT_LT(std::fabs(f.lower_slope / f.lower_reference - 1), 0.35);
}

TEST(Cauchy, IncrementsShrinkAndMeansMatch) {
  CauchyResult r = refinement_cauchy_experiment(3, 8, 200, 17);
  ASSERT_EQ(r.levels.size(), 6u);
  for (const auto& lv : r.levels) {
    EXPECT_EQ(lv.nonpositive, 0u);
    EXPECT_NEAR(lv.mean_x / lv.exact_mean_x, 1.0, 0.15) << lv.level;
  }
  EXPECT_LT(r.levels[4].median_increment, r.levels[0].median_increment);
}

#include <gtest/gtest.h>

#include <cmath>

#include "gasket/enumeration.hpp"
#include "gasket/errors.hpp"
#include "gasket/exact.hpp"
#include "gasket/reference.hpp"

using namespace gasket;

TEST(Counts, SmallLevels) {
  ForestCounts c0 = count_forests(0);
  EXPECT_EQ(c0.tau, 1);
  EXPECT_EQ(c0.sigma, 1);
  EXPECT_EQ(c0.rho, 1);
  ForestCounts c1 = count_forests(1);
  EXPECT_EQ(c1.tau, 18);
  EXPECT_EQ(c1.sigma, 30);
  EXPECT_EQ(c1.rho, 50);
}

TEST(Counts, RecursionMatchesClosedForm) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(count_forests(n), closed_form_counts(n)) << n;
}

TEST(Counts, MatrixTreeTheoremAgrees) {
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(matrix_tree_count(*sg_graph(n)), spanning_tree_count(n)) << n;
}

TEST(MeanMatrices, RowSumsCountChildren) {
  // Every forest part has three children.
  Matrix<Rational> m = forest_mean_matrix();
  for (std::size_t i = 0; i < 7; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < 7; ++j) s += m(i, j);
    EXPECT_EQ(s, 3);
  }
}

TEST(MeanMatrices, ExpectedCountsSatisfyConstraintsInMean) {
  std::vector<Rational> init(7, Rational(0));
  init[0] = 1;
  auto e = expected_type_counts(forest_mean_matrix(), init, 5);
  Rational s(0);
  for (const auto& v : e) s += v;
  EXPECT_EQ(s, 243);
}

TEST(Degree, ClosedFormsFromLevelOne) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(degree_vectors(n), degree_vectors_closed(n)) << n;
}

TEST(Degree, LevelZeroVectors) {
  DegreeVectors d = degree_vectors(0);
  EXPECT_EQ(d[0][6], 1);  // R: the corner is isolated
  EXPECT_EQ(d[2][0], 1);  // T1: both edges meet u1
  EXPECT_EQ(d[1][1], 1);
  EXPECT_EQ(d[0][3], 1);  // S1: u1 alone
}

TEST(Degree, VectorsAreLaws) {
  for (int n = 0; n <= 6; ++n) {
    DegreeVectors d = degree_vectors(n);
    for (std::size_t x = 0; x < 7; ++x) EXPECT_EQ(d[0][x] + d[1][x] + d[2][x], 1) << n;
  }
}

TEST(Degree, MidpointExpectationsTermByTerm) {
  // The series starts with the level-1 value: each gluing point once.
  Rational s(0);
  for (int r = 0; r <= 40; ++r) s += midpoint_degree_expectation(ForestClass::T1, 1, r) / pow_rat(Rational(3), r + 1);
  Rational exact = midpoint_series(ForestClass::T1, 1);
  EXPECT_LT(std::fabs(to_double(Rational(exact - s))), 1e-15);
}

TEST(Length, LevelZeroLaw) {
  LengthPgfs p = length_pgf(0);
  EXPECT_EQ(p.tree.coeff(1), rat(2, 3));
  EXPECT_EQ(p.tree.coeff(2), rat(1, 3));
  EXPECT_EQ(p.separated.coeff(1), 1);
}

TEST(Length, MeansMatchJetsAndClosedForm) {
  for (int n = 0; n <= 6; ++n) {
    LengthPgfs p = length_pgf(n);
    auto jets = length_means(n);
    EXPECT_EQ(p.tree.mean(), jets[0]);
    EXPECT_EQ(p.separated.mean(), jets[1]);
    auto closed = expected_length(n);
    EXPECT_EQ(closed[0], QuadNum(jets[0]));
    EXPECT_EQ(closed[1], QuadNum(jets[1]));
  }
}

TEST(Length, ByClassMixture) {
  auto by = length_pgf_by_class(4);
  LengthPgfs p = length_pgf(4);
  EXPECT_EQ(by[0].scaled(rat(2, 3)) + by[1].scaled(rat(1, 3)), p.tree);
  EXPECT_EQ(by[2], p.separated);
}

TEST(Length, DegreeCapIsEnforced) { EXPECT_THROW(length_pgf(6, 16), DegreeCapError); }

TEST(Length, GenericMatrixOnTheGasket) {
  Matrix<Rational> m = generic_length_matrix(sg_census());
  Matrix<Rational> want = {{rat(5, 3), rat(2, 3)}, {rat(6, 5), rat(1)}};
  EXPECT_EQ(m, want);
  AlgebraicValue g = length_growth(sg_census());
  ASSERT_TRUE(g.exact);
  EXPECT_EQ(g.value, reference::alpha_bar());
}

TEST(Length, GenericGrowthOfVariantCells) {
  AlgebraicValue koch = length_growth(enumerate_cell_forests(load_cell("koch")));
  ASSERT_TRUE(koch.exact);
  EXPECT_EQ(koch.value, QuadNum(rat(10, 3)));
  AlgebraicValue two = length_growth(enumerate_cell_forests(load_cell("sg_two_subdivisions")));
  ASSERT_TRUE(two.exact);
  EXPECT_NEAR(static_cast<double>(two.approx()), (1431 + std::sqrt(1669656.0)) / 735, 1e-12);
}

TEST(Constants, Decimals) {
  const Constants& k = constants();
  EXPECT_NEAR(static_cast<double>(k.gamma_l), 0.837524, 1e-6);
  EXPECT_NEAR(static_cast<double>(k.gamma_r), 1.32744, 1e-5);
  EXPECT_NEAR(static_cast<double>(k.dim_path), 1.193995, 1e-6);
  EXPECT_NEAR(static_cast<double>(k.dim_interface_bound), 0.457029, 1e-6);
  EXPECT_NEAR(static_cast<double>(k.upper_tail_exponent), 4.053954, 1e-6);
  EXPECT_NEAR(static_cast<double>(k.lower_tail_exponent), 5.154759, 1e-6);
  EXPECT_EQ(k.alpha_check, QuadNum(rat(3, 5)) * k.alpha_bar);
}

TEST(Theta, MixtureIdentityAndNormalization) {
  DistTable t0 = theta_distribution(5, 0);
  DistTable t1 = theta_distribution(5, 1);
  DistTable t2 = theta_distribution(5, 2);
  EXPECT_EQ(t0.exact_total(), 1);
  for (const auto& [k, p] : t0.exact_probs())
    EXPECT_EQ(p, rat(2, 3) * t1.exact_probability(k) + rat(1, 3) * t2.exact_probability(k));
}

TEST(Counts, SquareAndRatioIdentities) {
  for (int n = 0; n <= 12; ++n) {
    ForestCounts c = count_forests(n);
    EXPECT_EQ(c.sigma * c.sigma, c.tau * c.rho) << n;
    EXPECT_EQ(rat(c.sigma, c.tau), pow_rat(rat(5, 3), n)) << n;
  }
}

TEST(MeanMatrices, ComponentPerronVectors) {
  const Constants& k = constants();
  const std::vector<Rational> right = {1, 1, 1, rat(5, 6), rat(1, 6), rat(2, 3), rat(1, 3)};
  const std::vector<Rational> left = {rat(53, 96), rat(38, 96), rat(5, 96), 0, 0, 0, 0};
  ASSERT_EQ(k.v_hat_r.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(k.v_hat_r[i], QuadNum(right[i])) << i;
    EXPECT_EQ(k.v_hat_l[i], QuadNum(left[i])) << i;
  }
}

TEST(Length, MeansFollowTheTwoTermRecursion) {
  Matrix<Rational> m = length_mean_matrix();
  for (int n = 0; n <= 8; ++n) {
    auto now = length_means(n);
    auto next = length_means(n + 1);
    // E_{n+1} = M E_n in the (tree, separated) coordinates.
    EXPECT_EQ(next[0], m(0, 0) * now[0] + m(0, 1) * now[1]) << n;
    EXPECT_EQ(next[1], m(1, 0) * now[0] + m(1, 1) * now[1]) << n;
  }
}

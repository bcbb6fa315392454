#pragma once

#include <array>
#include <string>
#include <vector>

#include "gasket/matrix.hpp"
#include "gasket/numeric.hpp"
#include "gasket/quadnum.hpp"

// Reference values, typed in by hand. Validation compares the derived
// objects against these; nothing in the library computes from them.
namespace gasket::reference {

// Class sizes at level 1 in the order T1, T2, T3, S1, S2, S3, R.
inline constexpr std::array<int, 7> kClassSizes = {18, 18, 18, 30, 30, 30, 50};
inline constexpr int kSpanningTreesLevel1 = 54;

Matrix<Rational> forest_mean();     // 7 x 7
Matrix<Rational> path_mean();       // 12 x 12
Matrix<Rational> component_mean();  // 7 x 7
Matrix<Rational> interface_mean();  // 3 x 3
Matrix<Rational> degree();          // 7 x 7

std::vector<Rational> forest_left();  // dominant left eigenvector, sums to 1
QuadNum alpha_bar();
QuadNum alpha_check();
std::array<QuadNum, 5> a();  // a_1 .. a_5
std::vector<Rational> component_right();
std::vector<Rational> component_left();
QuadNum length_scale();
// Eigenvalues of the degree matrix with multiplicity, descending.
std::vector<Rational> degree_spectrum();

std::array<Rational, 4> degree_w();           // h = 1..4
std::array<Rational, 4> degree_proportion();  // h = 1..4
Rational degree_series();                     // type-5 partial series
Rational corner_degree1();
Rational corner_degree2();

// Mean path lengths at levels 0 and 1: tree, then separated.
std::array<Rational, 2> length_mean_level0();
std::array<Rational, 2> length_mean_level1();

// One reference row of the path offspring table: child types by suffix and the
// probability of that tuple.
struct PathOutcome {
  std::vector<int> types;
  Rational prob;
};
struct PathRow {
  int parent;
  std::vector<PathOutcome> outcomes;
};
std::vector<PathRow> path_rows();

// Decimal constants, six significant digits.
struct Decimals {
  double gamma_l = 0.837524;
  double gamma_r = 1.32744;
  double dim_path = 1.193995;
  double dim_interface_bound = 0.457029;
  double upper_tail_exponent = 4.053954;
  double lower_tail_exponent = 5.154759;
};
inline constexpr Decimals kDecimals{};

// Growth of the mean path length for the variant cells.
Rational koch_growth();
QuadNum two_subdivision_growth();
inline constexpr double kKochDimension = 1.095903274;
inline constexpr double kTwoSubdivisionDimension = 1.192117286;

}  // namespace gasket::reference

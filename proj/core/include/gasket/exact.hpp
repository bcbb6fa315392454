#pragma once

#include <array>
#include <map>
#include <vector>

#include "gasket/distribution.hpp"
#include "gasket/eigen.hpp"
#include "gasket/enumeration.hpp"
#include "gasket/matrix.hpp"
#include "gasket/numeric.hpp"
#include "gasket/polynomial.hpp"
#include "gasket/quadnum.hpp"

namespace gasket {

// ------------------------------------------------------------- counting

// Sizes of one tree subclass, one S_i class and the R class at level n.
struct ForestCounts {
  Integer tau;
  Integer sigma;
  Integer rho;
  bool operator==(const ForestCounts& o) const { return tau == o.tau && sigma == o.sigma && rho == o.rho; }
};

ForestCounts count_forests(int n);
// Prime-power form of the closed formulas; exponents are checked integral.
ForestCounts closed_form_counts(int n);
Integer spanning_tree_count(int n);
// Any cofactor of the graph Laplacian.
Integer matrix_tree_count(const ExplicitGraph& g);

// Checks the three linear identities tying a level-n type count vector to the
// number of components.
bool constraint_identities(const std::vector<Integer>& chi, int n, int components);

// --------------------------------------------------------- mean matrices

Matrix<Rational> mean_matrix(const OffspringTable& table);
// Mean matrix between symmetry classes; rows come from collapsed_pgfs.
Matrix<Rational> class_mean_matrix(const OffspringTable& table, const std::vector<int>& group_of, int groups);
// Row vector init * M^n.
std::vector<Rational> expected_type_counts(const Matrix<Rational>& m, const std::vector<Rational>& init, int n);

// Tables derived once from the built-in cell.
struct SgTables {
  OffspringTable forest;
  OffspringTable path;
  OffspringTable component;
  OffspringTable interface;
  OffspringTable forest_collapsed;
  OffspringTable path_collapsed;
};
const SgTables& sg_tables();

std::vector<int> component_class_map();  // 19 types -> 7 classes
std::vector<int> interface_class_map();   // 7 types -> 3 classes
std::vector<int> path_class_map();        // 12 types -> 3 classes

Matrix<Rational> forest_mean_matrix();     // 7 x 7
Matrix<Rational> path_mean_matrix();       // 12 x 12
Matrix<Rational> component_mean_matrix();  // 7 x 7, by component class
Matrix<Rational> interface_mean_matrix();  // 3 x 3, by symmetry class

// -------------------------------------------------------------- degrees

// Row x: law of the class of the part that contains corner u1.
Matrix<Rational> degree_matrix(const Census& census);
Matrix<Rational> degree_matrix();

// d[h][x] = P(deg u1 = h) in a uniform forest of class x at level n.
using DegreeVectors = std::array<std::vector<Rational>, 3>;
DegreeVectors initial_degree_vectors(const CellGraph& cell);
DegreeVectors degree_vectors(int n);

// Vector-valued exponential sum  sum_i c_i * lambda_i^n,  valid for n >= valid_from.
struct ExpSum {
  std::vector<std::pair<Rational, std::vector<Rational>>> terms;
  int valid_from = 0;
  std::vector<Rational> at(int n) const;
};
// Closed forms of d_n(h) from the eigen-decomposition of D.
const std::array<ExpSum, 3>& degree_closed_forms();
DegreeVectors degree_vectors_closed(int n);

// Expected number of copy-gluing points of degree h in a forest of class x
// at level r + 1.
Rational midpoint_degree_expectation(ForestClass x, int h, int r);
// sum_r 3^{-r-1} * midpoint_degree_expectation(x, h, r), summed exactly.
Rational midpoint_series(ForestClass x, int h);

struct DegreeLimits {
  std::array<Rational, 5> w;           // index h = 1..4
  std::array<Rational, 5> proportion;  // w(h) / sum w
  Rational corner_degree1;             // limit of P(deg u1 = 1) in a tree
  Rational corner_degree2;
};
DegreeLimits degree_limit_constants();

// ---------------------------------------------------------------- lengths

// Offspring generating functions of the path process counted by class
// (non-through tree, through tree, S) and of the collapsed process (tree, S).
const std::vector<MultiPoly>& path_class_pgfs();
const std::vector<MultiPoly>& path_collapsed_pgfs();
Matrix<Rational> length_mean_matrix();  // 2 x 2, from path_collapsed_pgfs

inline constexpr std::size_t kDefaultDegreeCap = 1u << 20;

struct LengthPgfs {
  Poly tree;       // d_T(u1, u2), T uniform spanning tree
  Poly separated;  // d(u1, u2) in S^3
};
// Exact laws through the collapsed two-type process.
LengthPgfs length_pgf(int n, std::size_t degree_cap = kDefaultDegreeCap);
// Exact laws through the three-class process: non-through, through, S.
std::array<Poly, 3> length_pgf_by_class(int n, std::size_t degree_cap = kDefaultDegreeCap);
// Exact means by first-order jets of the same composition (no coefficient lists).
std::array<Rational, 2> length_means(int n);
// Closed form from the eigen-decomposition of the 2 x 2 mean matrix.
std::array<QuadNum, 2> expected_length(int n);

// Mean numbers of parts crossed by the path from u1 to u2, from the census of
// any cell with two or three corners. Rows and columns: tree part, then (three
// corners only) separated part.
Matrix<Rational> generic_length_matrix(const Census& census);
// Dominant eigenvalue of generic_length_matrix: the growth factor of the mean
// path length per level.
AlgebraicValue length_growth(const Census& census);

// ------------------------------------------------------------- constants

struct Constants {
  QuadNum alpha_bar;
  QuadNum alpha_check;
  std::array<QuadNum, 5> a;  // a_1 .. a_5
  std::vector<QuadNum> v_l;
  std::vector<QuadNum> v_hat_r;
  std::vector<QuadNum> v_hat_l;
  std::vector<QuadNum> v_bar_r;
  std::vector<QuadNum> v_bar_l;
  QuadNum length_scale;  // c with d_T(u1,u2) / alpha_bar^n -> c * theta
  Rational resistance_scale;
  long double gamma_l;
  long double gamma_r;
  long double dim_path;
  long double dim_interface_bound;
  long double upper_tail_exponent;  // gamma_r / (gamma_r - 1)
  long double lower_tail_exponent;  // gamma_l / (1 - gamma_l)
};
const Constants& constants();

// Law of d / (alpha_bar^n c) for one of the four root groups:
// 0 uniform tree, 1 non-through tree, 2 through tree, 3 separated.
DistTable theta_distribution(int n, int group = 0, std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace gasket

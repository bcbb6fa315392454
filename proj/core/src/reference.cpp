#include "gasket/reference.hpp"

#include <initializer_list>

namespace gasket::reference {

namespace {

Matrix<Rational> scaled_rows(std::initializer_list<std::initializer_list<long>> rows, long den) {
  Matrix<Rational> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = rat(v, den);
    ++i;
  }
  return m;
}

QuadNum quad(long pn, long pd, long qn, long qd) { return QuadNum(rat(pn, pd), rat(qn, qd)); }

}  // namespace

Matrix<Rational> forest_mean() {
  return scaled_rows({{100, 100, 100, 0, 75, 75, 0},
                      {100, 100, 100, 75, 0, 75, 0},
                      {100, 100, 100, 75, 75, 0, 0},
                      {65, 65, 65, 150, 30, 30, 45},
                      {65, 65, 65, 30, 150, 30, 45},
                      {65, 65, 65, 30, 30, 150, 45},
                      {36, 36, 36, 78, 78, 78, 108}},
                     150);
}

Matrix<Rational> path_mean() {
  return scaled_rows({{15, 15, 0, 0, 0, 0, 15, 0, 0, 15, 0, 0},
                      {15, 15, 0, 0, 0, 0, 15, 0, 0, 15, 0, 0},
                      {0, 0, 15, 15, 0, 0, 0, 15, 0, 0, 15, 0},
                      {0, 0, 15, 15, 0, 0, 0, 15, 0, 0, 15, 0},
                      {0, 0, 0, 0, 15, 15, 0, 0, 15, 0, 0, 15},
                      {0, 0, 0, 0, 15, 15, 0, 0, 15, 0, 0, 15},
                      {10, 10, 5, 5, 5, 5, 10, 5, 5, 0, 15, 15},
                      {5, 5, 10, 10, 5, 5, 5, 10, 5, 15, 0, 15},
                      {5, 5, 5, 5, 10, 10, 5, 5, 10, 15, 15, 0},
                      {10, 10, 1, 1, 1, 1, 10, 1, 1, 24, 3, 3},
                      {1, 1, 10, 10, 1, 1, 1, 10, 1, 3, 24, 3},
                      {1, 1, 1, 1, 10, 10, 1, 1, 10, 3, 3, 24}},
                     30);
}

Matrix<Rational> component_mean() {
  return scaled_rows({{100, 50, 0, 0, 0, 0, 0},
                      {65, 70, 15, 0, 0, 0, 0},
                      {36, 78, 36, 0, 0, 0, 0},
                      {60, 20, 0, 40, 10, 15, 0},
                      {5, 0, 0, 10, 40, 0, 15},
                      {24, 28, 6, 24, 24, 24, 6},
                      {12, 2, 0, 24, 24, 6, 24}},
                     50);
}

Matrix<Rational> interface_mean() { return scaled_rows({{50, 15, 0}, {48, 30, 0}, {72, 18, 18}}, 50); }

Matrix<Rational> degree() {
  return scaled_rows({{50, 50, 50, 0, 0, 0, 0},
                      {25, 25, 25, 0, 0, 75, 0},
                      {25, 25, 25, 0, 75, 0, 0},
                      {5, 5, 5, 60, 15, 15, 45},
                      {30, 30, 30, 0, 45, 15, 0},
                      {30, 30, 30, 0, 15, 45, 0},
                      {12, 12, 12, 36, 21, 21, 36}},
                     150);
}

std::vector<Rational> forest_left() {
  return {rat(53, 288), rat(53, 288), rat(53, 288), rat(38, 288), rat(38, 288), rat(38, 288), rat(15, 288)};
}

QuadNum alpha_bar() { return quad(4, 3, 1, 15); }
QuadNum alpha_check() { return quad(4, 5, 1, 25); }

std::array<QuadNum, 5> a() {
  return {quad(11, 26, 17, 533), quad(17, 26, 49, 1066), quad(1, 2, 13, 410), quad(-13, 18, 1, 18), quad(5, 2, -1, 6)};
}

std::vector<Rational> component_right() {
  return {rat(1), rat(1), rat(1), rat(5, 6), rat(1, 6), rat(2, 3), rat(1, 3)};
}

std::vector<Rational> component_left() {
  return {rat(53, 96), rat(19, 48), rat(5, 96), rat(0), rat(0), rat(0), rat(0)};
}

QuadNum length_scale() { return quad(-7, 6, 1, 6); }

std::vector<Rational> degree_spectrum() {
  return {rat(1), rat(3, 5), rat(1, 5), rat(1, 15), rat(1, 25), rat(0), rat(0)};
}

std::array<Rational, 4> degree_w() {
  return {rat(10957, 26976), rat(6626035, 9090912), rat(2943139, 9090912), rat(124895, 3030304)};
}

std::array<Rational, 4> degree_proportion() {
  return {rat(10957, 40464), rat(6626035, 13636368), rat(2943139, 13636368), rat(124895, 4545456)};
}

Rational degree_series() { return rat(49595, 166352); }
Rational corner_degree1() { return rat(11, 14); }
Rational corner_degree2() { return rat(3, 14); }

std::array<Rational, 2> length_mean_level0() { return {rat(4, 3), rat(1)}; }
std::array<Rational, 2> length_mean_level1() { return {rat(26, 9), rat(13, 5)}; }

std::vector<PathRow> path_rows() {
  const std::array<std::array<int, 3>, 3> g = {{{0, 1, 6}, {2, 3, 7}, {4, 5, 8}}};
  std::vector<PathRow> rows;

  PathRow r4{4, {}};
  for (int x : g[2]) r4.outcomes.push_back({{x, 11}, rat(1, 6)});
  for (int x : g[2])
    for (int y : g[2]) r4.outcomes.push_back({{x, y}, rat(1, 18)});
  rows.push_back(r4);

  PathRow r8{8, {}};
  for (int x : g[0])
    for (int y : g[2]) r8.outcomes.push_back({{10, x, y}, rat(1, 18)});
  for (int x : g[1])
    for (int y : g[2]) r8.outcomes.push_back({{x, 9, y}, rat(1, 18)});
  rows.push_back(r8);

  PathRow r11{11, {}};
  for (int x : g[1]) r11.outcomes.push_back({{x, 9, 11}, rat(1, 30)});
  for (int x : g[0]) r11.outcomes.push_back({{10, x, 11}, rat(1, 30)});
  for (int x : g[2])
    for (int y : g[2]) r11.outcomes.push_back({{x, y}, rat(1, 30)});
  for (int x : g[2]) {
    r11.outcomes.push_back({{x, 11}, rat(1, 15)});
    r11.outcomes.push_back({{11, x}, rat(1, 15)});
  }
  r11.outcomes.push_back({{11, 11}, rat(1, 10)});
  rows.push_back(r11);
  return rows;
}

Rational koch_growth() { return rat(10, 3); }
QuadNum two_subdivision_growth() { return QuadNum(rat(1431, 735), rat(1, 735), Integer(1669656)); }

}  // namespace gasket::reference

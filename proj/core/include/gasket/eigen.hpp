#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gasket/matrix.hpp"
#include "gasket/numeric.hpp"
#include "gasket/polynomial.hpp"
#include "gasket/quadnum.hpp"

namespace gasket {

// Monic characteristic polynomial det(x I - A), by Faddeev-LeVerrier.
RatPoly char_poly(const Matrix<Rational>& a);
// p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

// Isolating interval of a simple real root; lo == hi when the root is exact.
struct RootInterval {
  Rational lo;
  Rational hi;
};
// Real roots of a polynomial, ascending, one interval per distinct root.
std::vector<RootInterval> real_roots(const RatPoly& p);
// Shrinks the interval of a simple root of p below the given width.
RootInterval refine_root(const RatPoly& p, RootInterval r, const Rational& width);

// Real algebraic number of degree at most two is held exactly; anything else
// as a certified interval together with its defining polynomial.
struct AlgebraicValue {
  bool exact = false;
  QuadNum value;
  Rational lo;
  Rational hi;
  RatPoly poly;  // minimal polynomial when exact, else a squarefree multiple

  long double approx() const;
  std::string to_string() const;
};

// Distinct real eigenvalues, ascending, with algebraic multiplicities.
std::vector<std::pair<AlgebraicValue, int>> real_spectrum(const Matrix<Rational>& a);
// Largest real eigenvalue (the Perron root for nonnegative matrices).
AlgebraicValue dominant_eigenvalue(const Matrix<Rational>& a);

// Basis of the (right) eigenspace of an exact eigenvalue.
std::vector<std::vector<QuadNum>> eigenspace(const Matrix<Rational>& a, const QuadNum& lambda);

struct PerronData {
  AlgebraicValue value;
  std::vector<QuadNum> left;   // ||left||_1 = 1
  std::vector<QuadNum> right;  // left . right = 1
};
// Throws PreconditionError when the dominant eigenvalue is not exact or not
// geometrically simple.
PerronData perron(const Matrix<Rational>& a);

std::string to_string(const std::vector<QuadNum>& v);

}  // namespace gasket

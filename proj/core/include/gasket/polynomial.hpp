#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gasket/numeric.hpp"

namespace gasket {

// Univariate polynomial with rational coefficients, ascending order.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly monomial(const Rational& c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }
  RatPoly derivative() const;
  RatPoly monic() const;
  std::string to_string(const std::string& var = "x") const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // Euclidean division: *this = q * d + r.
  void divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RatPoly gcd(RatPoly a, RatPoly b);

// Sparse multivariate polynomial keyed by exponent vectors.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(std::size_t vars = 0) : vars_(vars) {}
  std::size_t vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);
  static MultiPoly variable(std::size_t vars, std::size_t i);
  static MultiPoly constant(std::size_t vars, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Rational eval(const std::vector<Rational>& z) const;
  std::string to_string() const;

 private:
  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

// Probability generating function with nonnegative coefficients stored as
// integer numerators over one common denominator.
class Poly {
 public:
  Poly() : den_(1) {}
  Poly(std::vector<Integer> num, Integer den);
  static Poly from_rationals(const std::vector<Rational>& coeffs);
  static Poly monomial(std::size_t k) {
    std::vector<Integer> n(k + 1, Integer(0));
    n[k] = 1;
    return Poly(std::move(n), 1);
  }

  std::size_t size() const { return num_.size(); }
  int degree() const { return static_cast<int>(num_.size()) - 1; }
  Rational coeff(std::size_t k) const;
  std::vector<Rational> coeffs() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  Rational total() const;
  Rational mean() const;

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const;

 private:
  void normalize();
  std::vector<Integer> num_;
  Integer den_;
};

// Product of nonnegative integer coefficient lists via Kronecker substitution.
std::vector<Integer> multiply_nonnegative(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace gasket

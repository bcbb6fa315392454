#pragma once

#include <iosfwd>
#include <string>

#include "gasket/numeric.hpp"

namespace gasket {

// Element p + q*sqrt(d) of the quadratic field Q(sqrt(d)). Rational values
// (q == 0) combine with any radicand.
class QuadNum {
 public:
  static constexpr long kDefaultRadicand = 205;

  QuadNum() : p_(0), q_(0), d_(kDefaultRadicand) {}
  QuadNum(long v) : p_(v), q_(0), d_(kDefaultRadicand) {}  // NOLINT
  QuadNum(const Rational& p) : p_(p), q_(0), d_(kDefaultRadicand) {}  // NOLINT
  QuadNum(const Rational& p, const Rational& q, const Integer& d = kDefaultRadicand);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  QuadNum conj() const { return QuadNum(p_, -q_, d_); }
  Rational norm() const { return p_ * p_ - q_ * q_ * Rational(d_); }
  int sign() const;
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }
  std::string to_string() const;

  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);
  QuadNum operator-() const { return QuadNum(-p_, -q_, d_); }

  friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
  friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
  friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
  friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }
  friend bool operator==(const QuadNum& a, const QuadNum& b);
  friend bool operator!=(const QuadNum& a, const QuadNum& b) { return !(a == b); }
  friend bool operator<(const QuadNum& a, const QuadNum& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QuadNum& a, const QuadNum& b) { return b < a; }

 private:
  const Integer& common_radicand(const QuadNum& o) const;

  Rational p_;
  Rational q_;
  Integer d_;
};

QuadNum pow(const QuadNum& base, unsigned long exp);
QuadNum abs(const QuadNum& v);
std::ostream& operator<<(std::ostream& os, const QuadNum& v);

}  // namespace gasket

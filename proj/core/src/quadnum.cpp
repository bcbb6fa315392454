#include "gasket/quadnum.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gasket {

QuadNum::QuadNum(const Rational& p, const Rational& q, const Integer& d) : p_(p), q_(q), d_(d) {
  if (d_ <= 0) throw std::domain_error("radicand must be positive");
}

const Integer& QuadNum::common_radicand(const QuadNum& o) const {
  if (o.q_ == 0) return d_;
  if (q_ == 0) return o.d_;
  if (d_ != o.d_) throw std::domain_error("mixed radicands in QuadNum arithmetic");
  return d_;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  d_ = common_radicand(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  d_ = common_radicand(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  Integer d = common_radicand(o);
  Rational p = p_ * o.p_ + q_ * o.q_ * Rational(d);
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  d_ = d;
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  Rational n = o.norm();
  if (n == 0) throw std::domain_error("QuadNum division by zero");
  QuadNum c = o.conj();
  *this *= c;
  p_ /= n;
  q_ /= n;
  return *this;
}

bool operator==(const QuadNum& a, const QuadNum& b) {
  if (a.q_ == 0 && b.q_ == 0) return a.p_ == b.p_;
  return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
}

int QuadNum::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 with q^2 d.
  Rational lhs = p_ * p_;
  Rational rhs = q_ * q_ * Rational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

long double QuadNum::to_long_double() const {
  mpf_class root(d_, 192);
  root = sqrt(root);
  mpf_class v = mpf_class(p_, 192) + mpf_class(q_, 192) * root;
  double hi = v.get_d();
  mpf_class rest = v - mpf_class(hi, 192);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::string QuadNum::to_string() const {
  if (q_ == 0) return gasket::to_string(p_);
  std::string s = gasket::to_string(p_);
  s += q_ < 0 ? " - " : " + ";
  s += gasket::to_string(Rational(abs(q_))) + "*sqrt(" + d_.get_str() + ")";
  return s;
}

QuadNum pow(const QuadNum& base, unsigned long exp) {
  QuadNum result(Rational(1), Rational(0), base.radicand());
  QuadNum b = base;
  while (exp > 0) {
    if (exp & 1UL) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

QuadNum abs(const QuadNum& v) { return v.sign() < 0 ? -v : v; }

std::ostream& operator<<(std::ostream& os, const QuadNum& v) { return os << v.to_string(); }

}  // namespace gasket

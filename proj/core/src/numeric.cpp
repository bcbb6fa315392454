#include "gasket/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace gasket {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num(s.substr(0, slash), 10);
    Integer den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Integer(s, 10));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Integer den = pow_int(10, s.size() - dot - 1);
  Rational r(Integer(digits, 10), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const Rational& v) { return v.get_d(); }

long double to_long_double(const Rational& v) {
  mpf_class x(v, 192);
  double hi = x.get_d();
  mpf_class rest = x - mpf_class(hi, 192);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer pow_int(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow_rat(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return pow_rat(inv, -exp);
  }
  Rational r(pow_int(base.get_num(), static_cast<unsigned long>(exp)),
             pow_int(base.get_den(), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

static Rational floor_rat(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Rational fl = floor_rat(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / inner;
}

void square_free_split(const Integer& v, Integer& f, Integer& d) {
  Integer rest = abs(v);
  f = 1;
  d = 1;
  if (rest == 0) {
    d = 0;
    return;
  }
  for (unsigned long p = 2; p <= 1000000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
      rest /= pp;
      f *= p;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      d *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    f *= s;
  } else {
    d *= rest;
  }
  if (v < 0) d = -d;
}

}  // namespace gasket

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gasket {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
double to_double(const Rational& v);
long double to_long_double(const Rational& v);

Integer lcm(const Integer& a, const Integer& b);
Integer pow_int(const Integer& base, unsigned long exp);
Rational pow_rat(const Rational& base, long exp);

// Simplest rational (least denominator) in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi);

// Splits v = f^2 * d with d free of prime squares below the trial bound.
void square_free_split(const Integer& v, Integer& f, Integer& d);

}  // namespace gasket

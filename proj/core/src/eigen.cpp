#include "gasket/eigen.hpp"

#include <algorithm>
#include <sstream>

#include "gasket/errors.hpp"

namespace gasket {

RatPoly char_poly(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  // x^n + c_{n-1} x^{n-1} + ... + c_0
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix<Rational> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    Matrix<Rational> t = a * m;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += t(i, i);
    c[n - k] = -trace / static_cast<unsigned long>(k);
  }
  return RatPoly(c);
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  RatPoly g = gcd(p, p.derivative());
  RatPoly q, r;
  p.divmod(g, q, r);
  return q.monic();
}

namespace {

int sign_changes(const std::vector<RatPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly q, r;
    seq[seq.size() - 2].divmod(seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

void isolate(const RatPoly& p, const std::vector<RatPoly>& seq, Rational lo, Rational hi,
             std::vector<RootInterval>& out) {
  // Roots in (lo, hi]; lo is never a root here.
  int count = sign_changes(seq, lo) - sign_changes(seq, hi);
  if (count == 0) return;
  if (count == 1) {
    if (p.sign_at(hi) == 0) {
      out.push_back({hi, hi});
    } else {
      out.push_back({lo, hi});
    }
    return;
  }
  // Split at a point that is not itself a root.
  Rational mid = (lo + hi) / 2;
  for (long k = 3; p.sign_at(mid) == 0; k += 2) mid = lo + (hi - lo) / k;
  isolate(p, seq, lo, mid, out);
  isolate(p, seq, mid, hi, out);
}

}  // namespace

std::vector<RootInterval> real_roots(const RatPoly& poly) {
  if (poly.degree() <= 0) return {};
  RatPoly p = squarefree_part(poly);
  Rational bound(1);
  for (int i = 0; i < p.degree(); ++i) bound += abs(p.coeff(static_cast<std::size_t>(i)));
  std::vector<RootInterval> out;
  auto seq = sturm_sequence(p);
  Rational lo = -bound;
  // -bound is not a root by the Cauchy bound.
  isolate(p, seq, lo, bound, out);
  return out;
}

RootInterval refine_root(const RatPoly& poly, RootInterval r, const Rational& width) {
  if (r.lo == r.hi) return r;
  RatPoly p = squarefree_part(poly);
  int slo = p.sign_at(r.lo);
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    int s = p.sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == slo || slo == 0) {
      r.lo = mid;
      slo = s;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

long double AlgebraicValue::approx() const {
  if (exact) return value.to_long_double();
  return (to_long_double(lo) + to_long_double(hi)) / 2;
}

std::string AlgebraicValue::to_string() const {
  if (exact) return value.to_string();
  return "root of " + poly.to_string() + " in [" + gasket::to_string(lo) + ", " + gasket::to_string(hi) + "]";
}

namespace {

Integer denominator_lcm(const Matrix<Rational>& a) {
  Integer l = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).get_den());
  return l;
}

Integer round_nearest(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

// Resolves one root of the monic integer polynomial q (roots scaled by L).
AlgebraicValue resolve_root(const RatPoly& q, const std::vector<RootInterval>& roots, std::size_t which,
                            const Integer& scale) {
  AlgebraicValue v;
  RootInterval r = roots[which];
  RatPoly sq = squarefree_part(q);
  // Roots of a monic integer polynomial are algebraic integers: a rational
  // root is an integer.
  RootInterval narrow = refine_root(sq, r, Rational(1, 4));
  Integer cand = round_nearest(narrow.lo);
  if (q.eval(Rational(cand)) == 0) {
    v.exact = true;
    v.value = QuadNum(Rational(cand) / Rational(scale));
    v.lo = v.hi = v.value.p();
    v.poly = RatPoly({-v.value.p(), Rational(1)});
    return v;
  }
  // Try every other real root as the conjugate of a quadratic factor.
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k == which) continue;
    Rational w(1, 16);
    for (int attempt = 0; attempt < 4; ++attempt, w /= 1024) {
      Rational hi_bound = abs(narrow.hi) + abs(roots[k].hi) + abs(roots[k].lo) + 1;
      RootInterval a = refine_root(sq, r, w / hi_bound);
      RootInterval b = refine_root(sq, roots[k], w / hi_bound);
      Integer s = round_nearest((a.lo + a.hi + b.lo + b.hi) / 2);
      Integer p = round_nearest((a.lo + a.hi) * (b.lo + b.hi) / 4);
      RatPoly factor({Rational(p), Rational(-s), Rational(1)});
      RatPoly quo, rem;
      sq.divmod(factor, quo, rem);
      if (!rem.is_zero()) continue;
      Integer disc = s * s - 4 * p;
      Integer f, d;
      square_free_split(disc, f, d);
      int sign = a.lo > b.lo ? 1 : -1;
      QuadNum root = d == 1 ? QuadNum(rat(s + sign * f, 2))
                            : QuadNum(rat(s, 2), rat(sign * f, 2), d);
      v.exact = true;
      v.value = root / QuadNum(Rational(scale));
      v.lo = v.hi = Rational(0);
      RootInterval fine = refine_root(sq, r, Rational(1, 1 << 30));
      v.lo = fine.lo / Rational(scale);
      v.hi = fine.hi / Rational(scale);
      Rational l2 = Rational(scale) * Rational(scale);
      v.poly = RatPoly({Rational(p) / l2, Rational(-s) / Rational(scale), Rational(1)});
      return v;
    }
  }
  RootInterval fine = refine_root(sq, r, Rational(1, 1UL << 40));
  v.exact = false;
  v.lo = fine.lo / Rational(scale);
  v.hi = fine.hi / Rational(scale);
  // Defining polynomial in the unscaled variable.
  std::vector<Rational> c;
  Rational power(1);
  for (int i = 0; i <= sq.degree(); ++i) {
    c.push_back(sq.coeff(static_cast<std::size_t>(i)) * power);
    power *= Rational(scale);
  }
  v.poly = RatPoly(c).monic();
  return v;
}

int multiplicity(RatPoly p, const RatPoly& factor) {
  int m = 0;
  while (p.degree() >= factor.degree()) {
    RatPoly q, r;
    p.divmod(factor, q, r);
    if (!r.is_zero()) break;
    p = q;
    ++m;
  }
  return m;
}

}  // namespace

std::vector<std::pair<AlgebraicValue, int>> real_spectrum(const Matrix<Rational>& a) {
  Integer scale = denominator_lcm(a);
  RatPoly q = char_poly(a.scaled(Rational(scale)));
  auto roots = real_roots(q);
  std::vector<std::pair<AlgebraicValue, int>> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    AlgebraicValue v = resolve_root(q, roots, i, scale);
    int mult = 1;
    if (v.exact) {
      // Multiplicity of the scaled minimal polynomial in q.
      std::vector<Rational> c;
      Rational power(1);
      for (int k = 0; k <= v.poly.degree(); ++k) {
        c.push_back(v.poly.coeff(static_cast<std::size_t>(v.poly.degree() - k)) * power);
        power *= Rational(scale);
      }
      std::reverse(c.begin(), c.end());
      mult = multiplicity(q, RatPoly(c));
    }
    out.emplace_back(v, mult);
  }
  return out;
}

AlgebraicValue dominant_eigenvalue(const Matrix<Rational>& a) {
  Integer scale = denominator_lcm(a);
  RatPoly q = char_poly(a.scaled(Rational(scale)));
  auto roots = real_roots(q);
  if (roots.empty()) throw PreconditionError("matrix has no real eigenvalue");
  return resolve_root(q, roots, roots.size() - 1, scale);
}

std::vector<std::vector<QuadNum>> eigenspace(const Matrix<Rational>& a, const QuadNum& lambda) {
  Matrix<QuadNum> m = to_quad(a, lambda.radicand());
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return nullspace(m);
}

PerronData perron(const Matrix<Rational>& a) {
  PerronData d;
  d.value = dominant_eigenvalue(a);
  if (!d.value.exact) throw PreconditionError("dominant eigenvalue is not of degree at most two");
  auto right = eigenspace(a, d.value.value);
  auto left = eigenspace(a.transpose(), d.value.value);
  if (right.size() != 1 || left.size() != 1) throw PreconditionError("dominant eigenvalue is not simple");
  QuadNum sum(0);
  for (const auto& x : left[0]) sum += x;
  for (auto& x : left[0]) x /= sum;
  QuadNum ip = dot(left[0], right[0]);
  for (auto& x : right[0]) x /= ip;
  d.left = left[0];
  d.right = right[0];
  return d;
}

std::string to_string(const std::vector<QuadNum>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << ")";
  return os.str();
}

}  // namespace gasket

#include "gasket/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace gasket {

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return *this;
  Rational lead = c_.back();
  std::vector<Rational> d = c_;
  for (auto& v : d) v /= lead;
  return RatPoly(std::move(d));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational v = c_[k];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    Rational a = abs(v);
    if (k == 0 || a != 1) os << gasket::to_string(a);
    if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v = -v;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RatPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  int nd = degree();
  std::vector<Rational> quo(nd >= dd ? static_cast<std::size_t>(nd - dd + 1) : 0, Rational(0));
  Rational lead = d.leading();
  for (int k = nd; k >= dd; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / lead;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  q = RatPoly(std::move(quo));
  r = RatPoly(std::move(rem));
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// -------------------------------------------------------------- MultiPoly

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::variable(std::size_t vars, std::size_t i) {
  MultiPoly p(vars);
  Exponents e(vars, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::constant(std::size_t vars, const Rational& c) {
  MultiPoly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(vars_);
      for (std::size_t i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(vars_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& z) const {
  Rational s(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i) t *= pow_rat(z[i], e[i]);
    s += t;
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << gasket::to_string(it->second);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*z" << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- Poly

Poly::Poly(std::vector<Integer> num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) throw std::invalid_argument("Poly denominator must be positive");
  normalize();
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c < 0) throw std::invalid_argument("PGF coefficients must be nonnegative");
    num.push_back(c.get_num() * (den / c.get_den()));
  }
  return Poly(std::move(num), den);
}

void Poly::normalize() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  Integer g = den_;
  for (const auto& v : num_) {
    if (g == 1) break;
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 1) {
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Poly::coeff(std::size_t k) const {
  if (k >= num_.size()) return Rational(0);
  Rational r(num_[k], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> Poly::coeffs() const {
  std::vector<Rational> r;
  r.reserve(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) r.push_back(coeff(k));
  return r;
}

Rational Poly::total() const {
  Integer s = 0;
  for (const auto& v : num_) s += v;
  Rational r(s, den_);
  r.canonicalize();
  return r;
}

Rational Poly::mean() const {
  Integer s = 0;
  for (std::size_t k = 1; k < num_.size(); ++k) s += num_[k] * static_cast<unsigned long>(k);
  Rational r(s, den_);
  r.canonicalize();
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Integer l = lcm(den_, o.den_);
  Integer fa = l / den_;
  Integer fb = l / o.den_;
  std::vector<Integer> r(std::max(num_.size(), o.num_.size()), Integer(0));
  for (std::size_t k = 0; k < num_.size(); ++k) r[k] += num_[k] * fa;
  for (std::size_t k = 0; k < o.num_.size(); ++k) r[k] += o.num_[k] * fb;
  return Poly(std::move(r), l);
}

Poly Poly::operator*(const Poly& o) const {
  return Poly(multiply_nonnegative(num_, o.num_), den_ * o.den_);
}

Poly Poly::scaled(const Rational& c) const {
  if (c < 0) throw std::invalid_argument("PGF scale must be nonnegative");
  std::vector<Integer> r = num_;
  for (auto& v : r) v *= c.get_num();
  return Poly(std::move(r), den_ * c.get_den());
}

bool Poly::operator==(const Poly& o) const { return den_ == o.den_ && num_ == o.num_; }

// Schoolbook below this many coefficient products; Kronecker packing above.
static constexpr std::size_t kKroneckerThreshold = 4096;

std::vector<Integer> multiply_nonnegative(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t na = a.size();
  std::size_t nb = b.size();
  std::size_t nr = na + nb - 1;
  if (na * nb <= kKroneckerThreshold) {
    std::vector<Integer> r(nr, Integer(0));
    for (std::size_t i = 0; i < na; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
  }
  auto max_bits = [](const std::vector<Integer>& v) {
    std::size_t m = 1;
    for (const auto& x : v) {
      if (sgn(x) < 0) throw std::invalid_argument("Kronecker product needs nonnegative coefficients");
      m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    }
    return m;
  };
  std::size_t bits = max_bits(a) + max_bits(b) + 2;
  for (std::size_t n = std::min(na, nb); n > 0; n >>= 1) ++bits;
  std::size_t limbs = (bits + 63) / 64;

  auto pack = [limbs](const std::vector<Integer>& v) {
    std::vector<std::uint64_t> buf(v.size() * limbs, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      std::size_t count = 0;
      mpz_export(&buf[k * limbs], &count, -1, sizeof(std::uint64_t), 0, 0, v[k].get_mpz_t());
    }
    Integer packed;
    mpz_import(packed.get_mpz_t(), buf.size(), -1, sizeof(std::uint64_t), 0, 0, buf.data());
    return packed;
  };
  Integer pa = pack(a);
  Integer pb = pack(b);
  Integer prod = pa * pb;
  std::size_t total_words = (mpz_sizeinbase(prod.get_mpz_t(), 2) + 63) / 64;
  std::vector<std::uint64_t> buf(std::max(total_words, nr * limbs), 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(std::uint64_t), 0, 0, prod.get_mpz_t());
  std::vector<Integer> r(nr);
  for (std::size_t k = 0; k < nr; ++k) {
    mpz_import(r[k].get_mpz_t(), limbs, -1, sizeof(std::uint64_t), 0, 0, &buf[k * limbs]);
  }
  return r;
}

}  // namespace gasket

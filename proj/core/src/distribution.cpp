#include "gasket/distribution.hpp"

#include "gasket/errors.hpp"

namespace gasket {

DistTable DistTable::exact_law(std::map<Key, Rational> probs) {
  DistTable t;
  t.exact_ = true;
  for (auto& [k, p] : probs) {
    if (p < 0) throw PreconditionError("negative probability");
    if (p != 0) t.probs_.emplace(k, p);
  }
  return t;
}

DistTable DistTable::empirical() { return DistTable(); }

void DistTable::add(const Key& k, std::uint64_t times) {
  if (exact_) throw PreconditionError("cannot add samples to an exact law");
  counts_[k] += times;
  total_ += times;
}

void DistTable::merge(const DistTable& o) {
  if (exact_ || o.exact_) throw PreconditionError("only empirical tables merge");
  for (const auto& [k, c] : o.counts_) add(k, c);
}

std::vector<Key> DistTable::support() const {
  std::vector<Key> keys;
  if (exact_) {
    for (const auto& kv : probs_) keys.push_back(kv.first);
  } else {
    for (const auto& kv : counts_) keys.push_back(kv.first);
  }
  return keys;
}

double DistTable::probability(const Key& k) const {
  if (exact_) {
    auto it = probs_.find(k);
    return it == probs_.end() ? 0.0 : to_double(it->second);
  }
  if (total_ == 0) return 0.0;
  auto it = counts_.find(k);
  return it == counts_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total_);
}

Rational DistTable::exact_probability(const Key& k) const {
  if (exact_) {
    auto it = probs_.find(k);
    return it == probs_.end() ? Rational(0) : it->second;
  }
  Rational r(count(k));
  if (total_ == 0) return r;
  r /= Rational(static_cast<unsigned long>(total_));
  return r;
}

std::uint64_t DistTable::count(const Key& k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

long double DistTable::mean() const {
  long double m = 0;
  if (exact_) {
    for (const auto& [k, p] : probs_) m += static_cast<long double>(k.at(0)) * to_long_double(p);
  } else {
    for (const auto& [k, c] : counts_) m += static_cast<long double>(k.at(0)) * static_cast<long double>(c);
    if (total_ > 0) m /= static_cast<long double>(total_);
  }
  return m * scale_;
}

Rational DistTable::exact_total() const {
  Rational s(0);
  for (const auto& kv : probs_) s += kv.second;
  return s;
}

Key length_key(std::int64_t k) { return Key{k}; }

}  // namespace gasket

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gasket/numeric.hpp"

namespace gasket {

// Outcome key: a length is {k}, a path its vertex ids, a forest its edge ids.
using Key = std::vector<std::int64_t>;

// Either an exact law (support -> rational probability) or an empirical one
// (support -> count). One-coordinate keys may carry a real scale: the
// outcome value is then key[0] * scale.
class DistTable {
 public:
  static DistTable exact_law(std::map<Key, Rational> probs);
  static DistTable empirical();

  bool is_exact() const { return exact_; }
  void add(const Key& k, std::uint64_t times = 1);
  void merge(const DistTable& o);

  std::uint64_t total() const { return total_; }
  std::size_t support_size() const { return exact_ ? probs_.size() : counts_.size(); }
  std::vector<Key> support() const;
  double probability(const Key& k) const;
  Rational exact_probability(const Key& k) const;
  std::uint64_t count(const Key& k) const;
  const std::map<Key, Rational>& exact_probs() const { return probs_; }
  const std::map<Key, std::uint64_t>& counts() const { return counts_; }

  long double scale() const { return scale_; }
  void set_scale(long double s) { scale_ = s; }
  // Mean of key[0] * scale.
  long double mean() const;
  Rational exact_total() const;

 private:
  bool exact_ = false;
  std::map<Key, Rational> probs_;
  std::map<Key, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  long double scale_ = 1;
};

Key length_key(std::int64_t k);

}  // namespace gasket

#pragma once

#include <cstdint>
#include <limits>

namespace gasket {

std::uint64_t mix64(std::uint64_t x);

// Sequential generator: splitmix64 over a keyed counter.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key = 0) : key_(mix64(key)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  double uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Scales a 64-bit draw to [0, n).
inline std::uint64_t scale_below(std::uint64_t draw, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(draw) * n) >> 64);
}

// Counter-based streams: every draw is a pure function of
// (seed, tag, depth, index, slot), so subtrees can be generated in any order.
class RngStream {
 public:
  enum Tag : std::uint64_t {
    kForest = 1,
    kResolve = 2,
    kRefine = 3,
    kPath = 4,
    kInterface = 5,
    kWalk = 6,
    kRoot = 7,
  };

  explicit RngStream(std::uint64_t seed = 0) : seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

  std::uint64_t draw(std::uint64_t tag, int depth, std::uint64_t index, std::uint64_t slot = 0) const;
  Rng sequential(std::uint64_t tag, std::uint64_t id = 0) const;
  RngStream child(std::uint64_t id) const;

 private:
  std::uint64_t seed_;
};

}  // namespace gasket

#include "gasket/rng.hpp"

namespace gasket {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Lemire's method with rejection.
  std::uint64_t x = (*this)();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    std::uint64_t t = (0 - n) % n;
    while (low < t) {
      x = (*this)();
      m = static_cast<unsigned __int128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::draw(std::uint64_t tag, int depth, std::uint64_t index, std::uint64_t slot) const {
  std::uint64_t h = mix64(seed_ ^ mix64(tag));
  h = mix64(h ^ static_cast<std::uint64_t>(depth));
  h = mix64(h ^ index);
  return mix64(h ^ slot);
}

Rng RngStream::sequential(std::uint64_t tag, std::uint64_t id) const { return Rng(draw(tag, -1, id)); }

RngStream RngStream::child(std::uint64_t id) const { return RngStream(mix64(seed_ ^ mix64(id + 0x51ed27ULL))); }

}  // namespace gasket

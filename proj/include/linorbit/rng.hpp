#pragma once

// Counter-based random draws. Every draw is a pure function of the seed and
// a path of integers naming what it is for, so generators are reproducible
// in any language and nested instances share their common parts:
//
//   mix(z)   = SplitMix64 output function applied to z + 0x9E3779B97F4A7C15
//   draw(seed, p1, ..., pk) = mix(... mix(mix(seed ^ p1) ^ p2) ... ^ pk)
//   below(n) = draw % n
//   unit()   = (draw >> 11) * 2^-53

#include <cstdint>
#include <initializer_list>

namespace linorbit {

constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t draw(std::initializer_list<std::uint64_t> path) const {
    std::uint64_t h = seed_;
    for (std::uint64_t p : path) h = mix64(h ^ p);
    return h;
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n, std::initializer_list<std::uint64_t> path) const {
    return draw(path) % n;
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi,
                        std::initializer_list<std::uint64_t> path) const {
    return lo + below(hi - lo + 1, path);
  }

  double unit(std::initializer_list<std::uint64_t> path) const {
    return static_cast<double>(draw(path) >> 11) * 0x1.0p-53;
  }

  bool chance(double p, std::initializer_list<std::uint64_t> path) const {
    return unit(path) < p;
  }

  CounterRng split(std::uint64_t stream) const { return CounterRng(mix64(seed_ ^ stream)); }

 private:
  std::uint64_t seed_;
};

}  // namespace linorbit

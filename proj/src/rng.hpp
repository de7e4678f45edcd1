#pragma once

#include <cstdint>

namespace catlim {

// splitmix64: tiny, well-mixed, and bit-identical on every platform, which
// std::uniform_int_distribution is not. Corpus seeds must replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n); n >= 1. Multiply-shift keeps it deterministic.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) { return next() < static_cast<std::uint64_t>(p * 18446744073709551615.0); }

 private:
  std::uint64_t state_;
};

}  // namespace catlim

#pragma once

#include <cstdint>

#include "error.hpp"

namespace catlim {

// Arithmetic in the prime field F_q. Everything is exact; entries are
// residues 0..q-1 stored in uint8_t.
struct Fq {
  std::uint8_t q = 2;

  Fq() = default;
  explicit Fq(int modulus) {
    require(modulus == 2 || modulus == 3 || modulus == 5, Errc::invalid_argument,
            "field modulus must be one of 2, 3, 5");
    q = static_cast<std::uint8_t>(modulus);
  }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + b) % q);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + q - b) % q);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a * b) % q);
  }
  std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>((q - a) % q); }

  std::uint8_t inv(std::uint8_t a) const {
    require(a % q != 0, Errc::invalid_argument, "zero has no inverse");
    for (std::uint8_t x = 1; x < q; ++x)
      if (mul(a, x) == 1) return x;
    fail(Errc::internal, "inverse scan failed");
  }

  bool operator==(const Fq&) const = default;
};

}  // namespace catlim

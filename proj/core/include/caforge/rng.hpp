#pragma once

#include <cstdint>

#include "caforge/coeff.hpp"

namespace caforge {

// xoshiro256** seeded via splitmix64; identical streams on every platform,
// which keeps seeded test corpora and reports byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t u64() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    std::uint64_t r = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return r;
  }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // multiply-shift rejection keeps the draw unbiased
    for (;;) {
      std::uint64_t x = u64();
      unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= bound || lo >= (0 - bound) % bound) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform field element; over Q an integer in [-span, span].
  Coeff coeff(const Field& f, long span = 20) {
    if (f.is_prime_field())
      return Coeff::from_int(f, static_cast<long>(below(f.modulus())));
    return Coeff::from_int(f, int_in(-span, span));
  }

  Coeff nonzero_coeff(const Field& f, long span = 20) {
    for (;;) {
      Coeff c = coeff(f, span);
      if (!c.is_zero()) return c;
    }
  }

 private:
  std::uint64_t s_[4];
};

}  // namespace caforge

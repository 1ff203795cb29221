#pragma once

#include <cstdint>

#include "ga/multivector.hpp"

namespace ga {

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// distributions so seeded runs are byte-identical across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Dense random multivector with integer coefficients in [-9, 9] on every
// blade (both parts when the field is complex). Zeros simply stay unstored.
inline Multivector random_multivector(const Signature& sig, SplitMix64& rng) {
  Multivector g(sig);
  for (BladeMask m = 0; m < sig.basis_size(); ++m) {
    Rational re(rng.range(-9, 9));
    if (sig.field == Field::Complex) {
      Rational im(rng.range(-9, 9));
      g.add_term(m, Coeff(re, im));
    } else {
      g.add_term(m, Coeff(re));
    }
  }
  return g;
}

}  // namespace ga

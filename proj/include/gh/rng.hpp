#pragma once

#include <cstdint>
#include <random>

#include "gh/scalar.hpp"

namespace gh {

// Seeded sampler whose output depends only on the seed (no library distributions).
class Rng {
 public:
  explicit Rng(uint64_t seed) : e_(seed) {}
  uint64_t next() { return e_(); }
  size_t below(size_t n) { return n ? (size_t)(e_() % n) : 0; }
  int range(int lo, int hi) { return lo + (int)below((size_t)(hi - lo + 1)); }
  bool coin() { return e_() & 1; }
  // Small rationals with numerators in [-3, 3] and denominators in {1, 2}.
  Scalar small_rational() {
    Scalar s(range(-3, 3), range(1, 2));
    s.canonicalize();
    return s;
  }

 private:
  std::mt19937_64 e_;
};

}  // namespace gh

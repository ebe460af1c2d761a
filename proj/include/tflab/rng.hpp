#pragma once

#include <cstdint>
#include <random>

#include "tflab/rational.hpp"

namespace tflab {

/// Deterministic random source. Draws go through explicit modulo reduction
/// instead of std distributions so that a seed produces the same stream on
/// every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  int below(int n) { return n <= 0 ? 0 : int(eng_() % uint64_t(n)); }

  bool coin() { return eng_() & 1; }

  /// Small exact rational: half the time from a fixed pool that exercises
  /// signs and denominators, otherwise a fresh small fraction.
  Rational rational() {
    static const Rational pool[] = {
        {0, 1},  {1, 1},  {-1, 1}, {2, 1},  {-2, 1}, {3, 1},
        {1, 2},  {-1, 2}, {1, 3},  {2, 3},  {5, 1},  {-5, 7},
        {7, 4},  {-3, 5}, {9, 8},  {-9, 8},
    };
    if (coin()) return pool[below(int(std::size(pool)))];
    long long num = below(19) - 9;
    long long den = 1 + below(9);
    return {num, den};
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != Rational(0)) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tflab

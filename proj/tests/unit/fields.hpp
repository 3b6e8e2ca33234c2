#pragma once

#include <random>

#include "negbeta/number_field.hpp"

namespace negbeta::testing {

inline NumberField golden() { return NumberField::from_poly(RationalPoly{-1, -1, 1}, {Rational(3, 2), Rational(7, 4)}); }
inline NumberField smallest_pisot() {
  return NumberField::from_poly(RationalPoly{-1, -1, 0, 1}, {Rational(1), Rational(2)});
}
inline NumberField quartic() { return NumberField::from_poly(RationalPoly{-1, -1, 0, 0, 1}, {Rational(6, 5), Rational(5, 4)}); }
inline NumberField septic() {
  return NumberField::from_poly(RationalPoly{-1, 0, 0, 0, 0, 0, -1, 1}, {Rational(1), Rational(2)});
}

// Deterministic generator of random test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next() { return rng_(); }
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(const Rational& lo, const Rational& hi, long den = 997) {
    return lo + (hi - lo) * ratio(range(1, den - 1), den);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace negbeta::testing

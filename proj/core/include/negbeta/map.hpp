#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negbeta/base.hpp"
#include "negbeta/words.hpp"

namespace negbeta {

struct Step {
  Value value;
  std::uint32_t digit;
};

// T_{-beta}(x) = -beta x + floor(beta x) + 1 on (0,1], digit floor(beta x) + 1.
// Throws OutOfDomain, or NumericAmbiguous on the numeric backend.
Step step_neg(const Base& base, const Value& x);

// T_beta(x) = beta x - floor(beta x) on [0,1], digit floor(beta x).
Step step_pos(const Base& base, const Value& x);

struct Period {
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

struct OrbitRecord {
  Base base;
  std::vector<Value> points;  // T^k(1) for k = 0..N
  Word digits;                // digits[k] = d_{k+1}(1)
  std::optional<Period> period;

  std::size_t steps() const { return digits.size(); }
  // T^k(1); beyond the computed range only when a period is known.
  const Value& point(std::size_t k) const;
  // d_k(1) for k >= 1.
  std::uint32_t digit(std::size_t k) const;
};

// Orbit of 1 under T_{-beta} (or T_beta with positive = true). On the exact
// backend eventual periodicity is detected by hashing; the orbit stops at the
// first repetition when stop_at_period is set. For T_beta, reaching 0 is
// reported as period (n, 1) since 0 is fixed.
OrbitRecord orbit_of_one(const Base& base, std::size_t max_steps, bool stop_at_period = true,
                         bool positive = false);

Word expand_point(const Base& base, const Value& x, std::size_t n);

// Sum_{k>=1} -d_k / (-beta)^k for a finite digit list.
Value eval_expansion(const Base& base, const Word& digits);
// Prefix followed by the infinitely repeated `period` (nonempty).
Value eval_expansion(const Base& base, const Word& prefix, const Word& period);

// 1/(beta+1) - x, the conjugacy to the Ito-Sadahiro interval.
Value conjugate_is(const Value& x, const Base& base);

}  // namespace negbeta

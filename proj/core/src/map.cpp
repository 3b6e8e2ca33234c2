#include "negbeta/map.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "negbeta/error.hpp"

namespace negbeta {
namespace {

std::uint32_t to_digit(const Integer& z) {
  if (sgn(z) < 0 || z > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kOutOfDomain, "digit out of range");
  }
  return static_cast<std::uint32_t>(z.get_ui());
}

}  // namespace

Step step_neg(const Base& base, const Value& x) {
  if (x.sign() <= 0 || (base.one() - x).sign() < 0) {
    throw Error(ErrorCode::kOutOfDomain, "T_{-beta} is defined on (0,1], got " + x.to_decimal(12));
  }
  Value y = base.times_beta(x);
  Integer d = y.floor() + 1;
  return {base.from_rational(Rational(d)) - y, to_digit(d)};
}

Step step_pos(const Base& base, const Value& x) {
  if (x.sign() < 0 || (base.one() - x).sign() < 0) {
    throw Error(ErrorCode::kOutOfDomain, "T_beta is defined on [0,1], got " + x.to_decimal(12));
  }
  Value y = base.times_beta(x);
  Integer d = y.floor();
  return {y - Rational(d), to_digit(d)};
}

const Value& OrbitRecord::point(std::size_t k) const {
  if (k < points.size()) return points[k];
  if (!period) throw std::out_of_range("orbit index beyond computed range");
  std::size_t p = period->preperiod, q = period->period;
  return points[p + (k - p) % q];
}

std::uint32_t OrbitRecord::digit(std::size_t k) const {
  if (k == 0) throw std::out_of_range("digits are indexed from 1");
  if (k <= digits.size()) return digits[k - 1];
  if (!period) throw std::out_of_range("digit index beyond computed range");
  // d_k is the digit produced from T^{k-1}(1).
  std::size_t p = period->preperiod, q = period->period;
  std::size_t idx = p + (k - 1 - p) % q;
  return digits[idx];
}

OrbitRecord orbit_of_one(const Base& base, std::size_t max_steps, bool stop_at_period, bool positive) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  OrbitRecord rec{base, {base.one()}, {}, std::nullopt};
  std::unordered_map<FieldElement, std::size_t, FieldElementHash> seen;
  const bool exact = base.is_exact();
  if (exact) seen.emplace(rec.points[0].element(), 0);
  for (std::size_t k = 0; k < max_steps; ++k) {
    const Value& x = rec.points.back();
    Step s = positive ? step_pos(base, x) : step_neg(base, x);
    rec.digits.push_back(s.digit);
    rec.points.push_back(std::move(s.value));
    if (!exact || rec.period) continue;
    auto [it, inserted] = seen.emplace(rec.points.back().element(), k + 1);
    if (!inserted) {
      rec.period = Period{it->second, k + 1 - it->second};
      if (stop_at_period) break;
    }
  }
  return rec;
}

Word expand_point(const Base& base, const Value& x, std::size_t n) {
  Word w;
  w.reserve(n);
  Value cur = x;
  for (std::size_t k = 0; k < n; ++k) {
    Step s = step_neg(base, cur);
    w.push_back(s.digit);
    cur = std::move(s.value);
  }
  if (n == 0) step_neg(base, x);  // still validates the domain
  return w;
}

Value eval_expansion(const Base& base, const Word& digits) {
  // Horner in u = -1/beta: sum -d_k u^k = u(-d_1 + u(-d_2 + ...)).
  if (digits.empty()) return base.zero();
  Value u = -base.beta().inverse();
  Value acc = base.zero();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = u * (acc - Rational(*it));
  }
  return acc;
}

Value eval_expansion(const Base& base, const Word& prefix, const Word& period) {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  Value u = -base.beta().inverse();
  Value uq = base.one(), up = base.one();
  for (std::size_t i = 0; i < period.size(); ++i) uq = uq * u;
  for (std::size_t i = 0; i < prefix.size(); ++i) up = up * u;
  Value tail = eval_expansion(base, period) * (base.one() - uq).inverse();
  return eval_expansion(base, prefix) + up * tail;
}

Value conjugate_is(const Value& x, const Base& base) {
  return (base.beta() + Rational(1)).inverse() - x;
}

}  // namespace negbeta

#include "negbeta/interval_set.hpp"

#include <algorithm>

namespace negbeta {

IntervalSet::IntervalSet(const Base& base) : base_(base), beta_inv_(base.beta().inverse()) {}

void IntervalSet::add(const Value& lo, const Value& hi) {
  if (compare(lo, hi) < 0) spans_.push_back({lo, hi});
}

void IntervalSet::add(const IntervalSet& other) {
  spans_.insert(spans_.end(), other.spans_.begin(), other.spans_.end());
}

void IntervalSet::normalize() {
  if (spans_.size() < 2) return;
  std::sort(spans_.begin(), spans_.end(),
            [](const Span& a, const Span& b) { return compare(a.lo, b.lo) < 0; });
  std::vector<Span> merged;
  merged.push_back(spans_[0]);
  for (std::size_t i = 1; i < spans_.size(); ++i) {
    Span& cur = merged.back();
    if (compare(spans_[i].lo, cur.hi) <= 0) {
      if (compare(spans_[i].hi, cur.hi) > 0) cur.hi = spans_[i].hi;
    } else {
      merged.push_back(spans_[i]);
    }
  }
  spans_ = std::move(merged);
}

Value IntervalSet::measure() const {
  Value total = base_.zero();
  for (const auto& s : spans_) total += s.hi - s.lo;
  return total;
}

bool IntervalSet::covers(const Value& lo, const Value& hi) const {
  for (const auto& s : spans_) {
    if (compare(s.lo, lo) <= 0 && compare(hi, s.hi) <= 0) return true;
  }
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return std::all_of(spans_.begin(), spans_.end(),
                     [&](const Span& s) { return other.covers(s.lo, s.hi); });
}

bool IntervalSet::same_as(const IntervalSet& other) const {
  return subset_of(other) && other.subset_of(*this);
}

IntervalSet IntervalSet::image() const {
  IntervalSet out(base_);
  for (const auto& s : spans_) {
    // Branch m is {x : floor(beta x) = m}, with boundary points m / beta.
    Integer m_lo = base_.times_beta(s.lo).floor();
    Value bhi = base_.times_beta(s.hi);
    Integer m_hi = bhi.floor();
    if ((bhi - Rational(m_hi)).sign() == 0) m_hi -= 1;
    for (Integer m = m_lo; m <= m_hi; ++m) {
      Value lo = s.lo, hi = s.hi;
      if (m > m_lo) lo = beta_inv_ * Rational(m);
      if (m < m_hi) hi = beta_inv_ * Rational(m + 1);
      Value top = base_.from_rational(Rational(m + 1));
      out.add(top - base_.times_beta(hi), top - base_.times_beta(lo));
    }
  }
  return out;
}

IntervalSet IntervalSet::preimage() const {
  IntervalSet out(base_);
  Integer m_max = base_.beta().floor();
  Value one = base_.one();
  for (const auto& s : spans_) {
    for (Integer m = 0; m <= m_max; ++m) {
      // x = (m + 1 - y) / beta for y in (lo, hi), inside branch m.
      Value lo = (base_.from_rational(Rational(m + 1)) - s.hi) * beta_inv_;
      Value hi = (base_.from_rational(Rational(m + 1)) - s.lo) * beta_inv_;
      if (compare(hi, one) > 0) hi = one;
      out.add(lo, hi);
    }
  }
  return out;
}

}  // namespace negbeta

#pragma once

#include <vector>

#include "negbeta/base.hpp"

namespace negbeta {

struct Span {
  Value lo;
  Value hi;
};

// Finite union of intervals in (0,1], kept up to finitely many points: all
// spans are treated as open and touching spans are merged by normalize().
class IntervalSet {
 public:
  explicit IntervalSet(const Base& base);

  const Base& base() const { return base_; }
  const std::vector<Span>& spans() const { return spans_; }
  std::size_t size() const { return spans_.size(); }
  bool empty() const { return spans_.empty(); }

  // Empty or reversed spans are dropped.
  void add(const Value& lo, const Value& hi);
  void add(const IntervalSet& other);
  // Sorts and merges overlapping or touching spans.
  void normalize();

  Value measure() const;

  // Both sets normalized.
  bool covers(const Value& lo, const Value& hi) const;
  bool subset_of(const IntervalSet& other) const;
  bool same_as(const IntervalSet& other) const;

  // Image and full preimage under T_{-beta}, split along the branches.
  IntervalSet image() const;
  IntervalSet preimage() const;

 private:
  Base base_;
  Value beta_inv_;
  std::vector<Span> spans_;
};

}  // namespace negbeta

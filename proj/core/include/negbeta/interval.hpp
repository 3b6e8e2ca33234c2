#pragma once

#include <string>

#include "negbeta/rational.hpp"

namespace negbeta {

// Closed interval with rational endpoints. Arithmetic is exact; callers
// control growth of the endpoint sizes with rounded().
class RealInterval {
 public:
  RealInterval() = default;
  explicit RealInterval(const Rational& point) : lo_(point), hi_(point) {}
  RealInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool strictly_positive() const { return sgn(lo_) > 0; }
  bool strictly_negative() const { return sgn(hi_) < 0; }
  bool overlaps(const RealInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  // Outward rounding of both endpoints to `bits` significant bits.
  RealInterval rounded(unsigned bits) const;

  RealInterval reciprocal() const;  // throws OutOfDomain if 0 is inside
  RealInterval abs() const;
  // Power with nonnegative integer exponent given as a big integer; the
  // intermediate products are rounded outward to `bits`.
  RealInterval pow(const Integer& exp, unsigned bits) const;

  RealInterval& operator+=(const RealInterval& o);
  RealInterval& operator-=(const RealInterval& o);
  RealInterval& operator*=(const RealInterval& o);
  RealInterval& operator*=(const Rational& c);

  friend RealInterval operator+(RealInterval a, const RealInterval& b) { return a += b; }
  friend RealInterval operator-(RealInterval a, const RealInterval& b) { return a -= b; }
  friend RealInterval operator*(RealInterval a, const RealInterval& b) { return a *= b; }
  friend RealInterval operator*(RealInterval a, const Rational& c) { return a *= c; }
  friend RealInterval operator-(const RealInterval& a) { return RealInterval(-a.hi_, -a.lo_); }

  double approx() const { return to_double(mid()); }
  std::string to_string(int digits = 17) const;

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace negbeta

#include "negbeta/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "negbeta/error.hpp"

namespace negbeta {

RealInterval::RealInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("RealInterval with hi < lo");
}

RealInterval RealInterval::rounded(unsigned bits) const {
  RealInterval r;
  r.lo_ = round_to_bits(lo_, bits, Rounding::kDown);
  r.hi_ = round_to_bits(hi_, bits, Rounding::kUp);
  return r;
}

RealInterval RealInterval::reciprocal() const {
  if (contains_zero()) throw Error(ErrorCode::kOutOfDomain, "reciprocal of an interval containing 0");
  return RealInterval(1 / hi_, 1 / lo_);
}

RealInterval RealInterval::abs() const {
  if (sgn(lo_) >= 0) return *this;
  if (sgn(hi_) <= 0) return -*this;
  return RealInterval(Rational(0), std::max(Rational(-lo_), hi_));
}

RealInterval RealInterval::pow(const Integer& exp, unsigned bits) const {
  if (sgn(exp) < 0) throw std::invalid_argument("negative exponent");
  if (sgn(lo_) < 0) throw std::invalid_argument("RealInterval::pow expects a nonnegative base");
  // Monotone on [0, inf): bound each endpoint separately.
  auto power = [&](const Rational& base, Rounding dir) {
    Rational result = 1;
    Rational b = base;
    std::size_t nbits = bit_length(exp);
    for (std::size_t i = 0; i < nbits; ++i) {
      if (mpz_tstbit(exp.get_mpz_t(), i)) result = round_to_bits(result * b, bits, dir);
      if (i + 1 < nbits) b = round_to_bits(b * b, bits, dir);
    }
    return result;
  };
  return RealInterval(power(lo_, Rounding::kDown), power(hi_, Rounding::kUp));
}

RealInterval& RealInterval::operator+=(const RealInterval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

RealInterval& RealInterval::operator-=(const RealInterval& o) {
  Rational nlo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(nlo);
  return *this;
}

RealInterval& RealInterval::operator*=(const RealInterval& o) {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

RealInterval& RealInterval::operator*=(const Rational& c) {
  lo_ *= c;
  hi_ *= c;
  if (sgn(c) < 0) std::swap(lo_, hi_);
  return *this;
}

std::string RealInterval::to_string(int digits) const {
  return "[" + to_decimal(lo_, digits) + ", " + to_decimal(hi_, digits) + "]";
}

}  // namespace negbeta

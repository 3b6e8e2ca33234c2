#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "negbeta/rational.hpp"

namespace negbeta {

// Dense univariate polynomial over the rationals, lowest degree first. The
// zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<long> int_coeffs);

  static RationalPoly monomial(const Rational& c, std::size_t degree);
  static RationalPoly x() { return monomial(Rational(1), 1); }
  static RationalPoly constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  RationalPoly derivative() const;
  RationalPoly compose(const RationalPoly& inner) const;
  RationalPoly pow(unsigned exp) const;
  RationalPoly monic() const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator-(RationalPoly a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division; throws on division by the zero polynomial.
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

  // Integer coefficient vector c * D where D > 0 is the lcm of denominators.
  std::vector<Integer> scaled_integer_coeffs() const;

  // Human readable, highest degree first, e.g. "X^2 - X - 1".
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Exact sign of p at a rational point, computed on integers.
int sign_at(const RationalPoly& p, const Rational& x);

}  // namespace negbeta

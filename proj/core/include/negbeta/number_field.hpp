#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "negbeta/interval.hpp"
#include "negbeta/polynomial.hpp"
#include "negbeta/real_roots.hpp"

namespace negbeta {

class FieldElement;
struct FieldData;

// Q(beta) for a real root beta > 1 of a monic polynomial, the root being
// pinned down by an isolating rational bracket. Irreducibility of the
// polynomial is the caller's responsibility; with a reducible polynomial
// equality of elements is only a sufficient test for equality of values.
//
// A NumberField is a cheap handle; copies share the same root cache.
class NumberField {
 public:
  // Throws NotBracketed, MultipleRoots or RootNotGreaterThanOne.
  static NumberField from_poly(const RationalPoly& min_poly, const RationalBracket& bracket);
  // The degree one field x - q, for a rational q > 1.
  static NumberField rational(const Rational& q);

  int degree() const;
  const RationalPoly& min_poly() const;
  const RationalBracket& bracket() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_rational(const Rational& q) const;
  // Coefficients lowest degree first; reduced modulo the minimal polynomial.
  FieldElement element(const std::vector<Rational>& coeffs) const;
  FieldElement element(const RationalPoly& p) const;

  // Isolating bracket for beta of width <= width.
  RationalBracket root_bracket(const Rational& width) const;
  RealInterval beta_interval(unsigned bits) const;

  bool same_as(const NumberField& other) const;
  friend bool operator==(const NumberField& a, const NumberField& b) { return a.same_as(b); }

  // Exposed for FieldElement.
  const FieldData& data() const { return *data_; }

 private:
  explicit NumberField(std::shared_ptr<FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<FieldData> data_;
};

class FieldElement {
 public:
  FieldElement(const NumberField& field, std::vector<Rational> reduced_coeffs);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  RationalPoly as_poly() const { return RationalPoly(coeffs_); }

  bool is_zero() const;
  bool is_rational() const;

  // Exact sign of the real value at beta.
  int sign() const;
  Integer floor() const;
  // Rational interval containing the value, of width <= 2^-bits (roughly).
  RealInterval enclosure(unsigned bits) const;
  double to_double() const;

  FieldElement inverse() const;  // OutOfDomain for zero
  FieldElement times_gen() const;
  FieldElement pow(unsigned long exp) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);
  FieldElement& operator+=(const Rational& c);
  FieldElement& operator-=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  friend FieldElement operator+(FieldElement a, const Rational& c) { return a += c; }
  friend FieldElement operator-(FieldElement a, const Rational& c) { return a -= c; }
  friend FieldElement operator-(const Rational& c, const FieldElement& a) { return -a + c; }
  friend FieldElement operator-(FieldElement a);

  // Coefficientwise equality; FieldMismatch for different fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string(const std::string& var = "b") const;

 private:
  void check_same(const FieldElement& o) const;

  NumberField field_;
  std::vector<Rational> coeffs_;
};

int compare(const FieldElement& a, const FieldElement& b);

struct FieldElementHash {
  std::size_t operator()(const FieldElement& a) const { return a.hash(); }
};

}  // namespace negbeta

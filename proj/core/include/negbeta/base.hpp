#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "negbeta/interval.hpp"
#include "negbeta/number_field.hpp"

namespace negbeta {

// Settings of the validated-interval backend.
struct NumericContext {
  RealInterval beta;
  unsigned bits = 256;
  Rational tie_guard = Rational(1, 100000000000000);  // 1e-14
};

// A real number under one of the two backends: an exact element of Q(beta),
// or a rational interval known to contain the value.
class Value {
 public:
  explicit Value(FieldElement e) : rep_(std::move(e)) {}
  Value(RealInterval iv, std::shared_ptr<const NumericContext> ctx)
      : rep_(Numeric{std::move(iv), std::move(ctx)}) {}

  bool is_exact() const { return std::holds_alternative<FieldElement>(rep_); }
  const FieldElement& element() const;
  // Exact values are enclosed to about `bits` bits.
  RealInterval interval(unsigned bits = 64) const;

  // Throws NumericAmbiguous when the numeric enclosure is within the tie
  // guard of zero.
  int sign() const;
  Integer floor() const;
  double to_double() const;
  std::string to_string(int digits = 20) const;  // exact form for exact values
  std::string to_decimal(int digits = 20) const;

  Value inverse() const;

  Value& operator+=(const Value& o);
  Value& operator-=(const Value& o);
  Value& operator*=(const Value& o);
  Value& operator*=(const Rational& c);
  Value& operator+=(const Rational& c);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator*(Value a, const Rational& c) { return a *= c; }
  friend Value operator+(Value a, const Rational& c) { return a += c; }
  friend Value operator-(Value a, const Rational& c) { return a += Rational(-c); }
  friend Value operator-(const Value& a);

  // Exact equality; numeric values are never considered equal.
  bool exactly_equal(const Value& o) const;

 private:
  struct Numeric {
    RealInterval iv;
    std::shared_ptr<const NumericContext> ctx;
  };
  static Numeric& numeric_of(Value& v) { return std::get<Numeric>(v.rep_); }
  void combine(const Value& o, int op);

  std::variant<FieldElement, Numeric> rep_;
};

int compare(const Value& a, const Value& b);

// The base beta > 1 together with the backend used for computations.
class Base {
 public:
  static Base exact(const NumberField& field);
  static Base rational(const Rational& q) { return exact(NumberField::rational(q)); }
  // Numeric backend around an enclosure of beta (lower end must exceed 1).
  static Base numeric(const RealInterval& beta, unsigned bits = 256,
                      const Rational& tie_guard = Rational(1, 100000000000000));

  bool is_exact() const { return field_.has_value(); }
  const NumberField& field() const;
  const std::shared_ptr<const NumericContext>& context() const { return ctx_; }

  Value beta() const;
  Value from_rational(const Rational& q) const;
  Value one() const { return from_rational(Rational(1)); }
  Value zero() const { return from_rational(Rational(0)); }
  // beta * x, with the cheap shift on the exact backend.
  Value times_beta(const Value& x) const;

  RealInterval beta_interval(unsigned bits = 64) const;
  double approx() const { return beta_interval(64).approx(); }
  // "5/4", "x^2 - x - 1 @ [3/2, 7/4]" or "~1.9".
  std::string describe() const;

 private:
  std::optional<NumberField> field_;
  std::shared_ptr<const NumericContext> ctx_;
};

}  // namespace negbeta

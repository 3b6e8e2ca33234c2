#include "negbeta/base.hpp"

#include <stdexcept>

#include "negbeta/error.hpp"

namespace negbeta {

const FieldElement& Value::element() const {
  if (!is_exact()) throw std::logic_error("numeric value has no field element");
  return std::get<FieldElement>(rep_);
}

RealInterval Value::interval(unsigned bits) const {
  if (is_exact()) return element().enclosure(bits);
  return std::get<Numeric>(rep_).iv;
}

int Value::sign() const {
  if (is_exact()) return element().sign();
  const auto& n = std::get<Numeric>(rep_);
  if (n.iv.lo() == n.iv.hi()) return sgn(n.iv.lo());
  if (n.iv.lo() > n.ctx->tie_guard) return 1;
  if (n.iv.hi() < -n.ctx->tie_guard) return -1;
  throw Error(ErrorCode::kNumericAmbiguous,
              "sign undecidable at this precision: " + n.iv.to_string(20));
}

Integer Value::floor() const {
  if (is_exact()) return element().floor();
  const auto& n = std::get<Numeric>(rep_);
  Integer m = negbeta::floor(n.iv.lo());
  if (n.iv.lo() == n.iv.hi()) return m;
  if (negbeta::floor(n.iv.hi()) == m && n.iv.lo() - m > n.ctx->tie_guard &&
      Rational(m + 1) - n.iv.hi() > n.ctx->tie_guard) {
    return m;
  }
  throw Error(ErrorCode::kNumericAmbiguous, "floor undecidable at this precision: " + n.iv.to_string(20));
}

double Value::to_double() const {
  if (is_exact()) return element().to_double();
  return std::get<Numeric>(rep_).iv.approx();
}

std::string Value::to_string(int digits) const {
  if (is_exact()) {
    const auto& e = element();
    if (e.is_rational()) return negbeta::to_string(e.coeffs()[0]);
    return e.to_string("b");
  }
  return to_decimal(digits);
}

std::string Value::to_decimal(int digits) const {
  RealInterval iv = interval(static_cast<unsigned>(digits * 4 + 16));
  return negbeta::to_decimal(iv.mid(), digits);
}

Value Value::inverse() const {
  if (is_exact()) return Value(element().inverse());
  const auto& n = std::get<Numeric>(rep_);
  if (n.iv.contains_zero()) throw Error(ErrorCode::kNumericAmbiguous, "reciprocal of an interval around 0");
  return Value(n.iv.reciprocal().rounded(n.ctx->bits), n.ctx);
}

void Value::combine(const Value& o, int op) {
  if (is_exact() != o.is_exact()) throw Error(ErrorCode::kFieldMismatch, "mixing exact and numeric values");
  if (is_exact()) {
    auto& e = std::get<FieldElement>(rep_);
    if (op == 0) e += o.element();
    if (op == 1) e -= o.element();
    if (op == 2) e *= o.element();
    return;
  }
  auto& n = numeric_of(*this);
  const auto& on = std::get<Numeric>(o.rep_).iv;
  if (op == 0) n.iv += on;
  if (op == 1) n.iv -= on;
  if (op == 2) n.iv *= on;
  n.iv = n.iv.rounded(n.ctx->bits);
}

Value& Value::operator+=(const Value& o) {
  combine(o, 0);
  return *this;
}

Value& Value::operator-=(const Value& o) {
  combine(o, 1);
  return *this;
}

Value& Value::operator*=(const Value& o) {
  combine(o, 2);
  return *this;
}

Value& Value::operator*=(const Rational& c) {
  if (is_exact()) {
    std::get<FieldElement>(rep_) *= c;
  } else {
    auto& n = numeric_of(*this);
    n.iv = (n.iv * c).rounded(n.ctx->bits);
  }
  return *this;
}

Value& Value::operator+=(const Rational& c) {
  if (is_exact()) {
    std::get<FieldElement>(rep_) += c;
  } else {
    auto& n = numeric_of(*this);
    n.iv = (n.iv + RealInterval(c)).rounded(n.ctx->bits);
  }
  return *this;
}

Value operator-(const Value& a) {
  Value r = a;
  r *= Rational(-1);
  return r;
}

bool Value::exactly_equal(const Value& o) const {
  if (!is_exact() || !o.is_exact()) return false;
  return element() == o.element();
}

int compare(const Value& a, const Value& b) { return (a - b).sign(); }

Base Base::exact(const NumberField& field) {
  Base b;
  b.field_ = field;
  return b;
}

Base Base::numeric(const RealInterval& beta, unsigned bits, const Rational& tie_guard) {
  if (!(beta.lo() > 1)) throw Error(ErrorCode::kRootNotGreaterThanOne, "numeric base must exceed 1");
  auto ctx = std::make_shared<NumericContext>();
  ctx->beta = beta;
  ctx->bits = bits;
  ctx->tie_guard = tie_guard;
  Base b;
  b.ctx_ = std::move(ctx);
  return b;
}

const NumberField& Base::field() const {
  if (!field_) throw std::logic_error("numeric base has no number field");
  return *field_;
}

Value Base::beta() const {
  if (field_) return Value(field_->gen());
  return Value(ctx_->beta, ctx_);
}

Value Base::from_rational(const Rational& q) const {
  if (field_) return Value(field_->from_rational(q));
  return Value(RealInterval(q), ctx_);
}

Value Base::times_beta(const Value& x) const {
  if (field_) return Value(x.element().times_gen());
  return beta() * x;
}

RealInterval Base::beta_interval(unsigned bits) const {
  if (field_) return field_->beta_interval(bits);
  return ctx_->beta;
}

std::string Base::describe() const {
  if (!field_) return "~" + negbeta::to_decimal(ctx_->beta.mid(), 20);
  const auto& f = *field_;
  if (f.degree() == 1) return negbeta::to_string(Rational(-f.min_poly().coeff(0)));
  return f.min_poly().to_string("x") + " @ [" + negbeta::to_string(f.bracket().lo) + ", " +
         negbeta::to_string(f.bracket().hi) + "]";
}

}  // namespace negbeta

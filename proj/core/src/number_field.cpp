#include "negbeta/number_field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "negbeta/error.hpp"

namespace negbeta {

namespace {

constexpr std::size_t kBisectionBudget = 1000000;
constexpr unsigned kGcdCheckBits = 2048;

// beta lies in [L, H] / 2^bits; the power tables hold L^i 2^{bits (d-1-i)}
// and the same for H, so a dot product with integer coefficients bounds the
// value times 2^{bits (d-1)}.
struct PrecisionLevel {
  unsigned bits = 0;
  std::vector<Integer> lo_pow;
  std::vector<Integer> hi_pow;
};

}  // namespace

struct FieldData {
  RationalPoly min_poly;
  RationalBracket bracket;
  int degree = 0;

  mutable std::mutex mu;
  mutable RationalBracket refined;
  mutable std::optional<Rational> exact_root;
  mutable std::size_t bisections = 0;
  mutable std::map<unsigned, std::shared_ptr<const PrecisionLevel>> levels;

  // Caller holds mu.
  void refine_to(const Rational& width) const {
    while (!exact_root && refined.width() > width) {
      if (++bisections > kBisectionBudget) {
        throw std::logic_error("root refinement budget exhausted");
      }
      Rational m = refined.mid();
      int sm = sign_at(min_poly, m);
      if (sm == 0) {
        exact_root = m;
        refined = {m, m};
        break;
      }
      if (sm == sign_at(min_poly, refined.lo)) {
        refined.lo = m;
      } else {
        refined.hi = m;
      }
    }
  }

  RationalBracket bracket_of_width(const Rational& width) const {
    std::lock_guard<std::mutex> lock(mu);
    refine_to(width);
    return refined;
  }

  std::shared_ptr<const PrecisionLevel> level(unsigned bits) const {
    std::lock_guard<std::mutex> lock(mu);
    auto it = levels.find(bits);
    if (it != levels.end()) return it->second;
    Rational width(1);
    width /= Integer(1) << bits;
    refine_to(width);
    auto lvl = std::make_shared<PrecisionLevel>();
    lvl->bits = bits;
    Integer scale = Integer(1) << bits;
    Integer L = negbeta::floor(refined.lo * scale);
    Integer H = negbeta::ceil(refined.hi * scale);
    lvl->lo_pow.resize(degree);
    lvl->hi_pow.resize(degree);
    Integer lp = 1, hp = 1;
    for (int i = 0; i < degree; ++i) {
      mp_bitcnt_t shift = static_cast<mp_bitcnt_t>(bits) * (degree - 1 - i);
      lvl->lo_pow[i] = lp << shift;
      lvl->hi_pow[i] = hp << shift;
      lp *= L;
      hp *= H;
    }
    levels.emplace(bits, lvl);
    return lvl;
  }

  std::optional<Rational> root() const {
    std::lock_guard<std::mutex> lock(mu);
    return exact_root;
  }
};

namespace {

// Reduces a coefficient vector modulo the monic minimal polynomial.
std::vector<Rational> reduce(std::vector<Rational> r, const RationalPoly& m) {
  const int d = m.degree();
  const auto& mc = m.coeffs();
  for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
    if (sgn(r[i]) == 0) continue;
    Rational c = r[i];
    for (int j = 0; j < d; ++j) {
      if (sgn(mc[j]) != 0) r[i - d + j] -= c * mc[j];
    }
    r[i] = 0;
  }
  r.resize(d);
  return r;
}

// Integer vector D * coeffs with D > 0.
std::vector<Integer> scaled(const std::vector<Rational>& c, Integer* denom) {
  Integer D = 1;
  for (const auto& q : c) {
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_num() * (D / c[i].get_den());
  if (denom) *denom = D;
  return out;
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = RationalPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace

NumberField NumberField::from_poly(const RationalPoly& min_poly, const RationalBracket& bracket) {
  if (min_poly.degree() < 1) throw Error(ErrorCode::kNotBracketed, "constant polynomial has no root");
  RationalPoly m = min_poly.monic();
  check_isolating(m, bracket);
  RationalBracket b = bracket;
  // Move the lower end to at least 1, or prove the root is not > 1.
  if (b.hi <= 1) throw Error(ErrorCode::kRootNotGreaterThanOne, "bracketed root is <= 1");
  if (b.lo < 1) {
    int s1 = sign_at(m, Rational(1));
    if (s1 == 0 || s1 == sign_at(m, b.hi)) {
      throw Error(ErrorCode::kRootNotGreaterThanOne, "bracketed root is <= 1");
    }
    b.lo = 1;
  }
  auto data = std::make_shared<FieldData>();
  data->min_poly = m;
  data->bracket = bracket;
  data->degree = m.degree();
  data->refined = b;
  if (sign_at(m, b.lo) == 0) {
    // Only possible for a point bracket; check_isolating rules it out.
    throw Error(ErrorCode::kNotBracketed, "root at the bracket end");
  }
  return NumberField(std::move(data));
}

NumberField NumberField::rational(const Rational& q) {
  if (q <= 1) throw Error(ErrorCode::kRootNotGreaterThanOne, "rational base must exceed 1");
  RationalPoly p(std::vector<Rational>{-q, Rational(1)});
  Rational half(1, 2);
  return from_poly(p, {q - half, q + half});
}

int NumberField::degree() const { return data_->degree; }
const RationalPoly& NumberField::min_poly() const { return data_->min_poly; }
const RationalBracket& NumberField::bracket() const { return data_->bracket; }

FieldElement NumberField::zero() const {
  return FieldElement(*this, std::vector<Rational>(data_->degree));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::gen() const {
  std::vector<Rational> c(2);
  c[1] = 1;
  return element(c);
}

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(data_->degree);
  c[0] = q;
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::element(const std::vector<Rational>& coeffs) const {
  return FieldElement(*this, reduce(coeffs, data_->min_poly));
}

FieldElement NumberField::element(const RationalPoly& p) const { return element(p.coeffs()); }

RationalBracket NumberField::root_bracket(const Rational& width) const {
  return data_->bracket_of_width(width);
}

RealInterval NumberField::beta_interval(unsigned bits) const {
  Rational width(1);
  width /= Integer(1) << bits;
  auto b = root_bracket(width);
  return RealInterval(b.lo, b.hi);
}

bool NumberField::same_as(const NumberField& other) const {
  if (data_ == other.data_) return true;
  return data_->min_poly == other.data_->min_poly && data_->bracket.lo == other.data_->bracket.lo &&
         data_->bracket.hi == other.data_->bracket.hi;
}

FieldElement::FieldElement(const NumberField& field, std::vector<Rational> reduced_coeffs)
    : field_(field), coeffs_(std::move(reduced_coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_.degree()) {
    throw std::invalid_argument("FieldElement expects exactly degree coefficients");
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

int FieldElement::sign() const {
  if (is_rational()) return sgn(coeffs_[0]);
  const FieldData& fd = field_.data();
  if (auto r = fd.root()) return sgn(as_poly()(*r));
  std::vector<Integer> a = scaled(coeffs_, nullptr);
  std::size_t coeff_bits = 0;
  for (const auto& z : a) coeff_bits = std::max(coeff_bits, bit_length(z));
  unsigned bits = 64;
  while (bits < coeff_bits + 16) bits *= 2;
  bool gcd_checked = false;
  for (;;) {
    auto lvl = fd.level(bits);
    if (auto r = fd.root()) return sgn(as_poly()(*r));
    Integer lower = 0, upper = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int s = sgn(a[i]);
      if (s > 0) {
        lower += a[i] * lvl->lo_pow[i];
        upper += a[i] * lvl->hi_pow[i];
      } else if (s < 0) {
        lower += a[i] * lvl->hi_pow[i];
        upper += a[i] * lvl->lo_pow[i];
      }
    }
    if (sgn(lower) > 0) return 1;
    if (sgn(upper) < 0) return -1;
    if (!gcd_checked && bits >= kGcdCheckBits) {
      // A nonzero element can only vanish at beta through a common factor
      // with a reducible minimal polynomial.
      gcd_checked = true;
      RationalPoly g = poly_gcd(fd.min_poly, as_poly());
      if (g.degree() >= 1) {
        Rational w(1);
        w /= Integer(1) << bits;
        auto br = field_.root_bracket(w);
        int slo = sign_at(g, br.lo), shi = sign_at(g, br.hi);
        if (slo == 0 || shi == 0 || slo != shi) return 0;
      }
    }
    bits *= 2;
  }
}

RealInterval FieldElement::enclosure(unsigned bits) const {
  if (is_rational()) return RealInterval(coeffs_[0]);
  const FieldData& fd = field_.data();
  if (auto r = fd.root()) return RealInterval(as_poly()(*r));
  Integer D;
  std::vector<Integer> a = scaled(coeffs_, &D);
  std::size_t coeff_bits = 0;
  for (const auto& z : a) coeff_bits = std::max(coeff_bits, bit_length(z));
  unsigned level_bits = 64;
  const std::size_t want = bits + coeff_bits + bit_length(Integer(fd.degree)) * 2 + 8;
  while (level_bits < want) level_bits *= 2;
  auto lvl = fd.level(level_bits);
  if (auto r = fd.root()) return RealInterval(as_poly()(*r));
  Integer lower = 0, upper = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = sgn(a[i]);
    if (s > 0) {
      lower += a[i] * lvl->lo_pow[i];
      upper += a[i] * lvl->hi_pow[i];
    } else if (s < 0) {
      lower += a[i] * lvl->hi_pow[i];
      upper += a[i] * lvl->lo_pow[i];
    }
  }
  Rational denom(D << static_cast<mp_bitcnt_t>(level_bits) * (fd.degree - 1));
  return RealInterval(Rational(lower) / denom, Rational(upper) / denom);
}

Integer FieldElement::floor() const {
  if (is_rational()) return negbeta::floor(coeffs_[0]);
  for (unsigned bits = 16;; bits *= 2) {
    RealInterval enc = enclosure(bits);
    Integer flo = negbeta::floor(enc.lo());
    Integer fhi = negbeta::floor(enc.hi());
    if (flo == fhi) return flo;
    if (enc.width() < 1) {
      return (*this - Rational(fhi)).sign() >= 0 ? fhi : Integer(fhi - 1);
    }
  }
}

double FieldElement::to_double() const { return enclosure(64).approx(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kOutOfDomain, "division by zero in Q(beta)");
  if (is_rational()) return field_.from_rational(1 / coeffs_[0]);
  RationalPoly r0 = field_.min_poly(), r1 = as_poly();
  RationalPoly s0, s1 = RationalPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = RationalPoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) {
    throw Error(ErrorCode::kOutOfDomain, "element not invertible: minimal polynomial is reducible");
  }
  s0 *= 1 / r0.coeff(0);
  return field_.element(s0);
}

FieldElement FieldElement::times_gen() const {
  std::vector<Rational> r(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + 1] = coeffs_[i];
  return FieldElement(field_, reduce(std::move(r), field_.min_poly()));
}

FieldElement FieldElement::pow(unsigned long exp) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exp) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return result;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_.same_as(o.field_)) throw Error(ErrorCode::kFieldMismatch, "elements of different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const std::size_t d = coeffs_.size();
  std::vector<Rational> r(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(o.coeffs_[j]) != 0) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(r), field_.min_poly());
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  return *this;
}

FieldElement& FieldElement::operator+=(const Rational& c) {
  coeffs_[0] += c;
  return *this;
}

FieldElement& FieldElement::operator-=(const Rational& c) {
  coeffs_[0] -= c;
  return *this;
}

FieldElement operator-(FieldElement a) {
  for (auto& q : a.coeffs_) q = -q;
  return a;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

std::size_t FieldElement::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](const mpz_class& z) {
    std::size_t v = mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0;
    v ^= static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1) << 61;
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& q : coeffs_) {
    mix(q.get_num());
    mix(q.get_den());
  }
  return h;
}

std::string FieldElement::to_string(const std::string& var) const {
  return as_poly().to_string(var);
}

int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

}  // namespace negbeta

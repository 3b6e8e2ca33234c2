#include "negbeta/spectra.hpp"

#include <stdexcept>

#include "negbeta/error.hpp"
#include "negbeta/map.hpp"
#include "negbeta/words.hpp"

namespace negbeta {
namespace {

constexpr unsigned long kExactExponentLimit = 1ul << 16;

unsigned working_bits(const Integer& e, unsigned extra) {
  return static_cast<unsigned>(64 + 2 * bit_length(e)) + extra;
}

// Sign of p at the rational point x: interval evaluation first, exact
// evaluation when the exponents are small enough.
int sign_at_rational(const SparsePoly& p, const Rational& x) {
  Integer emax = p.max_exp();
  for (unsigned extra = 0; extra <= 4096; extra = extra ? extra * 2 : 64) {
    RealInterval v = p.eval(RealInterval(x), working_bits(emax, extra));
    if (v.strictly_positive()) return 1;
    if (v.strictly_negative()) return -1;
    if (emax <= kExactExponentLimit) return sgn(p.eval_exact(x));
  }
  throw std::logic_error("sparse polynomial sign undecided");
}

SpectralIndex bisect(unsigned n, Chain chain, SparsePoly poly, Rational lo, Rational hi,
                     const Rational& tol) {
  int slo = sign_at_rational(poly, lo);
  if (slo == 0) return {n, chain, {lo, lo}, std::move(poly)};
  while (hi - lo > tol) {
    Rational m = (lo + hi) / 2;
    int sm = sign_at_rational(poly, m);
    if (sm == 0) return {n, chain, {m, m}, std::move(poly)};
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return {n, chain, {lo, hi}, std::move(poly)};
}

}  // namespace

Integer SparsePoly::max_exp() const {
  Integer m = 0;
  for (const auto& t : terms) m = std::max(m, t.exp);
  return m;
}

RealInterval SparsePoly::eval(const RealInterval& x, unsigned bits) const {
  RealInterval acc(Rational(0));
  for (const auto& t : terms) acc += x.pow(t.exp, bits) * Rational(t.coeff);
  return acc;
}

Rational SparsePoly::eval_exact(const Rational& x) const {
  Rational acc = 0;
  for (const auto& t : terms) acc += Rational(t.coeff) * pow(x, t.exp.get_ui());
  return acc;
}

FieldElement SparsePoly::eval_exact(const FieldElement& x) const {
  FieldElement acc = x.field().zero();
  for (const auto& t : terms) acc += x.pow(t.exp.get_ui()) * Rational(t.coeff);
  return acc;
}

std::string SparsePoly::to_string(const std::string& var) const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += sgn(t.coeff) < 0 ? " - " : " + ";
    else if (sgn(t.coeff) < 0) s += "-";
    Integer c = abs(t.coeff);
    std::string mono = t.exp == 0 ? "" : (t.exp == 1 ? var : var + "^" + negbeta::to_string(t.exp));
    if (mono.empty()) s += negbeta::to_string(c);
    else s += (c == 1 ? "" : negbeta::to_string(c) + "*") + mono;
  }
  return s.empty() ? "0" : s;
}

SparsePoly gamma_poly(unsigned n) {
  return SparsePoly{{{Integer(1), g(n) + 1}, {Integer(-1), Integer(1)}, {Integer(-1), Integer(0)}}};
}

SparsePoly eta_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("eta is defined for n >= 1");
  Integer low = n % 2 == 1 ? 1 : 0;
  SparsePoly p{{{Integer(1), g(n) + 1}, {Integer(-1), g(n - 1) + 1}}};
  p.terms.push_back({Integer(-1), low});
  return p;
}

SpectralIndex gamma(unsigned n, const Rational& tol) {
  if (n == 0) throw std::invalid_argument("gamma_0 is infinite");
  // (1 + 4/e)^e >= 5 > x + 1 with e = g_n + 1, so the root lies below.
  Rational hi = std::min<Rational>(Rational(2), Rational(1) + Rational(4) / Rational(g(n) + 1));
  return bisect(n, Chain::kGamma, gamma_poly(n), Rational(1), hi, tol);
}

SpectralIndex eta(unsigned n, const Rational& tol) {
  if (n == 0) throw std::invalid_argument("eta is defined for n >= 1");
  // With D = g_n - g_{n-1}, at x = 1 + 4/D the leading difference is at
  // least 4 x^{g_{n-1}+1} > x^{(1-(-1)^n)/2}.
  Rational hi = Rational(1) + Rational(4) / Rational(g(n) - g(n - 1));
  return bisect(n, Chain::kEta, eta_poly(n), Rational(1), hi, tol);
}

int sign_at(const SparsePoly& p, const Base& base) {
  Integer emax = p.max_exp();
  if (!base.is_exact()) {
    const auto& ctx = *base.context();
    RealInterval v = p.eval(ctx.beta, std::max(ctx.bits, working_bits(emax, 0)));
    if (v.lo() > ctx.tie_guard) return 1;
    if (v.hi() < -ctx.tie_guard) return -1;
    throw Error(ErrorCode::kNumericAmbiguous, "polynomial sign at beta undecidable: " + v.to_string(20));
  }
  for (unsigned extra = 0; extra <= 1024; extra = extra ? extra * 2 : 64) {
    unsigned bits = working_bits(emax, extra);
    RealInterval v = p.eval(base.beta_interval(bits), bits);
    if (v.strictly_positive()) return 1;
    if (v.strictly_negative()) return -1;
    if (emax <= kExactExponentLimit) return p.eval_exact(base.field().gen()).sign();
  }
  throw Error(ErrorCode::kNumericAmbiguous, "sign of a huge-degree polynomial at beta undecided");
}

bool certified_greater(const SpectralIndex& a, const SpectralIndex& b) {
  Integer emax = b.poly.max_exp();
  RealInterval x(a.bracket.lo, a.bracket.hi);
  return b.poly.eval(x, working_bits(emax, 128)).strictly_positive();
}

bool prefix_predicate(const Base& beta, unsigned n) {
  if (n == 0) throw std::invalid_argument("prefix level starts at 1");
  if (n == 1) {
    // beta (beta - 1)^2 < 1
    SparsePoly p{{{Integer(1), Integer(3)}, {Integer(-2), Integer(2)}, {Integer(1), Integer(1)},
                  {Integer(-1), Integer(0)}}};
    return sign_at(p, beta) < 0;
  }
  int s = sign_at(eta_poly(n), beta);
  return n % 2 == 0 ? s <= 0 : s < 0;
}

BetaClass classify(const Base& beta, unsigned cap) {
  if (!(beta.beta_interval(64).hi() > 1)) throw Error(ErrorCode::kRootNotGreaterThanOne, "beta must exceed 1");
  BetaClass out{beta, 0, Integer(0), 0};
  unsigned n = 0;
  // beta < gamma_{n+1} iff gamma_poly(n+1)(beta) < 0.
  while (sign_at(gamma_poly(n + 1), beta) < 0) {
    ++n;
    if (n > cap) throw Error(ErrorCode::kUnboundedIndex, "gamma band index exceeds the cap");
  }
  out.gamma_n = n;
  out.gap_count = g(n);
  unsigned level = 0;
  while (prefix_predicate(beta, level + 1)) {
    ++level;
    if (level > cap) throw Error(ErrorCode::kUnboundedIndex, "prefix level exceeds the cap");
  }
  out.prefix_level = level;
  return out;
}

bool prefix_check(const Base& beta, unsigned n) {
  Word target = phi_iter(Word{2}, n);
  Value x = beta.one();
  for (std::uint32_t want : target) {
    Step s = step_neg(beta, x);
    if (s.digit != want) return false;
    x = std::move(s.value);
  }
  return true;
}

}  // namespace negbeta

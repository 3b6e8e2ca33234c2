#include "negbeta/real_roots.hpp"

#include <vector>

#include "negbeta/error.hpp"

namespace negbeta {
namespace {

// In place Taylor shift: coefficients of p(x + 1).
void taylor_shift_one(std::vector<Rational>& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  }
}

// Coefficients of p(a + x).
std::vector<Rational> shift_by(const std::vector<Rational>& p, const Rational& a) {
  std::vector<Rational> out(p.size());
  // Horner in the ring Q[x]: acc = acc * (x + a) + c.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    for (std::size_t j = out.size() - 1; j > 0; --j) out[j] = out[j] * a + out[j - 1];
    out[0] = out[0] * a + *it;
  }
  return out;
}

}  // namespace

std::size_t descartes_variations(const RationalPoly& p, const RationalBracket& bracket) {
  if (p.degree() <= 0) return 0;
  // p1(x) = p(lo + w x), roots in (0, 1).
  std::vector<Rational> c = shift_by(p.coeffs(), bracket.lo);
  Rational w = bracket.width();
  Rational wp = 1;
  for (auto& x : c) {
    x *= wp;
    wp *= w;
  }
  // Reverse: roots in (1, inf); then shift by one: roots in (0, inf).
  std::vector<Rational> r(c.rbegin(), c.rend());
  taylor_shift_one(r);
  std::size_t variations = 0;
  int last = 0;
  for (const auto& x : r) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

void check_isolating(const RationalPoly& p, const RationalBracket& bracket) {
  if (!(bracket.lo < bracket.hi)) {
    throw Error(ErrorCode::kNotBracketed, "bracket must satisfy lo < hi");
  }
  int slo = sign_at(p, bracket.lo);
  int shi = sign_at(p, bracket.hi);
  if (slo * shi >= 0) {
    throw Error(ErrorCode::kNotBracketed,
                "no strict sign change of " + p.to_string() + " on [" + to_string(bracket.lo) + ", " +
                    to_string(bracket.hi) + "]");
  }
  if (descartes_variations(p, bracket) >= 2) {
    throw Error(ErrorCode::kMultipleRoots, "sign-variation count >= 2 for " + p.to_string() + " on [" +
                                               to_string(bracket.lo) + ", " + to_string(bracket.hi) + "]");
  }
}

RationalBracket real_root(const RationalPoly& p, RationalBracket bracket, const Rational& tol) {
  check_isolating(p, bracket);
  int slo = sign_at(p, bracket.lo);
  while (bracket.width() > tol) {
    Rational m = bracket.mid();
    int sm = sign_at(p, m);
    if (sm == 0) return {m, m};
    if (sm == slo) {
      bracket.lo = m;
    } else {
      bracket.hi = m;
    }
  }
  return bracket;
}

}  // namespace negbeta

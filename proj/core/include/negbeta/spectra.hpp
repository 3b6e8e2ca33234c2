#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negbeta/base.hpp"
#include "negbeta/interval.hpp"
#include "negbeta/real_roots.hpp"

namespace negbeta {

// Integer polynomial with few terms and possibly huge exponents.
struct SparsePoly {
  struct Term {
    Integer coeff;
    Integer exp;
  };
  std::vector<Term> terms;

  Integer max_exp() const;
  // Enclosure of the value over a nonnegative interval.
  RealInterval eval(const RealInterval& x, unsigned bits) const;
  Rational eval_exact(const Rational& x) const;
  FieldElement eval_exact(const FieldElement& x) const;
  std::string to_string(const std::string& var = "x") const;
};

enum class Chain { kGamma, kEta };

struct SpectralIndex {
  unsigned n = 0;
  Chain chain = Chain::kGamma;
  RationalBracket bracket;
  SparsePoly poly;
};

// x^{g_n+1} - x - 1.
SparsePoly gamma_poly(unsigned n);
// x^{g_n+1} - x^{g_{n-1}+1} - x^{(1-(-1)^n)/2}.
SparsePoly eta_poly(unsigned n);

// Root of gamma_poly(n) in (1,2), bracket width <= tol.
SpectralIndex gamma(unsigned n, const Rational& tol);
// Root > 1 of eta_poly(n); eta_1 = 2 comes back as a point bracket.
SpectralIndex eta(unsigned n, const Rational& tol);

// Sign of p(beta), exact for exact bases.
int sign_at(const SparsePoly& p, const Base& base);

// Certifies root(b) < root(a) by evaluating b.poly over a's bracket.
bool certified_greater(const SpectralIndex& a, const SpectralIndex& b);

struct BetaClass {
  Base beta;
  unsigned gamma_n = 0;       // gamma_{n+1} <= beta < gamma_n
  Integer gap_count;          // g_n
  unsigned prefix_level = 0;  // largest n with d(1) starting with phi^n(2)
};

// Throws UnboundedIndex when the band or prefix index exceeds `cap`.
BetaClass classify(const Base& beta, unsigned cap = 64);

// The inequality criterion for d_{-beta}(1) to start with phi^n(2):
// beta (beta-1)^2 < 1 for n = 1, eta_poly(n)(beta) <= 0 for even n and < 0
// for odd n >= 3.
bool prefix_predicate(const Base& beta, unsigned n);

// Simulates |phi^n(2)| digits of d_{-beta}(1) and compares with phi^n(2).
bool prefix_check(const Base& beta, unsigned n);

}  // namespace negbeta

#pragma once

#include <cstddef>

#include "negbeta/polynomial.hpp"

namespace negbeta {

struct RationalBracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

// Descartes sign-variation count for the roots of p in the open interval
// (lo, hi), via the Moebius map x -> (lo + hi*x) / (1 + x). Zero means no
// root, one means exactly one root, larger values are upper bounds with the
// parity of the true count.
std::size_t descartes_variations(const RationalPoly& p, const RationalBracket& bracket);

// Validates that p has exactly one (simple) root in the bracket: a strict
// sign change at the endpoints and a Descartes count of one.
// Throws NotBracketed or MultipleRoots.
void check_isolating(const RationalPoly& p, const RationalBracket& bracket);

// Bisection with exact rational evaluation until the width is <= tol. The
// returned bracket still has a strict sign change (or is a point on an exact
// rational root).
RationalBracket real_root(const RationalPoly& p, RationalBracket bracket, const Rational& tol);

}  // namespace negbeta

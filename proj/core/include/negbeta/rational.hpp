#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace negbeta {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms; the two-argument mpq_class constructor does not
// canonicalize.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

enum class Rounding { kDown, kUp };

// Accepts "p/q", integers and plain decimals ("1.25", "-0.5", "3e-2").
// Decimals are converted exactly, so "1.25" is 5/4.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Decimal rendering with `digits` digits after the point, rounded to nearest.
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);

// Rounds q to a dyadic number with at most `bits` significant bits, in the
// given direction. Zero stays zero.
Rational round_to_bits(const Rational& q, unsigned bits, Rounding dir);

// Rational bounds on sqrt(q) for q >= 0, accurate to about 2^-bits relative.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

std::size_t bit_length(const Integer& z);

}  // namespace negbeta

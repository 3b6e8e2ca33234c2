#include "negbeta/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "negbeta/error.hpp"

namespace negbeta {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::kParse, "not an integer: '" + std::string(s) + "'");
  }
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer num(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational q(num);
  Integer ten_pow = pow(Integer(10), static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    q *= ten_pow;
  } else {
    q /= ten_pow;
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kParse, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_decimal(const Rational& q, int digits) {
  digits = std::max(digits, 0);
  Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer n = floor(scaled);
  std::string s = n.get_str(10);
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign(q) < 0 && n != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rational& q) {
  // mpq_get_d truncates; good enough for reporting, never used for decisions.
  return q.get_d();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

std::size_t bit_length(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

Rational round_to_bits(const Rational& q, unsigned bits, Rounding dir) {
  if (q == 0) return q;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  // 2^(e-1) <= |q| < 2^(e+1) with e = len(num) - len(den).
  long e = static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den));
  long shift = static_cast<long>(bits) - e;
  Integer scaled_num = num;
  Integer scaled_den = den;
  if (shift >= 0) {
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_mul_2exp(scaled_den.get_mpz_t(), scaled_den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  Integer m;
  if (dir == Rounding::kDown) {
    mpz_fdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  } else {
    mpz_cdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  }
  Rational r(m);
  if (shift >= 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return r;
}

namespace {

// floor(sqrt(q * 4^k)) / 2^k and its ceiling counterpart.
Rational sqrt_bound(const Rational& q, unsigned bits, bool upper) {
  if (sign(q) < 0) throw Error(ErrorCode::kOutOfDomain, "sqrt of a negative number");
  if (q == 0) return q;
  long e = (static_cast<long>(bit_length(q.get_num())) - static_cast<long>(bit_length(q.get_den()))) / 2;
  long k = static_cast<long>(bits) - e + 2;
  if (k < 0) k = 0;
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(2 * k));
  Integer f = upper ? ceil(scaled) : floor(scaled);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), f.get_mpz_t());
  if (upper && root * root < f) root += 1;
  Rational r(root);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

}  // namespace

Rational sqrt_lower(const Rational& q, unsigned bits) { return sqrt_bound(q, bits, false); }
Rational sqrt_upper(const Rational& q, unsigned bits) { return sqrt_bound(q, bits, true); }

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, unsigned long exp) {
  Integer num = pow(base.get_num(), exp);
  Integer den = pow(base.get_den(), exp);
  return Rational(num, den);  // already canonical: gcd(num^e, den^e) = 1
}

}  // namespace negbeta

#include "negbeta/polynomial.hpp"

#include <stdexcept>

namespace negbeta {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<long> int_coeffs) {
  coeffs_.reserve(int_coeffs.size());
  for (long c : int_coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

RationalPoly RationalPoly::pow(unsigned exp) const {
  RationalPoly result = constant(Rational(1));
  RationalPoly base = *this;
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  RationalPoly r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  // Sparse-friendly: many of the word polynomials and product factors have
  // mostly zero coefficients.
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (b.coeffs_[j] != 0) nz_b.push_back(j);
  }
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j : nz_b) {
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalPoly operator-(RationalPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[static_cast<std::size_t>(i)] == 0) continue;
    Rational f = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

std::vector<Integer> RationalPoly::scaled_integer_coeffs() const {
  Integer lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num() * (lcm_den / c.get_den()));
  return out;
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) s += negbeta::to_string(mag);
    if (i >= 1) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

int sign_at(const RationalPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // p(n/d) * d^deg = sum a_i n^i d^(deg-i); Horner on integers.
  std::vector<Integer> a = p.scaled_integer_coeffs();
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = a.back();
  Integer dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + a[static_cast<std::size_t>(i)] * dpow;
  }
  return sgn(acc);
}

}  // namespace negbeta

#include "negbeta/words.hpp"

#include <random>
#include <stdexcept>

#include "negbeta/error.hpp"

namespace negbeta {

Word word_from_string(std::string_view text) {
  Word w;
  bool comma = text.find(',') != std::string_view::npos;
  if (!comma) {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorCode::kParse, "bad digit in word: " + std::string(text));
      w.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return w;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string part(text.substr(start, end - start));
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kParse, "bad digit in word: " + std::string(text));
    }
    w.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    start = end + 1;
  }
  return w;
}

std::string to_string(const Word& w) {
  bool wide = false;
  for (auto d : w) wide = wide || d > 9;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide) {
      if (i) s += ',';
      s += std::to_string(w[i]);
    } else {
      s += static_cast<char>('0' + w[i]);
    }
  }
  return s;
}

Word phi(const Word& w) {
  Word out;
  out.reserve(w.size() * 2);
  for (auto a : w) {
    if (a == 1) {
      out.push_back(2);
    } else if (a == 2) {
      out.insert(out.end(), {2, 1, 1});
    } else {
      throw Error(ErrorCode::kBadAlphabet, "phi is defined on {1,2} only, got " + std::to_string(a));
    }
  }
  return out;
}

Word phi_iter(const Word& w, unsigned n) {
  Word cur = w;
  for (auto a : cur) {
    if (a != 1 && a != 2) throw Error(ErrorCode::kBadAlphabet, "phi is defined on {1,2} only");
  }
  for (unsigned i = 0; i < n; ++i) cur = phi(cur);
  return cur;
}

Integer g(unsigned n) { return (Integer(1) << (n + 1)) / 3; }

WordLengths word_lengths(unsigned n) {
  Integer p = Integer(1) << (n + 1);
  Integer sign = (n % 2 == 0) ? 1 : -1;
  WordLengths out{(p + sign) / 3, (2 * p - sign) / 3, g(n)};
  // |phi(w)|_1 = |w|_2 * 2 and |phi(w)|_2 = |w|_1 + |w|_2 on letter counts.
  Integer ones = 1, twos = 0;
  for (unsigned i = 0; i < n; ++i) {
    Integer new_ones = 2 * twos;
    twos = ones + twos;
    ones = new_ones;
  }
  if (ones + twos != out.len1) throw std::logic_error("length identity for phi^n(1) failed");
  Integer next_ones = 2 * twos, next_twos = ones + twos;
  if (next_ones + next_twos != out.len2) throw std::logic_error("length identity for phi^n(2) failed");
  return out;
}

LimitStream::LimitStream() : buf_{2, 1, 1} {}

std::uint32_t LimitStream::next() {
  while (pos_ >= buf_.size()) {
    std::uint32_t a = buf_[expanded_++];
    if (a == 1) {
      buf_.push_back(2);
    } else {
      buf_.insert(buf_.end(), {2, 1, 1});
    }
  }
  return buf_[pos_++];
}

Word LimitStream::take(std::size_t n) {
  Word w(n);
  for (auto& a : w) a = next();
  return w;
}

Word limit_word(std::size_t n) { return LimitStream().take(n); }

Order alt_cmp(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    bool odd = (i + 1) % 2 == 1;
    // (-1)^k (a_k - b_k) > 0
    bool less = odd ? a[i] < b[i] : a[i] > b[i];
    return less ? Order::kLess : Order::kGreater;
  }
  return Order::kEqual;
}

RationalPoly p_poly(const Word& w) {
  // Unrolling P <- -X * P + a gives (-X)^L + sum a_k (-X)^(L-k).
  const std::size_t L = w.size();
  std::vector<Rational> c(L + 1);
  c[L] = L % 2 == 0 ? 1 : -1;
  for (std::size_t k = 1; k <= L; ++k) c[L - k] = (L - k) % 2 == 0 ? Rational(w[k - 1]) : -Rational(w[k - 1]);
  return RationalPoly(std::move(c));
}

namespace {

RationalPoly xpow(const Integer& e) { return RationalPoly::monomial(Rational(1), e.get_ui()); }

RationalPoly product_up_to(unsigned n_exclusive) {
  RationalPoly prod = RationalPoly::constant(Rational(1));
  for (unsigned m = 0; m < n_exclusive; ++m) {
    prod *= xpow(word_lengths(m).len1) - RationalPoly::constant(Rational(1));
  }
  return prod;
}

}  // namespace

std::vector<IdentityResult> verify_identities(unsigned n_max, std::uint64_t seed) {
  std::vector<IdentityResult> out;
  const RationalPoly one = RationalPoly::constant(Rational(1));
  const RationalPoly X = RationalPoly::x();

  {
    std::mt19937_64 rng(seed);
    bool pass = true;
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t k = 2 + rng() % 63;
      std::size_t j = 1 + rng() % (k - 1);
      Word w(k);
      for (auto& a : w) a = 1 + rng() % 2;
      Word head(w.begin(), w.begin() + j), tail(w.begin() + j, w.end());
      RationalPoly sign_pow = RationalPoly::monomial(Rational((k - j) % 2 == 0 ? 1 : -1), k - j);
      RationalPoly rhs = sign_pow * (p_poly(head) - one) + p_poly(tail);
      pass = pass && rhs == p_poly(w);
    }
    out.push_back({"split", 0, pass});
  }

  const Word w1{1}, w2{2}, w11{1, 1}, w21{2, 1};
  for (unsigned n = 0; n <= n_max; ++n) {
    const bool even = n % 2 == 0;
    const RationalPoly xe = even ? X : one;  // X^{(1+(-1)^n)/2}
    const RationalPoly xo = even ? one : X;  // X^{(1-(-1)^n)/2}
    RationalPoly P1 = p_poly(phi_iter(w1, n));
    RationalPoly P2 = p_poly(phi_iter(w2, n));
    RationalPoly P11 = p_poly(phi_iter(w11, n));
    RationalPoly P21 = p_poly(phi_iter(w21, n));
    RationalPoly P2next = p_poly(phi_iter(w2, n + 1));
    Integer gn = g(n), gn1 = g(n + 1);
    RationalPoly prod = product_up_to(n);
    RationalPoly prod_incl = prod * (xpow(word_lengths(n).len1) - one);
    RationalPoly gamma_poly = xpow(gn1 + 1) - X - one;

    out.push_back({"x_plus_one", n, xe * P2 + xo * P11 == X + one});
    out.push_back({"poly1", n, one - P1 == xe * prod});
    out.push_back({"poly2", n, P21 - one == (xpow(gn1 + 1) - xpow(gn + 1) - xe) * prod});
    out.push_back({"poly3", n, P21 - P2 == gamma_poly * prod});
    out.push_back({"poly4", n, P2 - P2next == gamma_poly * prod_incl});
  }
  return out;
}

ParikhReport parikh_digit_consistency(unsigned n) {
  ParikhReport r;
  std::size_t l1 = phi_iter(Word{1}, n).size();
  std::size_t l2 = phi_iter(Word{2}, n).size();
  std::size_t l21 = phi_iter(Word{2, 1}, n).size();
  r.len1_odd = l1 % 2 == 1;
  r.len2_odd = l2 % 2 == 1;
  r.len21_power_of_two = l21 == (std::size_t{1} << (n + 1));
  return r;
}

}  // namespace negbeta

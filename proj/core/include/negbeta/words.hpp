#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "negbeta/polynomial.hpp"
#include "negbeta/rational.hpp"

namespace negbeta {

using Word = std::vector<std::uint32_t>;

// "211" <-> {2,1,1}. Digits above 9 are written comma separated, e.g. "3,10,1".
Word word_from_string(std::string_view text);
std::string to_string(const Word& w);

// The morphism 1 -> 2, 2 -> 211 applied n times. Throws BadAlphabet.
Word phi(const Word& w);
Word phi_iter(const Word& w, unsigned n);

// g_n = floor(2^{n+1} / 3).
Integer g(unsigned n);

struct WordLengths {
  Integer len1;  // |phi^n(1)|
  Integer len2;  // |phi^n(2)|
  Integer g;     // g_n
};

// Closed forms, cross-checked against the substitution recursion.
WordLengths word_lengths(unsigned n);

// Lazily generated fixed point 211222112112... of phi.
class LimitStream {
 public:
  LimitStream();
  std::uint32_t next();
  Word take(std::size_t n);

 private:
  Word buf_;
  std::size_t expanded_ = 1;  // letters of buf_ already substituted
  std::size_t pos_ = 0;
};

Word limit_word(std::size_t n);

enum class Order { kLess, kEqual, kGreater };

// Alternate order: at the first differing position k (1-based), a < b iff
// (-1)^k (a_k - b_k) > 0. Only the common prefix is compared.
Order alt_cmp(const Word& a, const Word& b);

// P_{wa} = -X P_w + a with P of the empty word equal to 1, so that
// P_w(beta) = f_{beta,w}(1).
RationalPoly p_poly(const Word& w);

struct IdentityResult {
  std::string identity;
  unsigned n = 0;
  bool pass = false;
};

// Exact polynomial checks of the split identity (50 random splits), the X+1
// identity and the four product identities for 0 <= n <= n_max.
std::vector<IdentityResult> verify_identities(unsigned n_max, std::uint64_t seed = 20240601);

struct ParikhReport {
  bool len1_odd = false;
  bool len2_odd = false;
  bool len21_power_of_two = false;
  bool ok() const { return len1_odd && len2_odd && len21_power_of_two; }
};

ParikhReport parikh_digit_consistency(unsigned n);

}  // namespace negbeta

#include <gtest/gtest.h>

#include "fields.hpp"
#include "negbeta/error.hpp"
#include "negbeta/words.hpp"

using namespace negbeta;
using negbeta::testing::Gen;

TEST(Phi, Examples) {
  EXPECT_EQ(to_string(phi_iter(word_from_string("2"), 1)), "211");
  EXPECT_EQ(to_string(phi_iter(word_from_string("2121"), 0)), "2121");
  Word w = phi_iter(word_from_string("2"), 3);
  EXPECT_EQ(to_string(w), "21122211211");
  EXPECT_EQ(w.size(), 11u);
  EXPECT_THROW(phi(Word{3}), Error);
}

TEST(WordLengths, Examples) {
  auto l0 = word_lengths(0);
  EXPECT_EQ(l0.len1, 1);
  EXPECT_EQ(l0.len2, 1);
  EXPECT_EQ(l0.g, 0);
  auto l3 = word_lengths(3);
  EXPECT_EQ(l3.len1, 5);
  EXPECT_EQ(l3.len2, 11);
  EXPECT_EQ(l3.g, 5);
  const int gaps[] = {1, 2, 5, 10};
  for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(g(n), gaps[n - 1]);
}

TEST(WordLengths, MatchDirectExpansion) {
  for (unsigned n = 0; n <= 14; ++n) {
    auto l = word_lengths(n);
    EXPECT_EQ(l.len1, static_cast<long>(phi_iter(Word{1}, n).size()));
    EXPECT_EQ(phi_iter(Word{2, 1}, n).size(), std::size_t{1} << (n + 1));
  }
}

TEST(LimitWord, Examples) {
  EXPECT_EQ(to_string(limit_word(21)), "211222112112112221122");
  EXPECT_EQ(limit_word(1), Word{2});
  EXPECT_EQ(limit_word(11), phi_iter(Word{2}, 3));
  LimitStream s;
  EXPECT_EQ(s.take(5), word_from_string("21122"));
  EXPECT_EQ(s.next(), 2u);
}

TEST(LimitWord, FixedPointProperty) {
  const std::size_t n = 100000;
  Word w = limit_word(n);
  Word image = phi(w);
  ASSERT_GE(image.size(), n);
  EXPECT_TRUE(std::equal(w.begin(), w.end(), image.begin()));
}

TEST(LimitWord, ThueMorseRunLengths) {
  const std::size_t n = 10000;
  std::vector<int> tm(n);
  for (std::size_t i = 0; i < n; ++i) tm[i] = __builtin_popcountll(i) & 1;
  Word runs;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && tm[j] == tm[i]) ++j;
    if (j == n) break;  // last run may be cut off
    runs.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  Word expect{1};
  Word lw = limit_word(runs.size() - 1);
  expect.insert(expect.end(), lw.begin(), lw.end());
  EXPECT_EQ(runs, expect);
}

TEST(LimitWord, NoShortPeriod) {
  Word w = limit_word(10000);
  for (std::size_t p = 1; p <= 3000; ++p) {
    bool periodic = true;
    for (std::size_t i = 0; i + p < w.size() && periodic; ++i) periodic = w[i] == w[i + p];
    EXPECT_FALSE(periodic) << p;
  }
}

TEST(AltCmp, Examples) {
  EXPECT_EQ(alt_cmp(word_from_string("2112"), word_from_string("2112")), Order::kEqual);
  EXPECT_EQ(alt_cmp(word_from_string("1"), word_from_string("2")), Order::kLess);
  EXPECT_EQ(alt_cmp(word_from_string("21"), word_from_string("22")), Order::kGreater);
  // the suffix 1111 of 21111 is smaller
  EXPECT_EQ(alt_cmp(word_from_string("1111"), word_from_string("21111")), Order::kLess);
}

TEST(AltCmp, Antisymmetric) {
  Gen rng(5);
  for (int i = 0; i < 500; ++i) {
    Word a, b;
    for (int k = 0; k < 12; ++k) {
      a.push_back(static_cast<std::uint32_t>(rng.range(1, 2)));
      b.push_back(static_cast<std::uint32_t>(rng.range(1, 2)));
    }
    Order ab = alt_cmp(a, b), ba = alt_cmp(b, a);
    if (ab == Order::kEqual) {
      EXPECT_EQ(ba, Order::kEqual);
    } else {
      EXPECT_NE(ab, ba);
      EXPECT_NE(ba, Order::kEqual);
    }
  }
}

TEST(PPoly, Examples) {
  EXPECT_EQ(p_poly(Word{1}), (RationalPoly{1, -1}));
  EXPECT_EQ(RationalPoly{1} - p_poly(Word{1}), RationalPoly::x());
  EXPECT_EQ(p_poly(Word{2}), (RationalPoly{2, -1}));
  EXPECT_EQ(p_poly(Word{1, 1}), (RationalPoly{1, -1, 1}));
  NumberField gold = negbeta::testing::golden();
  FieldElement v = gold.element(p_poly(Word{2, 1}));
  EXPECT_TRUE(v == Rational(2) - gold.gen());
}

TEST(PPoly, DegreeAndLeadingCoefficient) {
  Gen rng(6);
  for (int i = 0; i < 100; ++i) {
    Word w;
    std::size_t len = static_cast<std::size_t>(rng.range(0, 40));
    for (std::size_t k = 0; k < len; ++k) w.push_back(static_cast<std::uint32_t>(rng.range(1, 3)));
    RationalPoly p = p_poly(w);
    EXPECT_EQ(p.degree(), static_cast<int>(len));
    EXPECT_EQ(p.leading(), len % 2 ? -1 : 1);
  }
}

TEST(Identities, AllPassUpToTwelve) {
  auto results = verify_identities(12);
  std::size_t per_n = 0;
  for (const auto& r : results) {
    EXPECT_TRUE(r.pass) << r.identity << " n=" << r.n;
    if (r.identity == "poly1") ++per_n;
  }
  EXPECT_EQ(per_n, 13u);
}

TEST(Identities, BaseCases) {
  auto results = verify_identities(0);
  bool saw_poly1 = false, saw_xp1 = false;
  for (const auto& r : results) {
    if (r.identity == "poly1") saw_poly1 = r.pass;
    if (r.identity == "x_plus_one") saw_xp1 = r.pass;
  }
  EXPECT_TRUE(saw_poly1);
  EXPECT_TRUE(saw_xp1);
  EXPECT_EQ(RationalPoly::x() * p_poly(Word{2}) + p_poly(Word{1, 1}), (RationalPoly{1, 1}));
}

TEST(Identities, TwoAndElevenShareAPrefix) {
  for (unsigned n = 0; n <= 12; ++n) {
    Word a = phi_iter(Word{2}, n), b = phi_iter(Word{1, 1}, n);
    std::size_t gn1 = g(n + 1).get_ui();
    ASSERT_GE(std::min(a.size(), b.size()), gn1);
    for (std::size_t i = 0; i + 1 < gn1; ++i) EXPECT_EQ(a[i], b[i]) << n;
    EXPECT_NE(a[gn1 - 1], b[gn1 - 1]) << n;
  }
}

TEST(Parikh, Examples) {
  EXPECT_TRUE(parikh_digit_consistency(0).ok());
  EXPECT_TRUE(parikh_digit_consistency(2).ok());
  EXPECT_EQ(phi_iter(Word{1}, 2).size(), 3u);
  EXPECT_EQ(phi_iter(Word{2}, 2).size(), 5u);
  EXPECT_EQ(phi_iter(Word{2, 1}, 2).size(), 8u);
  EXPECT_EQ(phi_iter(Word{2, 1}, 5).size(), 64u);
  for (unsigned n = 0; n <= 16; ++n) EXPECT_TRUE(parikh_digit_consistency(n).ok()) << n;
}

TEST(WordString, RoundTrip) {
  EXPECT_EQ(to_string(word_from_string("2112")), "2112");
  Word big{12, 3};
  EXPECT_EQ(word_from_string(to_string(big)), big);
}

#include <gtest/gtest.h>

#include "fields.hpp"
#include "negbeta/error.hpp"
#include "negbeta/real_roots.hpp"

using namespace negbeta;
using negbeta::testing::Gen;

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("5/4"), Rational(5, 4));
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(Rational(217, 256), 8), "0.84765625");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 3), "-0.333");
  EXPECT_EQ(to_decimal(Rational(2, 3), 0), "1");
}

TEST(Rational, RoundingIsDirectional) {
  Rational third(1, 3);
  Rational down = round_to_bits(third, 10, Rounding::kDown);
  Rational up = round_to_bits(third, 10, Rounding::kUp);
  EXPECT_LE(down, third);
  EXPECT_GE(up, third);
  EXPECT_LT(up - down, Rational(1, 1000));
  EXPECT_LE(sqrt_lower(Rational(2), 40) * sqrt_lower(Rational(2), 40), Rational(2));
  EXPECT_GE(sqrt_upper(Rational(2), 40) * sqrt_upper(Rational(2), 40), Rational(2));
}

TEST(RationalPoly, CanonicalFormDropsLeadingZeros) {
  RationalPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(RationalPoly, ArithmeticAndEvaluation) {
  RationalPoly p{-1, -1, 1};
  RationalPoly q{2, 1};
  EXPECT_EQ(p * q, (RationalPoly{-2, -3, 1, 1}));
  EXPECT_EQ(p(Rational(2)), Rational(1));
  EXPECT_EQ(p.compose(q), (RationalPoly{1, 3, 1}));
  EXPECT_EQ(p.derivative(), (RationalPoly{-1, 2}));
  EXPECT_EQ(q.pow(3), (RationalPoly{8, 12, 6, 1}));
}

TEST(RationalPoly, DivmodReconstructsProperty) {
  Gen rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a, b;
    int da = static_cast<int>(rng.range(0, 8)), db = static_cast<int>(rng.range(0, 5));
    for (int i = 0; i <= da; ++i) a.push_back(ratio(rng.range(-9, 9), rng.range(1, 4)));
    for (int i = 0; i <= db; ++i) b.push_back(ratio(rng.range(-9, 9), rng.range(1, 4)));
    b.back() = Rational(rng.range(1, 5));
    RationalPoly pa(a), pb(b);
    auto [quo, rem] = RationalPoly::divmod(pa, pb);
    EXPECT_EQ(quo * pb + rem, pa);
    EXPECT_LT(rem.degree(), pb.degree());
  }
}

TEST(RationalPoly, SignAtMatchesEvaluation) {
  Gen rng(11);
  RationalPoly p{3, -7, 0, 2, -1};
  for (int i = 0; i < 100; ++i) {
    Rational x(rng.range(-50, 50), rng.range(1, 13));
    EXPECT_EQ(sign_at(p, x), sign(p(x)));
  }
}

TEST(RealRoot, GoldenRatio) {
  auto b = real_root(RationalPoly{-1, -1, 1}, {Rational(1), Rational(2)}, Rational(1, 1000000000000));
  EXPECT_LE(b.width(), Rational(1, 1000000000000));
  EXPECT_NEAR(to_double(b.mid()), 1.618033988749, 1e-11);
}

TEST(RealRoot, SmallestPisot) {
  auto b = real_root(RationalPoly{-1, -1, 0, 1}, {Rational(1), Rational(2)}, Rational(1, 1000000000000));
  EXPECT_NEAR(to_double(b.mid()), 1.324717957244, 1e-11);
}

TEST(RealRoot, GammaThree) {
  auto b = real_root(RationalPoly{-1, -1, 0, 0, 0, 0, 1}, {Rational(1), Rational(2)}, Rational(1, 1000000000000));
  EXPECT_NEAR(to_double(b.mid()), 1.1347241384, 1e-9);
}

TEST(RealRoot, OutputAlwaysBracketsASignChange) {
  Gen rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    // (x - r) * (x^2 + 1) with random rational-ish roots in (1, 2)
    Rational r = rng.rational(Rational(1), Rational(2));
    RationalPoly p = RationalPoly(std::vector<Rational>{-r, Rational(1)}) * RationalPoly{1, 0, 1} * RationalPoly{3, 0, 0, 1};
    auto b = real_root(p, {Rational(1), Rational(2)}, Rational(1, 1 << 20));
    EXPECT_LE(sign_at(p, b.lo) * sign_at(p, b.hi), 0);
    EXPECT_TRUE(b.lo <= r && r <= b.hi);
  }
}

TEST(RealRoot, RejectsNonIsolatingBrackets) {
  EXPECT_THROW(check_isolating(RationalPoly{-1, -1, 1}, {Rational(2), Rational(3)}), Error);
  // (x - 3/2)(x - 7/4): no sign change on the ends, two roots inside
  RationalPoly two = RationalPoly(std::vector<Rational>{Rational(-3, 2), Rational(1)}) *
                     RationalPoly(std::vector<Rational>{Rational(-7, 4), Rational(1)});
  EXPECT_THROW(check_isolating(two, {Rational(1), Rational(2)}), Error);
  EXPECT_EQ(descartes_variations(two, {Rational(1), Rational(2)}), 2u);
}

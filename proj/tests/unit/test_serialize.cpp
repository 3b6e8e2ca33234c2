#include <gtest/gtest.h>

#include "fields.hpp"
#include "negbeta/serialize.hpp"

using namespace negbeta;
using namespace negbeta::testing;

TEST(Serialize, PolynomialAsCoefficientStrings) {
  RationalPoly p(std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(3)});
  Json j = to_json(p);
  EXPECT_EQ(j, Json::parse(R"(["-1/2", "0", "3"])"));
  EXPECT_EQ(poly_from_json(j), p);
}

TEST(Serialize, FieldRoundTrip) {
  NumberField f = quartic();
  Json j = to_json(f);
  EXPECT_EQ(j["min_poly"], Json::parse(R"(["-1", "-1", "0", "0", "1"])"));
  NumberField back = field_from_json(j);
  EXPECT_EQ(back.min_poly(), f.min_poly());
  EXPECT_TRUE(back.gen().enclosure(40).overlaps(f.gen().enclosure(40)));
}

TEST(Serialize, OrbitRecordShape) {
  OrbitRecord o = orbit_of_one(Base::exact(golden()), 10);
  Json j = to_json(o);
  EXPECT_EQ(j["digits"], Json::parse("[2, 1]"));
  EXPECT_EQ(j["points"].size(), 3u);
  EXPECT_EQ(j["period"]["p"], 1);
  EXPECT_EQ(j["period"]["q"], 1);
  EXPECT_TRUE(j["beta"].contains("min_poly"));

  OrbitRecord open = orbit_of_one(Base::rational(Rational(5, 4)), 4);
  Json k = to_json(open);
  EXPECT_TRUE(k["period"].is_null());
  EXPECT_EQ(k["points"][4], "217/256");
}

TEST(Serialize, ReportsAndResults) {
  EXPECT_EQ(to_json(IdentityResult{"poly1", 3, true}), Json::parse(R"({"identity": "poly1", "n": 3, "pass": true})"));
  ParryResult finite;
  finite.kind = ParryResult::Kind::kFinite;
  finite.finite_n = 7;
  EXPECT_EQ(to_json(finite), Json::parse(R"({"finite": 7})"));
  EXPECT_TRUE(to_json(ParryResult{}).is_null());
}

TEST(Serialize, GapStructureLabels) {
  GapStructure s = build_structure(Base::rational(Rational(5, 4)));
  Json j = to_json(s, 8);
  ASSERT_EQ(j["gaps"].size(), 2u);
  EXPECT_EQ(j["gaps"][0]["label"], "G_{0,0}");
  EXPECT_EQ(j["gaps"][0]["one_based_label"], "G_{1,1}");
  EXPECT_EQ(j["gaps"][0]["lo"], "0.06250000");
  EXPECT_EQ(j["gaps"][0]["lo_orbit_index"], 2);
  EXPECT_TRUE(j["supports"].back()["lo_orbit_index"].is_null());
}

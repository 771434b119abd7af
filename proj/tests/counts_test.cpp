#include <gtest/gtest.h>

#include "had/counts.hpp"
#include "had/error.hpp"

namespace had {
namespace {

TEST(SurfaceCounts, DegreeFour) {
  const ParamCountReport r = surface_parameter_counts(4);
  EXPECT_EQ(r.dim_family, 3 + 3 + 14 + 8);
  EXPECT_EQ(r.dim_ambient, 35 - 1);
  EXPECT_EQ(r.margin, 6);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.summary(), "dim U_4 = 28 < 34 = dim |O(4)|");
}

TEST(SurfaceCounts, DegreeFiveAndTen) {
  const ParamCountReport five = surface_parameter_counts(5);
  EXPECT_EQ(five.dim_family, 46);
  EXPECT_EQ(five.dim_ambient, 55);
  EXPECT_EQ(five.margin, 9);
  EXPECT_TRUE(five.holds);
  const ParamCountReport ten = surface_parameter_counts(10);
  EXPECT_EQ(ten.dim_family, 136);
  EXPECT_EQ(ten.dim_ambient, 285);
  EXPECT_TRUE(ten.holds);
}

TEST(SurfaceCounts, HoldsUpToSixtyFour) {
  for (int d = 4; d <= 64; ++d) {
    const ParamCountReport r = surface_parameter_counts(d);
    const std::int64_t ambient = static_cast<std::int64_t>(d + 3) * (d + 2) * (d + 1) / 6 - 1;
    EXPECT_EQ(r.dim_ambient, ambient) << d;
    if (d >= 5) EXPECT_EQ(r.dim_family, 6 + static_cast<std::int64_t>(d + 2) * (d + 1) - 2) << d;
    EXPECT_EQ(r.margin, r.dim_ambient - r.dim_family);
    EXPECT_TRUE(r.holds) << d;
  }
}

TEST(SurfaceCounts, MarginIncreasing) {
  for (int d = 5; d < 64; ++d) {
    EXPECT_LT(surface_parameter_counts(d).margin, surface_parameter_counts(d + 1).margin) << d;
  }
}

TEST(SurfaceCounts, DegreeTooSmall) {
  for (int d : {-1, 0, 1, 2, 3}) {
    try {
      surface_parameter_counts(d);
      FAIL() << d;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::DegreeTooSmall);
    }
  }
}

TEST(BinomialCoefficient, Values) {
  EXPECT_EQ(binomial_coefficient(7, 3), 35);
  EXPECT_EQ(binomial_coefficient(67, 3), 47905);
  EXPECT_EQ(binomial_coefficient(5, 0), 1);
  EXPECT_EQ(binomial_coefficient(5, 6), 0);
  EXPECT_EQ(binomial_coefficient(62, 31), 465428353255261088LL);
  EXPECT_THROW(binomial_coefficient(200, 100), Error);
}

}  // namespace
}  // namespace had

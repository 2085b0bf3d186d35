#include "lagplace/random.hpp"

#include <gtest/gtest.h>

namespace lagplace {
namespace {

GTEST_TEST(RngTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

GTEST_TEST(RngTest, DerivedStreamsDiffer) {
  Rng a = Rng::derive(7, "homotopy");
  Rng b = Rng::derive(7, "census", 0);
  Rng c = Rng::derive(7, "census", 1);
  const auto x = a.next_u64();
  const auto y = b.next_u64();
  const auto z = c.next_u64();
  EXPECT_NE(x, y);
  EXPECT_NE(y, z);
  EXPECT_EQ(Rng::derive(7, "census", 1).next_u64(), z);
}

GTEST_TEST(RngTest, Distributions) {
  Rng rng(3);
  double sum = 0.0;
  double sum_sq = 0.0;
  const int count = 20000;
  for (int i = 0; i < count; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
    EXPECT_NEAR(std::abs(rng.unit_complex()), 1.0, 1e-14);
  }
  EXPECT_NEAR(sum / count, 0.0, 0.05);
  EXPECT_NEAR(sum_sq / count, 1.0, 0.05);
}

GTEST_TEST(RngTest, SymmetricMatrix) {
  Rng rng(5);
  const ComplexMatrix m = rng.complex_symmetric_matrix(4);
  EXPECT_EQ(asymmetry(m), 0.0);
}

GTEST_TEST(RngTest, Splitmix) {
  // Reference value of the published splitmix64 finalizer for state 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

}  // namespace
}  // namespace lagplace

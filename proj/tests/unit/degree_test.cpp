#include "lagplace/degree.hpp"

#include <gtest/gtest.h>

#include "lagplace/error.hpp"
#include "oracles/oracles.hpp"

namespace lagplace {
namespace {

GTEST_TEST(DegreeTest, KnownValues) {
  const BigInt two18 = BigInt(1) << 18;
  EXPECT_EQ(degree_lagrangian(1), 1);
  EXPECT_EQ(degree_lagrangian(2), 2);
  EXPECT_EQ(degree_lagrangian(3), 16);
  EXPECT_EQ(degree_lagrangian(4), 768);
  EXPECT_EQ(degree_lagrangian(5), 292864);
  EXPECT_EQ(degree_lagrangian(6), BigInt(13 * 17 * 19) * two18);
  EXPECT_EQ(degree_lagrangian(5), BigInt(11 * 13) * (BigInt(1) << 11));
}

GTEST_TEST(DegreeTest, ClosedFormsAgree) {
  for (int n = 1; n <= kMaxDegreeArgument; ++n) {
    EXPECT_EQ(degree_factorial_form(n), degree_odd_power_form(n)) << "n = " << n;
  }
}

GTEST_TEST(DegreeTest, SpinorDegreeCountsShiftedTableaux) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(degree_spinor(n), BigInt(oracle::shifted_staircase_tableaux(n))) << "n = " << n;
    EXPECT_EQ(degree_spinor(n) << (n * (n - 1) / 2), degree_lagrangian(n));
  }
}

GTEST_TEST(DegreeTest, RejectsOutOfRange) {
  EXPECT_THROW(degree_lagrangian(0), Error);
  EXPECT_THROW(degree_lagrangian(kMaxDegreeArgument + 1), Error);
}

}  // namespace
}  // namespace lagplace

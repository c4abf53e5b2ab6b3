#include <gtest/gtest.h>

#include "../support/properties.hpp"

using namespace hitgen;

TEST(Property, ShiftSubstInverse) {
  auto r = props::shift_subst_inverse(11, 1000);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Property, PrintParseRoundTrip) {
  auto r = props::print_parse_roundtrip(12, 1000);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Property, NormalizationDeterminism) {
  auto r = props::normalization_determinism(13, 1000);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Property, RewriteNonInterference) {
  auto r = props::rewrite_non_interference(14, 1000);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

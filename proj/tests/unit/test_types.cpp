#include <gtest/gtest.h>

#include "comblab/errors.hpp"
#include "comblab/types.hpp"

using namespace comblab;

TEST(Types, QuantityNamesRoundTrip) {
  for (Quantity q : kAllQuantities) EXPECT_EQ(parse_quantity(to_string(q)), q);
  EXPECT_THROW(parse_quantity("abs_z"), UsageError);
}

TEST(Types, NormAndAxisNames) {
  EXPECT_EQ(parse_norm("1"), Norm::one);
  EXPECT_EQ(parse_norm("one"), Norm::one);
  EXPECT_EQ(parse_norm("inf"), Norm::inf);
  EXPECT_EQ(parse_norm("infinity"), Norm::inf);
  EXPECT_THROW(parse_norm("2"), UsageError);
  EXPECT_EQ(parse_axis("x"), Axis::x);
  EXPECT_EQ(parse_axis("y"), Axis::y);
  EXPECT_THROW(parse_axis("z"), UsageError);
}

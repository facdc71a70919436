// SPDX-License-Identifier: Apache-2.0

#include "tangency/enumcount.hpp"
#include "tangency/verify.hpp"

#include <gtest/gtest.h>

namespace tangency {
namespace {

TEST(Bitangents, Examples) {
  EXPECT_EQ(bitangent_count(6), 324);
  EXPECT_EQ(bitangent_count(5), 120);
  EXPECT_EQ(bitangent_count(4), 28);
  EXPECT_EQ(bitangent_count(3), 0);
  EXPECT_EQ(bitangent_count(2), 0);
}

TEST(Census, IntegralForAllDegrees) {
  for (long d = 5; d <= 30; ++d) {
    const auto c = census(d);
    EXPECT_EQ(c.bitangents.get_den(), 1);
    EXPECT_EQ(c.isolated_points_per_bitangent.get_den(), 1);
    EXPECT_EQ(c.curves_per_bitangent.get_den(), 1);
    EXPECT_EQ(c.isolated_points_per_bitangent, Rational(120 * (d - 4) * (d - 5)));
  }
  EXPECT_EQ(census(5).isolated_points_per_bitangent, 0);
  EXPECT_EQ(census(5).curves_per_bitangent, 30);
}

TEST(Constants, Assembled) {
  EXPECT_EQ(assemble_cd(), -1);
  EXPECT_EQ(assemble_bd(), 1);
  VirtualIngredients other;
  other.component_order = 5;
  EXPECT_EQ(assemble_cd(other), 0);
}

TEST(Enumerative, Values) {
  EXPECT_EQ(n_enumerative(5), 2015);
  EXPECT_EQ(n_enumerative(6), 70956);
  EXPECT_EQ(n_enumerative(5) - N_virtual(5), 30);
}

TEST(Enumerative, ClosedForm) {
  const PolyQ p = n_enumerative_symbolic();
  EXPECT_EQ(p, oracle::enumerative_count_closed_form());
  for (long d = 5; d <= 10; ++d) EXPECT_EQ(p(Rational(d)), n_enumerative(d));
}

TEST(Enumerative, DegreeBelowFiveRejected) {
  try {
    n_enumerative(4);
    FAIL() << "expected QueryError";
  } catch (const QueryError& err) {
    EXPECT_EQ(err.code(), "d_out_of_range");
  }
}

}  // namespace
}  // namespace tangency

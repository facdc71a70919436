// SPDX-License-Identifier: Apache-2.0

#include "tangency/k3.hpp"
#include "tangency/verify.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace tangency {
namespace {

TEST(Eta, FirstCoefficients) {
  const std::vector<Integer> expected{1, 24, 324, 3200, 25650, 176256};
  EXPECT_EQ(eta_coeffs(5), expected);
  EXPECT_EQ(eta_coeffs(0), std::vector<Integer>{1});
}

TEST(Eta, AgreesWithConvolutionOracle) {
  EXPECT_EQ(eta_coeffs(30), oracle::eta_by_convolution(30));
}

TEST(Eta, SingleFactorIsPartitionCount) {
  const auto p = oracle::partitions(10);
  EXPECT_EQ(p[10], 42);
  EXPECT_EQ(p[5], 7);
}

TEST(Degree6, IdentityHolds) {
  const auto rep = check_degree6_identity();
  EXPECT_EQ(rep.conics, 70956);
  EXPECT_EQ(rep.line_pairs, 104652);
  EXPECT_EQ(rep.nodal_covers, 648);
  EXPECT_EQ(rep.g5, 176256);
  EXPECT_TRUE(rep.holds);
}

TEST(Degree6, PerturbedInputsFail) {
  EXPECT_FALSE(check_degree6_identity(Rational(323)).holds);
  EXPECT_FALSE(check_degree6_identity(std::nullopt, Rational(70955)).holds);
}

TEST(CoverFormula, Examples) {
  const std::vector<CoverTerm> two{{1, 5}, {2, 2}};
  EXPECT_EQ(n_beta_conjecture(two), Rational(176256) + make_rational(324, 8));
  EXPECT_EQ(n_beta_conjecture(two), Rational(352593, 2));
  const std::vector<CoverTerm> one{{1, 2}};
  EXPECT_EQ(n_beta_conjecture(one), 324);
  const std::vector<CoverTerm> bad{{0, 2}};
  EXPECT_THROW(n_beta_conjecture(bad), std::invalid_argument);
}

TEST(CoverFormula, DoubleCovers) {
  EXPECT_EQ(double_cover_contribution(), Rational(1, 8));
  // 324 nodal curves, each contributing 1/8 to the class of (1,2) covers
  EXPECT_EQ(bitangent_count(6) * double_cover_contribution(), Rational(81, 2));
}

}  // namespace
}  // namespace tangency

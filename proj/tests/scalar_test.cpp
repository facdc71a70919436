// SPDX-License-Identifier: Apache-2.0

#include "tangency/scalar.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace tangency {
namespace {

PolyQ random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> c;
  const int n = deg(rng);
  for (int i = 0; i <= n; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return PolyQ(std::move(c));
}

TEST(Rational, LowestTermsAndText) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("238200")), "238200");
  EXPECT_THROW(parse_rational("1/0"), ArithmeticError);
  EXPECT_THROW(parse_rational("x"), ArithmeticError);
  EXPECT_THROW(make_rational(1, 0), ArithmeticError);
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(PolyQ{Rational(0)}, 7), 0);
  EXPECT_TRUE(PolyQ{Rational(0)}.is_zero());
  EXPECT_EQ(poly_eval(PolyQ{Rational(1), Rational(1)}, 4), 5);

  const PolyQ d = PolyQ::variable();
  const PolyQ septic{Rational(-12690), Rational(-2133), Rational(5457), Rational(311),
                     Rational(-540),   Rational(-18),   Rational(12),   Rational(1)};
  const PolyQ virtual_count = d * (d - PolyQ(3)) * (d - PolyQ(4)) * septic / Rational(120);
  EXPECT_EQ(poly_eval(virtual_count, 6), 71442);
  EXPECT_EQ(virtual_count.degree(), 10);
  EXPECT_EQ(virtual_count.leading(), Rational(1, 120));
}

TEST(PolyQ, TrimsTrailingZeros) {
  const PolyQ p{Rational(1), Rational(2), Rational(0), Rational(0)};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ((PolyQ{Rational(1), Rational(1)} - PolyQ{Rational(1), Rational(1)}), PolyQ());
}

TEST(PolyQ, DivisionByVariable) {
  EXPECT_EQ((PolyQ{Rational(0), Rational(3), Rational(5)}).divided_by_variable(),
            (PolyQ{Rational(3), Rational(5)}));
  EXPECT_THROW((PolyQ{Rational(1), Rational(3)}).divided_by_variable(), ArithmeticError);
  EXPECT_EQ(PolyQ().divided_by_variable(), PolyQ());
}

TEST(Interpolate, Examples) {
  const std::vector<Sample> line{{0, 1}, {1, 2}};
  EXPECT_EQ(lagrange_interpolate(line), (PolyQ{Rational(1), Rational(1)}));
  const std::vector<Sample> constant{{1, 3}, {2, 3}, {3, 3}};
  EXPECT_EQ(lagrange_interpolate(constant), PolyQ(3));
  const std::vector<Sample> single{{5, 9}};
  EXPECT_EQ(lagrange_interpolate(single), PolyQ(9));
}

TEST(Interpolate, Errors) {
  const std::vector<Sample> dup{{1, 2}, {1, 3}};
  EXPECT_THROW(lagrange_interpolate(dup), DuplicateNodeError);
  EXPECT_THROW(lagrange_interpolate(std::vector<Sample>{}), ArithmeticError);
}

TEST(Interpolate, RecoversPolynomialFromEnoughSamples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyQ p = random_poly(rng, 8);
    std::uniform_int_distribution<int> extra(1, 3);
    const int count = std::max(p.degree(), 0) + extra(rng);
    std::vector<Sample> samples;
    std::uniform_int_distribution<long> xs(-30, 30);
    while (static_cast<int>(samples.size()) < count) {
      const Rational x = make_rational(xs(rng), 3);
      bool fresh = true;
      for (const auto& s : samples) fresh = fresh && s.x != x;
      if (fresh) samples.push_back({x, p(x)});
    }
    EXPECT_EQ(lagrange_interpolate(samples), p);
  }
}

TEST(PolyQ, RingAxiomsRandomized) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyQ a = random_poly(rng, 5);
    const PolyQ b = random_poly(rng, 5);
    const PolyQ c = random_poly(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    const Rational x = make_rational(trial - 50, 7);
    EXPECT_EQ((a * b)(x), a(x) * b(x));
  }
}

TEST(PolyQ, FromRoots) {
  const std::vector<Rational> roots{3, 4};
  const PolyQ p = PolyQ::from_roots(roots);
  EXPECT_EQ(p, (PolyQ{Rational(12), Rational(-7), Rational(1)}));
}

}  // namespace
}  // namespace tangency

// SPDX-License-Identifier: Apache-2.0

#include "tangency/io.hpp"

#include <gtest/gtest.h>

namespace tangency {
namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const QueryError& err) {
    return err.code();
  }
  return "";
}

TEST(Json, RationalRoundTrip) {
  for (const Rational& q : {Rational(0), make_rational(-7, 3), Rational(238200)})
    EXPECT_EQ(rational_from_json(to_json_value(q)), q);
  EXPECT_EQ(to_json_value(make_rational(1, 120)), "1/120");
  EXPECT_EQ(rational_from_json(json(5)), 5);
  EXPECT_EQ(code_of([] { rational_from_json(json(1.5)); }), "malformed_rational");
}

TEST(Json, PolynomialRoundTrip) {
  const PolyQ p{Rational(0), make_rational(1, 2), Rational(-3)};
  EXPECT_EQ(poly_from_json(to_json_value(p)), p);
  EXPECT_EQ(to_json_value(PolyQ()), json::array());
  EXPECT_EQ(code_of([] { poly_from_json(json("x")); }), "malformed_polynomial");
}

TEST(Json, EnvelopeRoundTrip) {
  QueryEnvelope q;
  q.command = "invariant";
  q.e = 2;
  q.points = {{2, 0, 0}, {1, 1, 0}};
  q.d = 6;
  q.format = "json";
  EXPECT_EQ(envelope_from_json(to_json_value(q)), q);

  QueryEnvelope s;
  s.command = "tables";
  s.symbolic = true;
  s.range = std::pair{5L, 10L};
  EXPECT_EQ(envelope_from_json(to_json_value(s)), s);
}

TEST(Json, ParsesTextQuery) {
  const auto q = envelope_from_json(json::parse(R"({"e":2,"points":[[2,0,0]],"d":"symbolic"})"));
  EXPECT_EQ(q.command, "invariant");
  EXPECT_TRUE(q.symbolic);
  ASSERT_EQ(q.points.size(), 1u);
  EXPECT_EQ(q.points[0], (RelPoint{2, 0, 0}));
}

TEST(Json, MalformedInputs) {
  EXPECT_EQ(code_of([] { envelope_from_json(json::array()); }), "malformed_query");
  EXPECT_EQ(code_of([] { envelope_from_json(json::parse(R"({"e":"two"})")); }),
            "invalid_degree");
  EXPECT_EQ(code_of([] { envelope_from_json(json::parse(R"({"points":[[1,2]]})")); }),
            "malformed_points");
  EXPECT_EQ(code_of([] { envelope_from_json(json::parse(R"({"points":[[1,-2,0]]})")); }),
            "malformed_points");
  EXPECT_EQ(code_of([] { envelope_from_json(json::parse(R"({"points":[[1,3,0]]})")); }),
            "malformed_points");
  EXPECT_EQ(code_of([] { envelope_from_json(json::parse(R"({"d":1.5})")); }),
            "malformed_query");
  EXPECT_EQ(code_of([] { envelope_from_json(json::parse(R"({"range":[5]})")); }),
            "malformed_query");
}

}  // namespace
}  // namespace tangency

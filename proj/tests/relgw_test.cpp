// SPDX-License-Identifier: Apache-2.0

#include "tangency/relgw.hpp"
#include "tangency/verify.hpp"

#include <gtest/gtest.h>

#include <future>
#include <vector>

namespace tangency {
namespace {

Rational numeric(long d, const RelKey& key) {
  RelativeEngine<NumericD> eng(NumericD{d});
  return eng.rel_invariant(key);
}

PolyQ symbolic(const RelKey& key) {
  RelativeEngine<SymbolicD> eng(SymbolicD{});
  return eng.rel_invariant(key);
}

const PolyQ kD = PolyQ::variable();

TEST(RelVdim, Examples) {
  EXPECT_EQ(rel_vdim(five_fold_tangency_key()), 0);
  EXPECT_EQ(rel_vdim({2, {{0, 2, 0}, {0, 2, 0}, {0, 2, 0}, {0, 2, 0}, {0, 2, 0}}}), 10);
  EXPECT_EQ(rel_vdim({1, {{2, 0, 0}, {0, 2, 0}}}), 2);
}

TEST(RelInvariant, FiveFoldTangencyAtDegreeFive) {
  EXPECT_EQ(numeric(5, five_fold_tangency_key()), 238200);
  EXPECT_EQ(N_virtual(5), 1985);
}

TEST(RelInvariant, NoContactIsAbsolute) {
  const RelKey key{2, std::vector<RelPoint>(5, RelPoint{0, 2, 0})};
  EXPECT_EQ(numeric(7, key), 1);
  EXPECT_EQ(symbolic(key), PolyQ(1));
}

TEST(RelInvariant, ClassicalLineCounts) {
  // lines through a point meeting Y on a fixed line
  const RelKey meet{1, {{0, 2, 0}, {1, 1, 0}}};
  EXPECT_EQ(symbolic(meet), kD);
  // tangent lines through a general point: d(d - 1)
  const RelKey tangent{1, {{0, 2, 0}, {2, 0, 0}}};
  EXPECT_EQ(symbolic(tangent), kD * (kD - PolyQ(1)));
  // ordered bitangents: twice the bitangent count
  const RelKey bitangent{1, {{2, 0, 0}, {2, 0, 0}}};
  EXPECT_EQ(symbolic(bitangent),
            kD * (kD - PolyQ(2)) * (kD - PolyQ(3)) * (kD + PolyQ(3)));
}

TEST(RelInvariant, ConicsOfAPencilTangentToY) {
  // d(d - 1) + 2d(n - 1) with n = 2
  const RelKey key{2, {{0, 2, 0}, {0, 2, 0}, {0, 2, 0}, {0, 2, 0}, {2, 0, 0}}};
  EXPECT_EQ(symbolic(key), kD * (kD + PolyQ(1)));
}

TEST(RelInvariant, BarePointFailsGate) {
  RelKey key = five_fold_tangency_key();
  key.points.push_back({0, 0, 0});
  EXPECT_EQ(rel_vdim(key) - key.insertion_degree(), 1);
  EXPECT_EQ(numeric(6, key), 0);
  EXPECT_EQ(symbolic(key), PolyQ());
}

TEST(RelInvariant, Errors) {
  try {
    numeric(5, {3, {{2, 0, 0}}});
    FAIL() << "expected QueryError";
  } catch (const QueryError& err) {
    EXPECT_EQ(err.code(), "invalid_degree");
  }
  try {
    numeric(5, {2, {{-1, 0, 0}}});
    FAIL() << "expected QueryError";
  } catch (const QueryError& err) {
    EXPECT_EQ(err.code(), "malformed_points");
  }
  try {
    N_virtual(4);
    FAIL() << "expected QueryError";
  } catch (const QueryError& err) {
    EXPECT_EQ(err.code(), "d_out_of_range");
  }
}

TEST(RelInvariant, GateReturnsZero) {
  EXPECT_EQ(numeric(5, {2, {{2, 0, 0}, {2, 0, 0}}}), 0);
  EXPECT_EQ(symbolic({1, {{1, 0, 0}}}), PolyQ());
}

TEST(Corrections, EmptyEnumerations) {
  // pivot with m' = 0 and nothing in S: no positive composition of 0
  const RelKey level{2, {{0, 0, 0}, {0, 2, 0}}};
  for (const auto& t : enumerate_corrections(level, 0)) EXPECT_FALSE(t.contracted.empty());
  const RelKey only{2, {{0, 0, 0}}};
  EXPECT_TRUE(enumerate_corrections(only, 0).empty());

  // s = 1 cannot split into two positive parts when S is empty
  const RelKey single{2, {{1, 0, 0}, {0, 2, 0}}};
  for (const auto& t : enumerate_corrections(single, 0))
    EXPECT_FALSE(t.r() == 2 && t.contracted.empty());
  EXPECT_THROW(enumerate_corrections(single, 5), QueryError);
}

TEST(Corrections, LoweringStepAtFiveFold) {
  const RelKey level{2, {{2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {1, 0, 0}}};
  RelativeEngine<NumericD> eng(NumericD{5});
  int nonzero = 0;
  for (const auto& t : enumerate_corrections(level, 4)) {
    const Rational v = eng.correction_value(level, t);
    if (v == 0) continue;
    ++nonzero;
    EXPECT_EQ(t.r(), 1u);
    EXPECT_EQ(t.contracted.size(), 1u);
    EXPECT_EQ(t.parts[0].mu, 3);
    EXPECT_EQ(t.diag[0], NodeSide::contracted);
    EXPECT_EQ(eng.contracted_factor(level, t), 1);
  }
  EXPECT_EQ(nonzero, 4);
  EXPECT_TRUE(detail::check_lowering_step().passed);
}

TEST(Corrections, ContractedFactor) {
  RelativeEngine<NumericD> eng(NumericD{7});
  const RelKey level{2, {{1, 1, 0}, {2, 0, 0}, {1, 2, 0}}};
  CorrectionTerm t;
  t.e = 2;
  t.pivot = 0;
  t.contracted = {1};
  t.parts = {OuterPart{2, 2, {2}}};
  // H on the pivot is the only slot once the node takes the point class
  t.diag = {NodeSide::outer};
  EXPECT_EQ(eng.contracted_factor(level, t), 7);
  // two slots
  t.diag = {NodeSide::contracted};
  EXPECT_EQ(eng.contracted_factor(level, t), 0);
  // a = 2 on C_0 always vanishes
  t.contracted = {2};
  t.parts = {OuterPart{2, 2, {1}}};
  t.diag = {NodeSide::outer};
  EXPECT_EQ(eng.contracted_factor(level, t), 0);
  // unstable C_0
  t.contracted = {};
  t.parts = {OuterPart{2, 1, {1, 2}}};
  EXPECT_EQ(eng.contracted_factor(level, t), 0);

  const RelKey plain{2, {{1, 0, 0}, {2, 0, 0}, {2, 0, 0}}};
  CorrectionTerm u;
  u.pivot = 0;
  u.contracted = {1};
  u.parts = {OuterPart{2, 3, {2}}};
  u.diag = {NodeSide::contracted};
  EXPECT_EQ(eng.contracted_factor(plain, u), 1);
}

TEST(Corrections, RSquaredWeight) {
  CorrectionTerm t;
  t.parts = {OuterPart{1, 2, {}}, OuterPart{1, 3, {}}};
  EXPECT_EQ(t.mu_product(), 6);
  EXPECT_EQ(t.special_points(), 3u);
}

// Symbolic evaluation and interpolation through sum(m) + 1 integer values
// agree, and no key exceeds degree sum(m).
TEST(Polynomiality, SmallKeys) {
  const std::vector<RelKey> keys{
      {1, {{0, 2, 0}, {2, 0, 0}}},
      {1, {{2, 0, 0}, {2, 0, 0}}},
      {1, {{3, 0, 0}, {0, 1, 0}}},
      {2, {{2, 0, 0}, {0, 2, 0}, {0, 2, 0}, {0, 2, 0}, {0, 2, 0}}},
      {2, {{2, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 2, 0}, {0, 2, 0}}},
      {2, {{3, 1, 0}, {2, 0, 0}, {0, 2, 0}, {0, 2, 0}}},
      {2, {{4, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 2, 0}}},
      {2, {{2, 0, 1}, {2, 0, 0}, {2, 0, 0}, {0, 2, 0}}},
  };
  for (const auto& key : keys) {
    const PolyQ p = symbolic(key);
    const int s = key.total_multiplicity();
    EXPECT_LE(p.degree(), s);
    std::vector<Sample> samples;
    for (long d = 1; d <= s + 1; ++d) samples.push_back({Rational(d), numeric(d, key)});
    EXPECT_EQ(lagrange_interpolate(samples), p);
  }
}

TEST(Symbolic, MatchesNumericAndClosedForm) {
  const PolyQ p = N_virtual_symbolic();
  EXPECT_EQ(p, oracle::virtual_count_closed_form());
  EXPECT_EQ(p(Rational(7)), N_virtual(7));
  EXPECT_EQ(p.degree(), 10);
}

TEST(Symbolic, LoweringExpansionIdentity) {
  // left side against d I_H + I_psi - corrections, as polynomials
  RelativeEngine<SymbolicD> eng(SymbolicD{});
  const RelKey level{2, {{2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {1, 0, 0}}};
  RelKey with_h = level;
  with_h.points[4].a = 1;
  RelKey with_psi = level;
  with_psi.points[4].b = 1;
  PolyQ rhs = kD * eng.rel_invariant(with_h) + eng.rel_invariant(with_psi);
  for (const auto& t : enumerate_corrections(level, 4)) rhs = rhs - eng.correction_value(level, t);
  EXPECT_EQ(eng.rel_invariant(five_fold_tangency_key()), rhs);
}

TEST(Numeric, ParallelDegrees) {
  std::vector<std::future<Rational>> jobs;
  for (long d = 5; d <= 10; ++d)
    jobs.push_back(std::async(std::launch::async, [d] { return N_virtual(d); }));
  const std::vector<long> expected{1985, 71442, 687897, 3893256, 16180398, 54679380};
  for (std::size_t i = 0; i < jobs.size(); ++i) EXPECT_EQ(jobs[i].get(), expected[i]);
}

}  // namespace
}  // namespace tangency

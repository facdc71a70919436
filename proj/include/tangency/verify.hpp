// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks with their independent oracles. Shared by the
// acceptance test binary and `tangency verify`.

#pragma once

#include "tangency/absgw.hpp"
#include "tangency/enumcount.hpp"
#include "tangency/k3.hpp"
#include "tangency/localjet.hpp"
#include "tangency/relgw.hpp"
#include "tangency/scalar.hpp"

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tangency {

namespace oracle {

/// Partition numbers p(0..n) by enumerating partitions with bounded parts.
inline std::vector<Integer> partitions(std::size_t n) {
  std::vector<Integer> p(n + 1);
  std::function<Integer(long, long)> count = [&](long rest, long largest) -> Integer {
    if (rest == 0) return 1;
    Integer c = 0;
    for (long part = std::min(rest, largest); part >= 1; --part)
      c += count(rest - part, part);
    return c;
  };
  for (std::size_t k = 0; k <= n; ++k)
    p[k] = count(static_cast<long>(k), static_cast<long>(k));
  return p;
}

/// 24-fold Cauchy power of the partition series, by naive convolution.
inline std::vector<Integer> eta_by_convolution(std::size_t n) {
  const auto p = partitions(n);
  std::vector<Integer> acc(n + 1, 0);
  acc[0] = 1;
  for (int rep = 0; rep < 24; ++rep) {
    std::vector<Integer> next(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) next[i + j] += acc[i] * p[j];
    acc = std::move(next);
  }
  return acc;
}

/// (1/120) d (d-3)(d-4)(d^7 + 12d^6 - 18d^5 - 540d^4 + 311d^3 + 5457d^2
/// - 2133d - 12690).
inline PolyQ virtual_count_closed_form() {
  const PolyQ d = PolyQ::variable();
  const PolyQ septic{Rational(-12690), Rational(-2133), Rational(5457), Rational(311),
                     Rational(-540),   Rational(-18),   Rational(12),   Rational(1)};
  return d * (d - PolyQ(3)) * (d - PolyQ(4)) * septic / Rational(120);
}

inline PolyQ enumerative_count_closed_form() {
  const PolyQ d = PolyQ::variable();
  const PolyQ septic{Rational(-14580), Rational(-1458), Rational(5712), Rational(251),
                     Rational(-540),   Rational(-18),   Rational(12),   Rational(1)};
  return d * (d - PolyQ(3)) * (d - PolyQ(4)) * septic / Rational(120);
}

/// Random descendant spec whose insertion degree is dim + extra.
inline DescendantSpec random_descendant_spec(std::mt19937_64& rng, int extra) {
  std::uniform_int_distribution<int> degree(1, 3);
  std::uniform_int_distribution<int> count(1, 4);
  for (;;) {
    DescendantSpec s{degree(rng), {}};
    const int n = count(rng);
    const int target = 3 * s.e - 1 + n + extra;
    s.insertions.resize(static_cast<std::size_t>(n));
    int left = target;
    std::uniform_int_distribution<int> a_dist(0, 2);
    for (auto& in : s.insertions) {
      in.a = std::min(a_dist(rng), left);
      left -= in.a;
    }
    if (left < 0) continue;
    std::uniform_int_distribution<std::size_t> slot(0, s.insertions.size() - 1);
    for (int k = 0; k < left; ++k) ++s.insertions[slot(rng)].b;
    return s;
  }
}

/// Right-hand side of the divisor equation for <tau_0(H) X>_e.
inline Rational divisor_rhs(DescendantEngine& eng, const DescendantSpec& x) {
  Rational total = Rational(x.e) * eng.descendant(x);
  for (std::size_t i = 0; i < x.insertions.size(); ++i) {
    if (x.insertions[i].b == 0 || x.insertions[i].a == 2) continue;
    DescendantSpec y = x;
    ++y.insertions[i].a;
    --y.insertions[i].b;
    total += eng.descendant(y);
  }
  return total;
}

/// Right-hand side of the string equation for <tau_0(1) X>_e.
inline Rational string_rhs(DescendantEngine& eng, const DescendantSpec& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < x.insertions.size(); ++i) {
    if (x.insertions[i].b == 0) continue;
    DescendantSpec y = x;
    --y.insertions[i].b;
    total += eng.descendant(y);
  }
  return total;
}

}  // namespace oracle

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  bool stale_k3 = false;  // perturb the bitangent count to exercise failure reporting
  std::uint64_t seed = 20050101;
};

namespace detail {

inline std::string join(const std::vector<Rational>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << to_string(xs[i]);
  return os.str();
}

inline CriterionResult check_nd_table() {
  const std::array<long, 6> expected{1985, 71442, 687897, 3893256, 16180398, 54679380};
  std::vector<Rational> got;
  bool ok = true;
  for (long d = 5; d <= 10; ++d) {
    got.push_back(N_virtual(d));
    ok = ok && got.back() == Rational(expected[static_cast<std::size_t>(d - 5)]);
  }
  return {1, "N_d table d=5..10", ok, "N_d = " + join(got)};
}

inline CriterionResult check_nd_polynomial() {
  const PolyQ expected = oracle::virtual_count_closed_form();
  const PolyQ symbolic = N_virtual_symbolic();
  std::vector<Sample> samples;
  for (long d = 5; d <= 15; ++d) samples.push_back({Rational(d), N_virtual(d)});
  const PolyQ interpolated = lagrange_interpolate(samples);
  const bool ok = symbolic == expected && interpolated == expected &&
                  symbolic.degree() == 10 && symbolic.leading() == Rational(1, 120);
  std::ostringstream os;
  os << "degree " << symbolic.degree() << ", leading " << to_string(symbolic.leading())
     << ", symbolic " << (symbolic == expected ? "matches" : "differs")
     << ", interpolation " << (interpolated == expected ? "matches" : "differs");
  return {2, "N_d polynomial (symbolic and 11-point interpolation)", ok, os.str()};
}

inline CriterionResult check_enumerative() {
  const std::array<long, 6> expected{2015, 70956, 684222, 3878736, 16137873, 54575640};
  std::vector<Rational> got;
  bool ok = true;
  for (long d = 5; d <= 10; ++d) {
    got.push_back(n_enumerative(d));
    ok = ok && got.back() == Rational(expected[static_cast<std::size_t>(d - 5)]);
  }
  const bool closed = n_enumerative_symbolic() == oracle::enumerative_count_closed_form();
  return {3, "n_d table and closed form", ok && closed,
          "n_d = " + join(got) + (closed ? "; closed form matches" : "; closed form differs")};
}

inline CriterionResult check_constants() {
  const auto jets = verify_virtual_constants();
  VirtualIngredients derived;
  bool have_jets = jets.comp4_order && jets.psi_order && jets.m2223.total();
  if (have_jets) {
    derived.component_order = *jets.comp4_order;
    derived.psi_integral = *jets.psi_order;
    derived.m2223_degree = *jets.m2223.total();
  }
  const Rational cd = assemble_cd();
  const Rational cd_jets = assemble_cd(derived);
  const Rational n5_gap = n_enumerative(5) - N_virtual(5);
  const bool ok = cd == -1 && have_jets && cd_jets == -1 && assemble_bd() == 1 &&
                  n5_gap == 30;
  std::ostringstream os;
  os << "c_d = " << to_string(cd) << " (from jets " << to_string(cd_jets)
     << "), b_d = " << to_string(assemble_bd()) << ", n_5 - N_5 = " << to_string(n5_gap);
  return {4, "correction constants b_d, c_d", ok, os.str()};
}

inline CriterionResult check_k3(const VerifyOptions& opt) {
  const auto rep = opt.stale_k3 ? check_degree6_identity(Rational(323))
                                : check_degree6_identity();
  const bool ok = rep.holds && bitangent_count(6) == Rational(eta_coeffs(2)[2]) &&
                  rep.g5 == 176256;
  std::ostringstream os;
  os << to_string(rep.conics) << " + " << to_string(rep.line_pairs) << " + "
     << to_string(rep.nodal_covers) << " vs G_5 = " << rep.g5.get_str();
  return {5, "K3 degree-6 identity", ok, os.str()};
}

inline CriterionResult check_eta() {
  const auto g = eta_coeffs(5);
  const std::vector<Integer> expected{1, 24, 324, 3200, 25650, 176256};
  const auto naive = oracle::eta_by_convolution(5);
  const bool ok = g == expected && g == naive;
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "G = ") << g[i].get_str();
  return {6, "eta series G_0..G_5", ok, os.str()};
}

inline CriterionResult check_base_layer(const VerifyOptions& opt) {
  bool ok = kontsevich_nd(1) == 1 && kontsevich_nd(2) == 1 && kontsevich_nd(3) == 12 &&
            kontsevich_nd(4) == 620;
  ok = ok && descendant({2, std::vector<Insertion>(5, Insertion{2, 0})}) == 1;
  DescendantEngine eng(true, Strategy::trr_first);
  std::mt19937_64 rng(opt.seed);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto x = oracle::random_descendant_spec(rng, 0);
    auto with_h = x;
    with_h.insertions.push_back({1, 0});
    if (eng.descendant(with_h) != oracle::divisor_rhs(eng, x)) ++failures;

    auto y = oracle::random_descendant_spec(rng, 1);
    auto with_one = y;
    with_one.insertions.push_back({0, 0});
    if (eng.descendant(with_one) != oracle::string_rhs(eng, y)) ++failures;
  }
  return {7, "absolute base layer", ok && failures == 0,
          "N_1..N_4 = 1, 1, 12, 620; divisor/string failures: " + std::to_string(failures)};
}

inline CriterionResult check_lowering_step() {
  RelKey level{2, {{2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}, {1, 0, 0}}};
  const std::size_t pivot = 4;
  RelativeEngine<NumericD> engine(NumericD{5});
  int nonzero = 0;
  bool shapes = true;
  bool r2_clean = true;
  Rational correction_sum = 0;
  for (const auto& t : enumerate_corrections(level, pivot)) {
    if (t.r() == 2 && t.contracted.empty()) r2_clean = false;  // needs mu1+mu2 <= 1
    const Rational v = engine.correction_value(level, t);
    if (v == 0) continue;
    ++nonzero;
    correction_sum += v;
    if (t.r() == 2) r2_clean = false;
    const auto& part = t.parts.front();
    const Rational coefficient =
        engine.contracted_factor(level, t) * Rational(t.mu_product());
    bool outer_ok = part.degree == 2 && part.mu == 3 && part.points.size() == 3 &&
                    t.contracted.size() == 1 && coefficient == 3;
    for (std::size_t p : part.points) outer_ok = outer_ok && level.points[p].m == 2;
    shapes = shapes && outer_ok;
  }
  // [M_(2,2,2,2,2)] = d I_H + I_psi - 3 * 4 [M_(3,2,2,2)] as numbers
  RelKey with_h = level;
  with_h.points[pivot].a = 1;
  RelKey with_psi = level;
  with_psi.points[pivot].b = 1;
  const Rational m3222 = engine.rel_invariant({2, {{3, 0, 0}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}}});
  const Rational lhs = engine.rel_invariant(five_fold_tangency_key());
  const Rational rhs = Rational(5) * engine.rel_invariant(with_h) +
                       engine.rel_invariant(with_psi) - Rational(12) * m3222;
  const bool ok = nonzero == 4 && shapes && r2_clean && lhs == rhs &&
                  correction_sum == Rational(12) * m3222;
  std::ostringstream os;
  os << nonzero << " non-zero terms, shapes " << (shapes ? "ok" : "wrong")
     << ", r=2 branch " << (r2_clean ? "empty" : "non-empty") << ", expansion "
     << (lhs == rhs ? "exact" : "fails");
  return {8, "lowering step at (2,2,2,2,1)", ok, os.str()};
}

inline CriterionResult check_jets(const VerifyOptions& opt) {
  const auto v = verify_virtual_constants(opt.seed);
  bool ok = v.comp4_order == 4 && v.psi_order == 2 && v.m2223.ramification_branch == 2 &&
            v.m2223.total() == 3 && v.bd.rank == 6 && v.bd.matches_relations &&
            v.bd.base_point_tangent && v.bd.ramification_rank == 2 && v.tails_stable;

  std::mt19937_64 rng(opt.seed + 1);
  int det_failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> npts(1, 5);
    const int n = npts(rng);
    std::vector<int> mult;
    int budget = 10;
    for (int i = 0; i < n && budget > 0; ++i) {
      std::uniform_int_distribution<int> m(1, std::min(3, budget));
      mult.push_back(m(rng));
      budget -= mult.back();
    }
    std::vector<Rational> lambda;
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    while (lambda.size() < mult.size()) {
      const Rational x = make_rational(num(rng), den(rng));
      if (std::find(lambda.begin(), lambda.end(), x) == lambda.end()) lambda.push_back(x);
    }
    if (tangency_det(lambda, mult) != tangency_sign(mult) * tangency_product(lambda, mult))
      ++det_failures;
  }
  const std::vector<Rational> l5{0, 1, 2, 3, 4};
  const std::vector<int> m5(5, 2);
  ok = ok && det_failures == 0 && tangency_det(l5, m5) == tangency_product(l5, m5);

  std::ostringstream os;
  os << "orders " << v.comp4_order.value_or(-1) << ", " << v.psi_order.value_or(-1)
     << "; degree " << v.m2223.ramification_branch.value_or(-1) << "+"
     << v.m2223.line_branch << "; M_B rank " << v.bd.rank << "/6"
     << (v.bd.matches_relations ? " (relations match)" : " (relations differ)")
     << "; determinant failures " << det_failures << "/50";
  return {9, "jet verification suite", ok, os.str()};
}

}  // namespace detail

/// Runs criteria 1..9, then checks the accumulated wall time as criterion 10.
inline std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  const std::vector<std::function<CriterionResult()>> checks{
      [] { return detail::check_nd_table(); },
      [] { return detail::check_nd_polynomial(); },
      [] { return detail::check_enumerative(); },
      [] { return detail::check_constants(); },
      [&] { return detail::check_k3(opt); },
      [] { return detail::check_eta(); },
      [&] { return detail::check_base_layer(opt); },
      [] { return detail::check_lowering_step(); },
      [&] { return detail::check_jets(opt); },
  };
  std::vector<CriterionResult> results;
  double total = 0;
  for (const auto& check : checks) {
    const auto start = clock::now();
    CriterionResult r;
    try {
      r = check();
    } catch (const std::exception& ex) {
      r.id = static_cast<int>(results.size()) + 1;
      r.name = "criterion " + std::to_string(r.id);
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(clock::now() - start).count();
    total += r.seconds;
    results.push_back(std::move(r));
  }
  std::ostringstream os;
  os << "total " << total << " s (budget 120 s)";
  results.push_back({10, "runtime budget", total < 120.0, os.str(), total});
  return results;
}

}  // namespace tangency

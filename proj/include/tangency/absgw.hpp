// SPDX-License-Identifier: Apache-2.0
//
// Genus-0 descendant Gromov-Witten invariants of the projective plane.
//
// An invariant <tau_{b_1}(H^{a_1}) ... tau_{b_n}(H^{a_n})>_e is evaluated by
// the string, dilaton and divisor equations, the genus-0 topological
// recursion relation (TRR), and Kontsevich's formula for the primary
// invariants N_e.
//
// Termination: TRR strictly lowers sum(b) in both factors. The inverted
// divisor step only fires when n < 3 and is followed immediately by TRR, so
// the measure (sum(b), e, n) decreases lexicographically along every branch.

#pragma once

#include "tangency/memo.hpp"
#include "tangency/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace tangency {

/// tau_b(H^a) at one marked point.
struct Insertion {
  int a = 0;  // power of the hyperplane class, 0..2
  int b = 0;  // power of psi
  friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

struct DescendantSpec {
  int e = 0;  // curve class e * [line]
  std::vector<Insertion> insertions;

  /// Insertions sorted descending; the invariant is symmetric.
  DescendantSpec canonical() const {
    DescendantSpec c = *this;
    std::sort(c.insertions.begin(), c.insertions.end(), std::greater<>{});
    return c;
  }
  friend auto operator<=>(const DescendantSpec&, const DescendantSpec&) =
      default;
};

/// sum(a + b) == dim M_{0,n}(P^2, e) = 3e - 1 + n.
inline bool dim_gate(const DescendantSpec& spec) {
  int total = 0;
  for (const auto& in : spec.insertions) total += in.a + in.b;
  return total == 3 * spec.e - 1 + static_cast<int>(spec.insertions.size());
}

/// Number of rational plane curves of degree e through 3e - 1 points.
inline Rational kontsevich_nd(int e) {
  if (e <= 0) throw std::invalid_argument("kontsevich_nd: degree must be >= 1");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(0), Rational(1)};
  std::lock_guard lock(mu);
  for (int n = static_cast<int>(table.size()); n <= e; ++n) {
    Rational sum = 0;
    for (int e1 = 1; e1 < n; ++e1) {
      const int e2 = n - e1;
      const Integer w = Integer(e1 * e1 * e2 * e2) * binomial(3 * n - 4, 3 * e1 - 2) -
                        Integer(e1 * e1 * e1 * e2) * binomial(3 * n - 4, 3 * e1 - 1);
      sum += table[static_cast<std::size_t>(e1)] *
             table[static_cast<std::size_t>(e2)] * Rational(w);
    }
    table.push_back(sum);
  }
  return table[static_cast<std::size_t>(e)];
}

/// Order in which the reductions are tried. `strip_first` removes every
/// tau_0(1), tau_1(1) and tau_0(H) point before recursing; `trr_first` applies
/// TRR whenever n >= 3 and some psi is present, so the two strategies reach
/// the same numbers along different routes.
enum class Strategy { strip_first, trr_first };

class DescendantEngine {
 public:
  explicit DescendantEngine(bool memoize = true,
                            Strategy strategy = Strategy::strip_first)
      : memoize_(memoize), strategy_(strategy) {}

  /// Process-wide instance shared by every relative engine.
  static DescendantEngine& shared() {
    static DescendantEngine engine;
    return engine;
  }

  Rational descendant(const DescendantSpec& spec) {
    return evaluate(spec.canonical());
  }

  MemoStats stats() const { return memo_.stats(); }

 private:
  Rational evaluate(const DescendantSpec& spec) {
    for (const auto& in : spec.insertions)
      if (in.a < 0 || in.a > 2 || in.b < 0) return 0;
    if (!dim_gate(spec)) return 0;
    if (memoize_) {
      if (auto hit = memo_.find(spec)) return *hit;
    }
    Rational value = compute(spec);
    if (memoize_) memo_.insert(spec, value);
    return value;
  }

  Rational eval_any(int e, std::vector<Insertion> ins) {
    return evaluate(DescendantSpec{e, std::move(ins)}.canonical());
  }

  Rational compute(const DescendantSpec& spec) {
    const auto& ins = spec.insertions;
    const int e = spec.e;
    const auto n = static_cast<long>(ins.size());

    if (e == 0) {
      // integral over M_{0,n} x P^2
      if (n < 3) return 0;
      int sum_a = 0;
      int sum_b = 0;
      for (const auto& in : ins) {
        sum_a += in.a;
        sum_b += in.b;
      }
      if (sum_a != 2 || sum_b != n - 3) return 0;
      Integer v = factorial(static_cast<unsigned>(n - 3));
      for (const auto& in : ins) v /= factorial(static_cast<unsigned>(in.b));
      return Rational(v);
    }

    const bool any_psi = std::any_of(
        ins.begin(), ins.end(), [](const Insertion& in) { return in.b > 0; });
    if (strategy_ == Strategy::trr_first && any_psi && n >= 3)
      return trr(e, ins);

    auto strip = [&](Insertion which) {
      std::vector<Insertion> rest = ins;
      rest.erase(std::find(rest.begin(), rest.end(), which));
      return rest;
    };
    const auto has = [&](Insertion which) {
      return std::find(ins.begin(), ins.end(), which) != ins.end();
    };

    if (has({0, 0})) {  // string equation
      const auto rest = strip({0, 0});
      Rational total = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i].b == 0) continue;
        auto next = rest;
        --next[i].b;
        total += eval_any(e, std::move(next));
      }
      return total;
    }
    if (has({0, 1})) {  // dilaton equation
      const auto rest = strip({0, 1});
      return Rational(static_cast<long>(rest.size()) - 2) * eval_any(e, rest);
    }
    if (has({1, 0})) {  // divisor equation
      const auto rest = strip({1, 0});
      return divisor_sum(e, rest);
    }

    if (!any_psi)
      return n == 3 * e - 1 ? kontsevich_nd(e) : Rational(0);

    return recurse(e, ins);
  }

  // e<X> + sum_{b_i >= 1} <X with (a_i + 1, b_i - 1)>, i.e. <tau_0(H) X>.
  Rational divisor_sum(int e, const std::vector<Insertion>& rest) {
    Rational total = Rational(e) * eval_any(e, rest);
    total += divisor_shifts(e, rest);
    return total;
  }

  Rational divisor_shifts(int e, const std::vector<Insertion>& rest) {
    Rational total = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i].b == 0 || rest[i].a == 2) continue;
      auto next = rest;
      ++next[i].a;
      --next[i].b;
      total += eval_any(e, std::move(next));
    }
    return total;
  }

  // No stripping here: the caller already removed every strippable point, and
  // a freshly added tau_0(H) must survive until TRR consumes it.
  Rational recurse(int e, const std::vector<Insertion>& ins) {
    if (ins.size() >= 3) return trr(e, ins);
    auto lifted = ins;
    lifted.push_back({1, 0});
    std::sort(lifted.begin(), lifted.end(), std::greater<>{});
    return (recurse(e, lifted) - divisor_shifts(e, ins)) / Rational(e);
  }

  Rational trr(int e, const std::vector<Insertion>& ins) {
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < ins.size(); ++i)
      if (ins[i].b > ins[pivot].b) pivot = i;
    std::vector<Insertion> others;
    for (std::size_t i = 0; i < ins.size(); ++i)
      if (i != pivot) others.push_back(ins[i]);
    const Insertion head = ins[pivot];
    const Insertion anchor2 = others[0];
    const Insertion anchor3 = others[1];
    const std::vector<Insertion> rest(others.begin() + 2, others.end());

    Rational total = 0;
    const std::size_t subsets = std::size_t{1} << rest.size();
    for (int e1 = 0; e1 <= e; ++e1) {
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<Insertion> left{{head.a, head.b - 1}};
        std::vector<Insertion> right{anchor2, anchor3};
        for (std::size_t i = 0; i < rest.size(); ++i)
          ((mask >> i) & 1 ? left : right).push_back(rest[i]);
        for (int mu = 0; mu <= 2; ++mu) {
          auto l = left;
          l.push_back({mu, 0});
          const Rational lv = eval_any(e1, std::move(l));
          if (lv == 0) continue;
          auto r = right;
          r.push_back({2 - mu, 0});
          total += lv * eval_any(e - e1, std::move(r));
        }
      }
    }
    return total;
  }

  bool memoize_;
  Strategy strategy_;
  Memo<DescendantSpec, Rational, std::map<DescendantSpec, Rational>> memo_;
};

inline Rational descendant(const DescendantSpec& spec) {
  return DescendantEngine::shared().descendant(spec);
}

}  // namespace tangency

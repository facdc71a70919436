// SPDX-License-Identifier: Apache-2.0
//
// Genus-0 invariants of P^2 relative to a smooth plane curve Y of degree d,
// for curve classes of degree 1 and 2.
//
// A relative invariant is the integral of prod ev_i^*H^{a_i} psi_i^{b_i}
// over the moduli space M_{(m_1..m_n)} of stable maps with contact order m_i
// to Y at x_i. It is computed by lowering one multiplicity at a time:
//
//   [M_{(..,m,..)}] = (d ev^*H + (m-1) psi) [M_{(..,m-1,..)}] - corrections
//
// until every m_i is zero, where the invariant is an ordinary descendant of
// P^2. Each correction lives on a comb: a component C_0 contracted to a point
// of Y, carrying the lowered point and a subset S of the others, glued to r
// outer components of degrees d_j that meet Y at the node with multiplicity
// mu_j. A comb contributes with weight prod(mu_j) / r!, the 1/r! undoing the
// ordered enumeration of outer components. Its constraints:
//
//   * the lowered point lies on C_0;
//   * sum(mu_j) = (m - 1) + sum_{p in S} m_p.
//
// C_0 is M_{0,k} x Y with k = |S| + 1 + r. The gluing condition is the small
// diagonal of Y^{r+1}; only its even part pairs non-trivially with classes
// built from H and psi. In that part exactly one factor carries 1 and every
// other factor carries the point class of Y. On C_0 the point class is a
// point slot of weight 1, and H|_Y gives a slot of weight d. On an outer
// component the point class is ev^*H / d at the node, because
// H|_Y = d * [pt]. Nodes carry no psi.
//
// Every invariant here is a polynomial in d of degree at most sum(m_i). The
// engine is templated on the d-mode: NumericD evaluates at a fixed integer d,
// SymbolicD yields the polynomial directly.

#pragma once

#include "tangency/absgw.hpp"
#include "tangency/errors.hpp"
#include "tangency/memo.hpp"
#include "tangency/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace tangency {

struct RelPoint {
  int m = 0;  // contact order with Y
  int a = 0;  // power of ev^*H, 0..2
  int b = 0;  // power of psi
  friend auto operator<=>(const RelPoint&, const RelPoint&) = default;
};

struct RelKey {
  int e = 2;
  std::vector<RelPoint> points;

  RelKey canonical() const {
    RelKey c = *this;
    std::sort(c.points.begin(), c.points.end(), std::greater<>{});
    return c;
  }
  int total_multiplicity() const {
    int s = 0;
    for (const auto& p : points) s += p.m;
    return s;
  }
  int insertion_degree() const {
    int s = 0;
    for (const auto& p : points) s += p.a + p.b;
    return s;
  }
  friend auto operator<=>(const RelKey&, const RelKey&) = default;
};

/// Virtual dimension 3e - 1 + n - sum(m_i).
inline int rel_vdim(const RelKey& key) {
  return 3 * key.e - 1 + static_cast<int>(key.points.size()) -
         key.total_multiplicity();
}

/// Fixed integer degree d of Y.
struct NumericD {
  using Scalar = Rational;
  long d;
  Scalar d_value() const { return Rational(d); }
  Scalar over_d(const Scalar& s) const { return s / Rational(d); }
};

/// d kept formal; every scalar is a polynomial in d.
struct SymbolicD {
  using Scalar = PolyQ;
  Scalar d_value() const { return PolyQ::variable(); }
  Scalar over_d(const Scalar& s) const { return s.divided_by_variable(); }
};

/// Which side of the node receives the point class of Y.
enum class NodeSide { contracted, outer };

struct OuterPart {
  int degree = 1;
  int mu = 1;                        // contact order at the node
  std::vector<std::size_t> points;   // indices into the level key
};

/// One comb in the correction sum of a lowering step. Indices refer to the
/// points of the level key (the key with the pivot already lowered).
struct CorrectionTerm {
  int e = 2;
  std::size_t pivot = 0;
  std::vector<std::size_t> contracted;  // S, excluding the pivot
  std::vector<OuterPart> parts;         // r = parts.size()
  std::vector<NodeSide> diag;           // one entry per part

  std::size_t r() const { return parts.size(); }
  /// Special points on C_0.
  std::size_t special_points() const { return contracted.size() + 1 + r(); }
  Integer mu_product() const {
    Integer p = 1;
    for (const auto& part : parts) p *= part.mu;
    return p;
  }
};

namespace detail {

// Ordered compositions of total into exactly parts positive summands.
inline void compositions(int total, int parts, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  if (parts >= 1 && total >= parts) compositions(total, parts, prefix, out);
  return out;
}

}  // namespace detail

/// Every comb of the correction sum when lowering `pivot` out of `level`:
/// all S, r in 1..e, outer degrees, mu-compositions, point distributions
/// and node side choices. Unstable or dimensionally empty combs are still
/// listed; they evaluate to zero.
inline std::vector<CorrectionTerm> enumerate_corrections(const RelKey& level,
                                                         std::size_t pivot) {
  if (pivot >= level.points.size())
    throw QueryError("invalid_pivot", "pivot index out of range");
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < level.points.size(); ++i)
    if (i != pivot) others.push_back(i);

  std::vector<CorrectionTerm> terms;
  const std::size_t subsets = std::size_t{1} << others.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::size_t> in_s;
    std::vector<std::size_t> rest;
    int s = level.points[pivot].m;
    for (std::size_t j = 0; j < others.size(); ++j) {
      if ((mask >> j) & 1) {
        in_s.push_back(others[j]);
        s += level.points[others[j]].m;
      } else {
        rest.push_back(others[j]);
      }
    }
    for (int r = 1; r <= level.e; ++r) {
      const auto mus = detail::compositions(s, r);
      if (mus.empty()) continue;
      const auto degrees = detail::compositions(level.e, r);
      std::size_t assignments = 1;
      for (std::size_t j = 0; j < rest.size(); ++j)
        assignments *= static_cast<std::size_t>(r);
      const std::size_t sides = std::size_t{1} << r;

      for (const auto& degs : degrees) {
        for (const auto& mu : mus) {
          for (std::size_t code = 0; code < assignments; ++code) {
            CorrectionTerm base;
            base.e = level.e;
            base.pivot = pivot;
            base.contracted = in_s;
            base.parts.resize(static_cast<std::size_t>(r));
            for (std::size_t j = 0; j < base.parts.size(); ++j) {
              base.parts[j].degree = degs[j];
              base.parts[j].mu = mu[j];
            }
            std::size_t c = code;
            for (std::size_t p : rest) {
              base.parts[c % static_cast<std::size_t>(r)].points.push_back(p);
              c /= static_cast<std::size_t>(r);
            }
            for (std::size_t side = 0; side < sides; ++side) {
              CorrectionTerm t = base;
              for (std::size_t j = 0; j < t.parts.size(); ++j)
                t.diag.push_back((side >> j) & 1 ? NodeSide::outer
                                                 : NodeSide::contracted);
              terms.push_back(std::move(t));
            }
          }
        }
      }
    }
  }
  return terms;
}

template <class DMode>
class RelativeEngine {
 public:
  using Scalar = typename DMode::Scalar;

  explicit RelativeEngine(DMode mode,
                          DescendantEngine& absolute = DescendantEngine::shared(),
                          bool memoize = true)
      : mode_(std::move(mode)), absolute_(absolute), memoize_(memoize) {}

  const DMode& mode() const { return mode_; }

  Scalar rel_invariant(const RelKey& key) {
    if (key.e != 1 && key.e != 2)
      throw QueryError("invalid_degree",
                       "relative invariants need curve degree 1 or 2, got " +
                           std::to_string(key.e));
    for (const auto& p : key.points)
      if (p.m < 0 || p.a < 0 || p.b < 0)
        throw QueryError("malformed_points",
                         "point entries (m, a, b) must be non-negative");
    return evaluate(key.canonical());
  }

  /// Contribution of one comb, including its weight prod(mu) / r!.
  Scalar correction_value(const RelKey& level, const CorrectionTerm& t) {
    Scalar value = contracted_factor(level, t);
    if (value == Scalar(0)) return value;
    value = value * Scalar(Rational(t.mu_product()) /
                           Rational(factorial(static_cast<unsigned>(t.r()))));
    for (std::size_t j = 0; j < t.parts.size(); ++j) {
      const OuterPart& part = t.parts[j];
      RelKey outer{part.degree, {}};
      for (std::size_t p : part.points) outer.points.push_back(level.points[p]);
      const bool point_outside = t.diag[j] == NodeSide::outer;
      outer.points.push_back({part.mu, point_outside ? 1 : 0, 0});
      Scalar v = evaluate(outer.canonical());
      if (point_outside) v = mode_.over_d(v);
      if (v == Scalar(0)) return Scalar(0);
      value = value * v;
    }
    return value;
  }

  /// Integral over M_{0,k} x Y of the classes living on C_0.
  Scalar contracted_factor(const RelKey& level, const CorrectionTerm& t) const {
    const std::size_t k = t.special_points();
    if (k < 3) return Scalar(0);
    std::vector<std::size_t> on_c0 = t.contracted;
    on_c0.push_back(t.pivot);

    int psi_total = 0;
    for (std::size_t p : on_c0) psi_total += level.points[p].b;
    if (psi_total != static_cast<int>(k) - 3) return Scalar(0);
    Integer psi = factorial(static_cast<unsigned>(k - 3));
    for (std::size_t p : on_c0)
      psi /= factorial(static_cast<unsigned>(level.points[p].b));

    int slots = 0;
    Scalar weight(1);
    for (std::size_t p : on_c0) {
      const int a = level.points[p].a;
      if (a >= 2) return Scalar(0);
      if (a == 1) {
        ++slots;
        weight = mode_.d_value();
      }
    }
    for (NodeSide side : t.diag)
      if (side == NodeSide::contracted) ++slots;
    if (slots != 1) return Scalar(0);
    return weight * Scalar(Rational(psi));
  }

  MemoStats stats() const { return memo_.stats(); }

 private:
  // key is canonical
  Scalar evaluate(const RelKey& key) {
    for (const auto& p : key.points)
      if (p.a > 2) return Scalar(0);
    if (key.insertion_degree() != rel_vdim(key)) return Scalar(0);
    if (memoize_) {
      if (auto hit = memo_.find(key)) return *hit;
    }
    Scalar value = lower(key);
    if (memoize_) memo_.insert(key, value);
    return value;
  }

  Scalar lower(const RelKey& key) {
    const auto pivot_it = std::find_if(key.points.begin(), key.points.end(),
                                       [](const RelPoint& p) { return p.m > 0; });
    if (pivot_it == key.points.end()) {
      DescendantSpec spec{key.e, {}};
      for (const auto& p : key.points) spec.insertions.push_back({p.a, p.b});
      return Scalar(absolute_.descendant(spec));
    }
    const auto pivot = static_cast<std::size_t>(pivot_it - key.points.begin());
    RelKey level = key;
    const int lowered = --level.points[pivot].m;

    Scalar result(0);
    if (level.points[pivot].a < 2) {
      RelKey with_h = level;
      ++with_h.points[pivot].a;
      result = result + mode_.d_value() * evaluate(with_h.canonical());
    }
    if (lowered > 0) {
      RelKey with_psi = level;
      ++with_psi.points[pivot].b;
      result = result + Scalar(Rational(lowered)) * evaluate(with_psi.canonical());
    }
    for (const auto& term : enumerate_corrections(level, pivot))
      result = result - correction_value(level, term);
    return result;
  }

  DMode mode_;
  DescendantEngine& absolute_;
  bool memoize_;
  Memo<RelKey, Scalar, std::map<RelKey, Scalar>> memo_;
};

/// Five points of contact order 2 on a conic.
inline RelKey five_fold_tangency_key() {
  return RelKey{2, std::vector<RelPoint>(5, RelPoint{2, 0, 0})};
}

/// Virtual number of conics 5-fold tangent to Y: deg [M_{(2,2,2,2,2)}] / 5!.
inline Rational N_virtual(long d) {
  if (d < 5) throw QueryError("d_out_of_range", "N_d needs d >= 5");
  RelativeEngine<NumericD> engine(NumericD{d});
  return engine.rel_invariant(five_fold_tangency_key()) / Rational(120);
}

inline PolyQ N_virtual_symbolic() {
  RelativeEngine<SymbolicD> engine(SymbolicD{});
  return engine.rel_invariant(five_fold_tangency_key()) / Rational(120);
}

}  // namespace tangency

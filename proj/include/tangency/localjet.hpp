// SPDX-License-Identifier: Apache-2.0
//
// Truncated power series over exact rationals, and the local multiplicity
// computations on the double-cover components of M_{(2,2,2,2,2)} that are
// redone with them.

#pragma once

#include "tangency/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tangency {

/// Polynomial in at most three named variables, truncated above a total
/// degree. All arithmetic drops terms beyond the truncation order.
class Jet {
 public:
  static constexpr std::size_t kMaxVariables = 3;
  static constexpr int kDefaultOrder = 8;
  using Exponent = std::array<int, kMaxVariables>;

  explicit Jet(std::vector<std::string> variables, int order = kDefaultOrder)
      : vars_(std::move(variables)), order_(order) {
    if (vars_.empty() || vars_.size() > kMaxVariables)
      throw std::invalid_argument("jets take between 1 and 3 variables");
    if (order_ < 0) throw std::invalid_argument("negative truncation order");
  }

  static Jet constant(std::vector<std::string> variables, const Rational& c,
                      int order = kDefaultOrder) {
    Jet j(std::move(variables), order);
    j.add_term({0, 0, 0}, c);
    return j;
  }

  static Jet variable(std::vector<std::string> variables, const std::string& name,
                      int order = kDefaultOrder) {
    Jet j(std::move(variables), order);
    Exponent e{0, 0, 0};
    e[j.index_of(name)] = 1;
    j.add_term(e, 1);
    return j;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of name^power, as a jet in the same variables.
  Jet coefficient(const std::string& name, int power) const {
    const std::size_t v = index_of(name);
    Jet out = empty_like();
    for (const auto& [e, c] : terms_) {
      if (e[v] != power) continue;
      Exponent f = e;
      f[v] = 0;
      out.add_term(f, c);
    }
    return out;
  }

  Jet derivative(const std::string& name) const {
    const std::size_t v = index_of(name);
    Jet out = empty_like();
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponent f = e;
      --f[v];
      out.add_term(f, c * e[v]);
    }
    return out;
  }

  /// Replaces `name` by `value`, which must have no constant term so that the
  /// result is exact up to the truncation order.
  Jet substitute(const std::string& name, const Jet& value) const {
    require_compatible(value);
    if (value.coefficient(Exponent{0, 0, 0}) != 0)
      throw std::invalid_argument("substituted jet must have zero constant term");
    const std::size_t v = index_of(name);
    std::vector<Jet> powers{constant(vars_, 1, order_)};
    Jet out = empty_like();
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(powers.size()) <= e[v])
        powers.push_back(powers.back() * value);
      Exponent f = e;
      f[v] = 0;
      Jet mono = empty_like();
      mono.add_term(f, c);
      out += mono * powers[static_cast<std::size_t>(e[v])];
    }
    return out;
  }

  bool depends_only_on(const std::string& name) const {
    const std::size_t v = index_of(name);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (i != v && e[i] != 0) return false;
    return true;
  }

  Jet& operator+=(const Jet& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Jet& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= Rational(-1); }
  friend Jet operator*(Jet a, const Rational& s) { return a *= s; }
  friend Jet operator*(const Rational& s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, const Rational& s) {
    a.add_term({0, 0, 0}, s);
    return a;
  }
  friend Jet operator-(Jet a, const Rational& s) {
    a.add_term({0, 0, 0}, -s);
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.require_compatible(b);
    Jet out = a.empty_like();
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{};
        for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  Jet pow(unsigned n) const {
    Jet out = constant(vars_, 1, order_);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  Jet empty_like() const { return Jet(vars_, order_); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown jet variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void require_compatible(const Jet& o) const {
    if (vars_ != o.vars_ || order_ != o.order_)
      throw std::invalid_argument("jets over different variables or orders");
  }

  void add_term(const Exponent& e, const Rational& c) {
    int degree = 0;
    for (int x : e) degree += x;
    if (degree > order_ || c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  int order_;
  std::map<Exponent, Rational> terms_;
};

/// Lowest exponent of `name` with a non-zero coefficient. std::nullopt means
/// the jet vanishes up to its truncation order, i.e. the order is at least
/// order() + 1.
inline std::optional<int> vanishing_order(const Jet& j, const std::string& name) {
  if (!j.depends_only_on(name))
    throw std::invalid_argument("jet depends on variables other than " + name);
  std::optional<int> best;
  for (const auto& [e, c] : j.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    if (!best || deg < *best) best = deg;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exact linear algebra.

using RationalMatrix = std::vector<std::vector<Rational>>;

inline std::size_t matrix_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Tangency conditions on the conic (s:t) -> (s^2:st:t^2).

/// Derivatives of the contact conditions at (1:lambda_j) with respect to the
/// first sum(m) coefficients of F: rows (C(i,k) lambda_j^{i-k})_i for k < m_j.
inline RationalMatrix tangency_matrix(std::span<const Rational> lambda,
                                      std::span<const int> mult) {
  if (lambda.size() != mult.size())
    throw std::invalid_argument("one multiplicity per point");
  int size = 0;
  for (int m : mult) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    size += m;
  }
  if (size > 10) throw std::invalid_argument("total multiplicity exceeds 10");
  RationalMatrix rows;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    for (int k = 0; k < mult[j]; ++k) {
      std::vector<Rational> row(static_cast<std::size_t>(size), 0);
      for (int i = k; i < size; ++i) {
        Rational p = 1;
        for (int q = 0; q < i - k; ++q) p *= lambda[j];
        row[static_cast<std::size_t>(i)] = Rational(binomial(i, k)) * p;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline Rational tangency_det(std::span<const Rational> lambda,
                             std::span<const int> mult) {
  return determinant(tangency_matrix(lambda, mult));
}

/// prod_{i<j} (lambda_i - lambda_j)^{m_i m_j}. Equals tangency_det up to the
/// sign (-1)^{sum_{i<j} m_i m_j}.
inline Rational tangency_product(std::span<const Rational> lambda,
                                 std::span<const int> mult) {
  Rational p = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      for (int q = 0; q < mult[i] * mult[j]; ++q) p *= lambda[i] - lambda[j];
  return p;
}

inline int tangency_sign(std::span<const int> mult) {
  int pairs = 0;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t j = i + 1; j < mult.size(); ++j) pairs += mult[i] * mult[j];
  return pairs % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Local models.

/// Order in epsilon of the tangency section at x_5 along the family of double
/// covers of nearby simple tangent lines. `tails` adds the unspecified
/// higher-order terms eps^5, t^2 eps^4 and z_1^3 with the given coefficients.
inline std::optional<int> meeting_component_order(std::array<Rational, 3> tails = {}) {
  const std::vector<std::string> vars{"t", "eps", "xi"};
  const Jet t = Jet::variable(vars, "t");
  const Jet eps = Jet::variable(vars, "eps");
  const Jet xi = Jet::variable(vars, "xi");

  const Jet z1 = t * t - Rational(1, 2) * eps.pow(2);
  const Jet z2 = Rational(1, 4) * eps.pow(4) + tails[0] * eps.pow(5) +
                 tails[1] * t.pow(2) * eps.pow(4);
  const Jet equation = z2 - z1 * z1 + tails[2] * z1.pow(3);
  // blow-up chart: t / eps = 1 + xi near x_5
  const Jet on_chart = equation.substitute("t", eps * (xi + Rational(1)));
  return vanishing_order(on_chart.coefficient("xi", 1), "eps");
}

/// Order in epsilon at x_5 of the section f^*dz of the cotangent line, with
/// z = eps^2 u (u - 1) and u = t / eps = 1 + xi.
inline std::optional<int> psi_section_order() {
  const std::vector<std::string> vars{"eps", "xi"};
  const Jet eps = Jet::variable(vars, "eps");
  const Jet u = Jet::variable(vars, "xi") + Rational(1);
  const Jet z = eps.pow(2) * u * (u - Rational(1));
  return vanishing_order(z.derivative("xi").coefficient("xi", 0), "eps");
}

/// Degree of [M_(2,2,2,3)] on M_C: the branch moving the ramification point
/// contributes the order of the t^2 coefficient of t^2 (t + eps)^2, and the
/// branch moving the line contributes 1.
struct SplitDegree {
  std::optional<int> ramification_branch;
  int line_branch = 1;
  std::optional<int> total() const {
    if (!ramification_branch) return std::nullopt;
    return *ramification_branch + line_branch;
  }
};

inline SplitDegree m2223_degree() {
  const std::vector<std::string> vars{"t", "eps"};
  const Jet t = Jet::variable(vars, "t");
  const Jet eps = Jet::variable(vars, "eps");
  const Jet pulled_back = t.pow(2) * (t + eps).pow(2);
  return {vanishing_order(pulled_back.coefficient("t", 2), "eps"), 1};
}

/// Linearized tangency conditions at the point M_B.
struct BitangentLinearization {
  RationalMatrix equations;      // 6 x 8, unknowns eps_1..eps_8
  std::size_t rank = 0;
  bool matches_relations = false;  // row space = <e1+e2+e3, e4, ..., e8>
  bool base_point_tangent = false; // unperturbed map satisfies all six
  std::size_t ramification_rank = 0;  // of the local t^2 + eps1 model, expect 2
  int redraws = 0;
};

namespace detail {

// All exponent triples (i, j, k) with i + j + k = d, in a fixed order.
inline std::vector<std::array<int, 3>> monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

inline Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::bernoulli_distribution neg(0.5);
  const long n = num(rng);
  return make_rational(neg(rng) ? -n : n, den(rng));
}

inline BitangentLinearization linearize_once(int d, std::mt19937_64& rng) {
  // F with the bitangent z_2 = 0 tangent at (1:0:0) and (0:1:0).
  std::map<std::array<int, 3>, Rational> coeff;
  for (const auto& mono : monomials(d)) coeff[mono] = random_nonzero(rng);
  coeff[{d, 0, 0}] = 0;
  coeff[{d - 1, 1, 0}] = 0;
  coeff[{0, d, 0}] = 0;
  coeff[{1, d - 1, 0}] = 0;

  const std::vector<std::string> vars{"xi", "e"};
  const int order = 2;
  const Jet xi = Jet::variable(vars, "xi", order);
  const Jet e = Jet::variable(vars, "e", order);
  const Jet one = Jet::constant(vars, 1, order);
  const Jet zero(vars, order);

  const std::array<std::pair<Jet, Jet>, 3> charts{
      std::pair{one, xi}, std::pair{xi, one}, std::pair{one, xi + Rational(1)}};

  BitangentLinearization out;
  out.equations.assign(6, std::vector<Rational>(8, 0));
  out.base_point_tangent = true;
  for (int unknown = 0; unknown < 8; ++unknown) {
    for (std::size_t c = 0; c < charts.size(); ++c) {
      const auto& [s, t] = charts[c];
      std::array<Jet, 3> z{s * s - t * t, s * t, zero};
      const std::array<Jet, 3> dirs[8] = {
          {s * s, zero, zero}, {s * t, zero, zero}, {t * t, zero, zero},
          {zero, s * s, zero}, {zero, t * t, zero}, {zero, zero, s * s},
          {zero, zero, s * t}, {zero, zero, t * t}};
      for (std::size_t k = 0; k < 3; ++k) z[k] += e * dirs[unknown][k];

      std::array<std::vector<Jet>, 3> pw;
      for (std::size_t k = 0; k < 3; ++k) {
        pw[k].push_back(one);
        for (int p = 1; p <= d; ++p) pw[k].push_back(pw[k].back() * z[k]);
      }
      Jet f = zero;
      for (const auto& [mono, a] : coeff) {
        if (a == 0) continue;
        f += a * (pw[0][static_cast<std::size_t>(mono[0])] *
                  pw[1][static_cast<std::size_t>(mono[1])] *
                  pw[2][static_cast<std::size_t>(mono[2])]);
      }
      out.equations[2 * c][static_cast<std::size_t>(unknown)] = f.coefficient({0, 1, 0});
      out.equations[2 * c + 1][static_cast<std::size_t>(unknown)] =
          f.coefficient({1, 1, 0});
      if (f.coefficient({0, 0, 0}) != 0 || f.coefficient({1, 0, 0}) != 0)
        out.base_point_tangent = false;
    }
  }
  out.rank = matrix_rank(out.equations);

  RationalMatrix relations(6, std::vector<Rational>(8, 0));
  relations[0][0] = relations[0][1] = relations[0][2] = 1;
  for (std::size_t i = 1; i < 6; ++i) relations[i][i + 2] = 1;
  RationalMatrix stacked = out.equations;
  stacked.insert(stacked.end(), relations.begin(), relations.end());
  out.matches_relations = out.rank == 6 && matrix_rank(stacked) == 6;

  // t -> t^2 + e1 with marked point t = e2: constant and linear xi terms of
  // (e2 + xi)^2 + e1, linearized in (e1, e2).
  const std::vector<std::string> loc{"xi", "e1", "e2"};
  const Jet lxi = Jet::variable(loc, "xi", 2);
  const Jet e1 = Jet::variable(loc, "e1", 2);
  const Jet e2 = Jet::variable(loc, "e2", 2);
  const Jet g = (e2 + lxi).pow(2) + e1;
  const RationalMatrix ram{
      {g.coefficient({0, 1, 0}), g.coefficient({0, 0, 1})},
      {g.coefficient({1, 1, 0}), g.coefficient({1, 0, 1})}};
  out.ramification_rank = matrix_rank(ram);
  return out;
}

}  // namespace detail

/// Builds the six linearized tangency equations for a random F of degree d
/// (d >= 5) and redraws while the random choice is degenerate.
inline BitangentLinearization bitangent_linearization(int d = 6,
                                                      std::uint64_t seed = 20050101) {
  if (d < 5) throw std::invalid_argument("degree must be at least 5");
  std::mt19937_64 rng(seed);
  constexpr int kMaxRedraws = 16;
  BitangentLinearization result;
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    result = detail::linearize_once(d, rng);
    result.redraws = attempt;
    if (result.rank == 6) break;
  }
  return result;
}

struct VirtualConstants {
  std::optional<int> comp4_order;
  std::optional<int> psi_order;
  SplitDegree m2223;
  BitangentLinearization bd;
  bool tails_stable = false;
};

inline VirtualConstants verify_virtual_constants(std::uint64_t seed = 20050101) {
  VirtualConstants v;
  v.comp4_order = meeting_component_order();
  v.psi_order = psi_section_order();
  v.m2223 = m2223_degree();
  v.bd = bitangent_linearization(6, seed);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  v.tails_stable = true;
  for (int trial = 0; trial < 8; ++trial) {
    const std::array<Rational, 3> tails{detail::random_nonzero(rng),
                                        detail::random_nonzero(rng),
                                        detail::random_nonzero(rng)};
    if (meeting_component_order(tails) != v.comp4_order) v.tails_stable = false;
  }
  return v;
}

}  // namespace tangency

// SPDX-License-Identifier: Apache-2.0
//
// Rational curves on the K3 double cover of P^2 branched along a sextic.

#pragma once

#include "tangency/enumcount.hpp"
#include "tangency/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tangency {

/// Coefficients G_0..G_N of prod_{i>0} (1 - q^i)^{-24}.
using QSeries = std::vector<Integer>;

inline QSeries eta_coeffs(std::size_t n) {
  QSeries g(n + 1, 0);
  g[0] = 1;
  // Multiplying by 1/(1 - q^i) is a running sum with stride i.
  for (std::size_t i = 1; i <= n; ++i)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t k = i; k <= n; ++k) g[k] += g[k - i];
  return g;
}

struct Degree6Report {
  Rational conics;           // n_6, smooth 5-fold tangent conics
  Rational line_pairs;       // 2 * C(B, 2)
  Rational nodal_covers;     // 2 * B
  Integer g5;
  bool holds = false;
};

/// n_6 + 2 C(B,2) + 2 B against G_5, with B the bitangents of a sextic.
/// Either ingredient can be overridden to exercise the failure path.
inline Degree6Report check_degree6_identity(
    std::optional<Rational> bitangents = std::nullopt,
    std::optional<Rational> conics = std::nullopt) {
  const Rational b = bitangents.value_or(bitangent_count(6));
  Degree6Report rep;
  rep.conics = conics.value_or(n_enumerative(6));
  rep.line_pairs = b * (b - 1);
  rep.nodal_covers = 2 * b;
  rep.g5 = eta_coeffs(5)[5];
  rep.holds = rep.conics + rep.line_pairs + rep.nodal_covers == Rational(rep.g5);
  return rep;
}

/// One divisor k of beta together with the series index (beta/k)^2 / 2 + 1.
struct CoverTerm {
  long k;
  std::size_t index;
};

/// Conjectural multiple-cover formula n_beta = sum_k k^{-3} G_{index(k)}.
inline Rational n_beta_conjecture(std::span<const CoverTerm> terms) {
  std::size_t top = 0;
  for (const auto& t : terms) {
    if (t.k <= 0) throw std::invalid_argument("cover degree k must be positive");
    top = std::max(top, t.index);
  }
  const QSeries g = eta_coeffs(top);
  Rational total = 0;
  for (const auto& t : terms)
    total += Rational(g[t.index]) / Rational(Integer(t.k) * t.k * t.k);
  return total;
}

/// Contribution of the double covers of one nodal rational curve that
/// factor through its normalization.
inline Rational double_cover_contribution() { return Rational(1, 8); }

}  // namespace tangency

// SPDX-License-Identifier: Apache-2.0
//
// From the virtual count N_d to the enumerative count n_d of smooth conics
// 5-fold tangent to Y, by removing the double covers of bitangents:
//
//   N_d = n_d + (1/2) d(d+3)(d-2)(d-3)(d-4)(d-5) b_d
//             + (1/8) d(d+3)(d-2)(d-3)(d-4) c_d

#pragma once

#include "tangency/errors.hpp"
#include "tangency/relgw.hpp"
#include "tangency/scalar.hpp"

namespace tangency {

template <class S>
S bitangent_formula(const S& d) {
  return S(d * (d + S(3)) * (d - S(2)) * (d - S(3))) / Rational(2);
}

inline Rational bitangent_count(long d) { return bitangent_formula(Rational(d)); }

/// Non-enumerative components of M_{(2,2,2,2,2)} attached to one bitangent.
struct ComponentCensus {
  Rational bitangents;
  Rational isolated_points_per_bitangent;  // type B: 5! (d-4)(d-5)
  Rational curves_per_bitangent;           // type C: 5!/4 (d-4)
};

inline ComponentCensus census(long d) {
  const Rational dq(d);
  return {bitangent_count(d), Rational(120) * (dq - 4) * (dq - 5),
          Rational(30) * (dq - 4)};
}

/// Local multiplicities entering c_d. The defaults are the published values;
/// localjet re-derives the first, second and fourth.
struct VirtualIngredients {
  Rational component_order = 4;    // vanishing of sigma on the meeting component
  Rational psi_integral = 2;       // integral of psi_5 over M_C
  Rational virtual_factor = 2;     // virtual class of M_(2,2,2,2,1) on M_C
  Rational m2223_degree = 3;       // degree of [M_(2,2,2,3)] on M_C
  Rational last_coefficient = 3;   // mu in the lowering relation
};

/// Solves component_order + virtual_factor * psi_integral
///      = c_d + last_coefficient * m2223_degree.
inline Rational assemble_cd(const VirtualIngredients& in = {}) {
  return in.component_order + in.virtual_factor * in.psi_integral -
         in.last_coefficient * in.m2223_degree;
}

/// Type-B points are smooth points of the moduli space.
inline Rational assemble_bd() { return 1; }

template <class S>
S b_correction(const S& d) {
  return S(bitangent_formula(d) * (d - S(4)) * (d - S(5)));
}

template <class S>
S c_correction(const S& d) {
  return S(bitangent_formula(d) * (d - S(4))) / Rational(4);
}

template <class S>
S n_from_N(const S& N, const S& d, const Rational& bd, const Rational& cd) {
  return N - b_correction(d) * S(bd) - c_correction(d) * S(cd);
}

inline Rational n_enumerative(long d) {
  if (d < 5) throw QueryError("d_out_of_range", "n_d needs d >= 5");
  return n_from_N(N_virtual(d), Rational(d), assemble_bd(), assemble_cd());
}

inline PolyQ n_enumerative_symbolic() {
  return n_from_N(N_virtual_symbolic(), PolyQ::variable(), assemble_bd(),
                  assemble_cd());
}

}  // namespace tangency

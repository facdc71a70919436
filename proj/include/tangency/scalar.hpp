// SPDX-License-Identifier: Apache-2.0
//
// Exact scalars: arbitrary-precision rationals and dense univariate
// polynomials over them.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tangency {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed input to any exact-arithmetic routine.
class ArithmeticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by lagrange_interpolate when two samples share an x-value.
class DuplicateNodeError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ArithmeticError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return c;
}

/// Dense polynomial in the formal variable d, coefficients low degree first.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT: implicit
  PolyQ(long c) : PolyQ(Rational(c)) {}              // NOLINT: implicit
  PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// The polynomial "d".
  static PolyQ variable() { return PolyQ{Rational(0), Rational(1)}; }

  /// Product of (d - r) over the given roots.
  static PolyQ from_roots(std::span<const Rational> roots) {
    PolyQ p(1);
    for (const auto& r : roots) p *= PolyQ{Rational(-r), Rational(1)};
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }
  Rational leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  /// Exact division by d; the constant term must vanish.
  PolyQ divided_by_variable() const {
    if (is_zero()) return {};
    if (coeffs_.front() != 0)
      throw ArithmeticError("polynomial is not divisible by d");
    return PolyQ(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
  }

  PolyQ& operator+=(const PolyQ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  PolyQ& operator-=(const PolyQ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  PolyQ& operator*=(const PolyQ& o) {
    *this = *this * o;
    return *this;
  }
  PolyQ& operator/=(const Rational& c) {
    if (c == 0) throw ArithmeticError("division by zero");
    for (auto& x : coeffs_) x /= c;
    return *this;
  }

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator-(PolyQ a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyQ(std::move(out));
  }
  friend PolyQ operator/(PolyQ a, const Rational& c) { return a /= c; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const PolyQ& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const Rational& c = p.coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Rational mag = abs(c);
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (mag != 1 || i == 0) os << mag.get_str() << (i > 0 ? "*" : "");
      if (i >= 1) os << "d";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const PolyQ& p, const Rational& x) { return p(x); }

struct Sample {
  Rational x;
  Rational y;
};

/// Unique polynomial of degree < samples.size() through every sample,
/// built in Newton form and expanded.
inline PolyQ lagrange_interpolate(std::span<const Sample> samples) {
  if (samples.empty()) throw ArithmeticError("interpolation needs samples");
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (samples[i].x == samples[j].x)
        throw DuplicateNodeError("duplicate interpolation node x = " +
                                 to_string(samples[i].x));

  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = samples[i].y;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].x - samples[i - level].x);

  PolyQ result;
  for (std::size_t i = n; i-- > 0;) {
    result *= PolyQ{Rational(-samples[i].x), Rational(1)};
    result += PolyQ(dd[i]);
  }
  return result;
}

}  // namespace tangency

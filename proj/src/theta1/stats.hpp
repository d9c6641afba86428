// Copyright 2026 The theta1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Statistics of theta coefficients at primes: exact value distributions,
// zero densities, non-vanishing counts, and aggregates across levels.

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "theta1/characters.hpp"
#include "theta1/rational.hpp"

namespace theta1 {

/// The algebraic number 2*cos(2*pi*k/d) as a canonical key: the fraction is
/// reduced with 0 <= k/d <= 1/2, so equal values share one representation.
/// Every good-prime coefficient c_p of a theta series is such a number.
struct CosValue {
  i64 k = 0;
  i64 d = 1;

  /// The value 2*cos(2*pi*num/den).
  static CosValue from_angle(i64 num, i64 den);
  static CosValue zero() { return from_angle(1, 4); }
  static CosValue two() { return from_angle(0, 1); }

  long double value() const;
  bool is_zero() const { return k == 1 && d == 4; }

  bool operator==(const CosValue& o) const { return k == o.k && d == o.d; }
  bool operator!=(const CosValue& o) const { return !(*this == o); }
  /// Orders by numerical value (cos is decreasing on [0, pi]).
  bool operator<(const CosValue& o) const {
    return static_cast<i128>(k) * o.d > static_cast<i128>(o.k) * d;
  }
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Exact and empirical prime-value distributions for one character
// ---------------------------------------------------------------------------

/// A finite measure with exact rational weights on CosValue atoms.
struct AtomicMeasure {
  std::vector<std::pair<CosValue, Rational>> atoms;  // unique keys, ascending value

  Rational total_mass() const;
  Rational mass_at(const CosValue& v) const;
  long double moment(int r) const;
};

/// The limiting distribution of c_p over good primes, by the splitting laws:
/// half the primes are inert (c_p = 0), and each split class pair {c, c^-1}
/// receives density 1/(2h) per class with value psi(c) + conj(psi(c)).
AtomicMeasure theoretical_mu(const ClassCharacter& psi);

/// sum over classes c of (psi(c) + conj(psi)(c))^r, exactly.  The r-th moment
/// of theoretical_mu equals this divided by 2h, enabling exact moment checks.
Cyclo theoretical_moment_sum(const ClassCharacter& psi, int r);

/// Counting measure of c_p over the good primes of the table.
struct EmpiricalMeasure {
  i64 sample_count = 0;                          // good primes (ramified excluded)
  std::vector<std::pair<CosValue, i64>> counts;  // ascending value

  i64 count_at(const CosValue& v) const;
  long double mass_at(const CosValue& v) const;
  long double moment(int r) const;
};

EmpiricalMeasure empirical_mu(const ClassCharacter& psi, const SplitTable& table);

/// Largest difference between the measures' masses over the union of their
/// atoms (total-variation style distance for atomic measures).
long double measure_discrepancy(const AtomicMeasure& mu, const EmpiricalMeasure& nu);

// ---------------------------------------------------------------------------
// Vanishing statistics
// ---------------------------------------------------------------------------

struct ZeroDensityReport {
  Rational theoretical;  // 1/2 + #{classes with psi(c) = +-i} / (2h)
  i64 good_primes = 0;
  i64 zero_count = 0;

  long double empirical() const {
    return good_primes == 0 ? 0.0L : static_cast<long double>(zero_count) / static_cast<long double>(good_primes);
  }
  long double gap() const { return std::fabs(empirical() - theoretical.value()); }
};

/// Density of good primes with c_p = 0: every inert prime contributes, plus
/// split primes whose class value is a primitive fourth root of unity (none
/// when the character order is odd, which is always the case at prime level).
ZeroDensityReport zero_density(const ClassCharacter& psi, const SplitTable& table);

/// #{n <= x : c_n != 0} at checkpoint values x, computed by a segmented
/// multiplicative sieve that never stores coefficients: c_n != 0 iff every
/// prime-power part is nonzero, and vanishing at p^e depends only on e and
/// the order of psi(P)^2.
struct NonvanishingCount {
  i64 limit = 0;
  std::vector<i64> checkpoints;  // powers of two from 1024 up to the limit
  std::vector<i64> counts;       // nonzero coefficients up to each checkpoint
  double fitted_exponent = 0;    // beta in count(x) ~ C x / (log x)^beta
};

NonvanishingCount count_nonzero(const ClassCharacter& psi, i64 limit);

/// Least-squares fit of log(count/x) against log log x; returns the negated
/// slope, i.e. the exponent beta in count(x) ~ C x / (log x)^beta.
double nonvanishing_exponent_fit(const std::vector<i64>& xs, const std::vector<i64>& counts);

// ---------------------------------------------------------------------------
// Value-set finiteness
// ---------------------------------------------------------------------------

struct FiniteValueReport {
  i64 good_primes = 0;
  std::vector<std::pair<CosValue, i64>> value_counts;  // distinct c_p values observed
  long double max_abs = 0;         // largest |c_p| observed
  long double max_galois_abs = 0;  // largest |conjugate| over all observed values

  i64 distinct_values() const { return static_cast<i64>(value_counts.size()); }
  /// Number of good primes whose |c_p| exceeds the bound.
  i64 count_above(long double bound) const;
};

/// The value set of c_p over good primes is finite: at most h/2 + 2 distinct
/// values, each a sum of two roots of unity, so |value| <= 2 holds for every
/// Galois conjugate as well.
FiniteValueReport finite_value_check(const ClassCharacter& psi, const SplitTable& table);

// ---------------------------------------------------------------------------
// Aggregates across levels
// ---------------------------------------------------------------------------

/// An atomic measure with floating-point weights, for averages over many
/// levels (a common exact denominator would overflow).
struct RealAtomicMeasure {
  std::vector<std::pair<CosValue, long double>> atoms;  // ascending value

  long double total_mass() const;
  long double mass_at(const CosValue& v) const;
  long double moment(int r) const;
};

/// Equal-weight average of the per-character prime-value distribution over
/// every non-real character pair of every valid level q <= q_max.  With
/// sample_limit = 0 the exact theoretical_mu of each character is pooled;
/// otherwise each character contributes its empirical distribution over
/// primes <= sample_limit.  Levels with h = 1 have no non-real characters
/// and contribute nothing.  `threads` only splits the work; results are
/// byte-identical for any thread count.
RealAtomicMeasure averaged_measure(i64 q_max, i64 sample_limit = 0, int threads = 1);

/// Level, class number, and dimension (h-1)/2 of the dihedral subspace for
/// every valid level q <= q_max, with a power-law fit h ~ q^slope.
struct DimensionRow {
  i64 q = 0;
  i64 h = 0;
  i64 dim = 0;
};

struct DimensionScan {
  std::vector<DimensionRow> rows;
  double slope = 0;      // least-squares slope of log h against log q
  double intercept = 0;  // interpolated log h at log q = 0
};

DimensionScan dimension_scan(i64 q_max, int threads = 1);

}  // namespace theta1

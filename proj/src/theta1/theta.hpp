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
// Weight-one theta series attached to class group characters: the q-expansion
// coefficient c_n counts integral ideals of norm n weighted by the character,
// c_n = sum_{N(I) = n} psi(I).  These are Hecke eigenforms; coefficients live
// in Z[zeta_m] for m the character order.

#pragma once

#include <optional>

#include "theta1/characters.hpp"
#include "theta1/cyclotomic.hpp"

namespace theta1 {

/// The first n_max coefficients of the theta series of a non-real class
/// group character, in exact cyclotomic arithmetic.
class ThetaSeries {
 public:
  const ClassGroup& group() const { return psi_.group(); }
  const std::shared_ptr<const ClassGroup>& group_ptr() const { return psi_.group_ptr(); }
  const ClassCharacter& character() const { return psi_; }
  i64 limit() const { return n_max_; }

  /// Coefficients live in Z[zeta_m] for this m (the character order).
  i64 ring_modulus() const { return modulus_; }

  /// c_n for 1 <= n <= limit(); c_1 = 1.
  Cyclo coefficient(i64 n) const;

  /// Numerical value of c_n.  Coefficients of these series are real.
  long double coefficient_real(i64 n) const;

  /// Adds delta to the rational part of c_n.  A deliberate fault-injection
  /// hook: consistency checks must detect the damage.
  void corrupt_coefficient(i64 n, i64 delta);

 private:
  friend ThetaSeries theta_coefficients(const ClassCharacter& psi, i64 n_max);

  explicit ThetaSeries(const ClassCharacter& psi) : psi_(psi) {}

  ClassCharacter psi_;
  i64 n_max_ = 0;
  i64 modulus_ = 1;
  i64 phi_ = 1;
  std::vector<i64> flat_;  // (n_max + 1) * phi_ power-basis words
};

/// Builds the theta series of psi up to n_max.  Prime-power coefficients come
/// from the defining ideal count (a sum over the ideals of norm p^k), and
/// composite ones from multiplicativity; no recurrence is used, so recurrence
/// checks on the result are meaningful.  Throws domain_error for a real
/// character: its theta series is an Eisenstein series, not a cusp form, and
/// is out of scope here.
ThetaSeries theta_coefficients(const ClassCharacter& psi, i64 n_max);

/// c_n computed directly from the definition: enumerate the ideals of norm n
/// by factoring n and walking every admissible product of prime ideals,
/// composing actual ideal classes and summing character values.  Slow and
/// independent of the series construction; for cross-checks.
Cyclo direct_coefficient_oracle(const ClassCharacter& psi, i64 n);

// ---------------------------------------------------------------------------
// Structural verification
// ---------------------------------------------------------------------------

struct HeckeViolation {
  enum class Kind { kPrimePower, kProduct };
  Kind kind = Kind::kPrimePower;
  // kPrimePower: the recurrence at (p, k), i.e. the identity for c_{p^{k+1}}.
  i64 p = 0, k = 0;
  // kProduct: c_{m*n} != c_m * c_n for the coprime split (m, n).
  i64 m = 0, n = 0;
};

struct HeckeReport {
  bool ok = true;
  i64 power_identities_checked = 0;
  i64 products_checked = 0;
  std::optional<HeckeViolation> first;
};

/// Exact verification that the coefficients satisfy the Hecke eigenform
/// structure: c_{p^{k+1}} = c_p c_{p^k} - chi(p) c_{p^{k-1}} with
/// chi(p) = kronecker(-q, p) (zero at the ramified prime, which collapses the
/// identity to c_{q^{k+1}} = c_q c_{q^k}), and c_{mn} = c_m c_n for coprime
/// m, n.  Reports the first violated identity.
HeckeReport verify_hecke(const ThetaSeries& theta);

struct RamanujanReport {
  i64 primes_checked = 0;
  long double max_prime_abs = 0;  // max |c_p| over good primes
  i64 argmax_prime = 0;
  bool prime_bound_ok = true;  // |c_p| <= 2 for good p (exact bound; numerical slack 1e-9)
  i64 values_checked = 0;
  bool divisor_bound_ok = true;  // |c_n| <= tau(n) for all n
  i64 first_divisor_violation = 0;
};

/// Numerical check of the Ramanujan-style bounds |c_p| <= 2 at good primes
/// and |c_n| <= tau(n) everywhere, which hold with equality cases for
/// dihedral eigenforms.
RamanujanReport ramanujan_check(const ThetaSeries& theta);

// ---------------------------------------------------------------------------
// The dihedral basis at level q
// ---------------------------------------------------------------------------

/// One theta series per conjugate character pair (conjugate characters give
/// identical series), i.e. (h-1)/2 series, each up to n_max.
std::vector<ThetaSeries> dihedral_basis(std::shared_ptr<const ClassGroup> group, i64 n_max);

struct BasisReport {
  i64 columns = 0;          // coefficients compared per series
  bool pairwise_distinct = true;
  int first_equal_i = -1, first_equal_j = -1;  // witnesses when not distinct
  int rank = 0;             // numerical rank of the coefficient matrix
  bool independent = true;  // rank == number of series
};

/// Compares the series pairwise with exact arithmetic over n <= columns and
/// computes the numerical rank of the real coefficient matrix.
BasisReport basis_independence_report(const std::vector<ThetaSeries>& basis, i64 columns);

}  // namespace theta1

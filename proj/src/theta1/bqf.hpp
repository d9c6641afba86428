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
// Integral binary quadratic forms of negative prime discriminant and the
// ideal class group they represent.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "theta1/arith.hpp"

namespace theta1 {

/// The positive definite integral binary quadratic form a*x^2 + b*x*y + c*y^2.
struct QuadraticForm {
  i64 a = 1, b = 1, c = 1;

  i64 discriminant() const { return b * b - 4 * a * c; }
  bool operator==(const QuadraticForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const QuadraticForm& o) const { return !(*this == o); }
  /// Orders forms by (a, b, c); for fixed discriminant, (a, b) determines c.
  bool operator<(const QuadraticForm& o) const;
  std::string str() const;
};

/// True when the form satisfies the classical reduction conditions
/// -a < b <= a <= c, with b >= 0 when a = c.
bool is_reduced(const QuadraticForm& f);

/// The unique reduced form equivalent to f.  Requires a > 0 and negative
/// discriminant; throws domain_error otherwise.
QuadraticForm reduce(QuadraticForm f);

/// Gauss composition of two primitive forms of equal negative discriminant
/// (Cohen, "A Course in Computational Algebraic Number Theory", Algorithm
/// 5.4.7), returned reduced.  Throws domain_error when the discriminants
/// differ or a form is imprimitive.
QuadraticForm compose(QuadraticForm f, QuadraticForm g);

/// The reduced inverse (conjugate) form (a, -b, c) of a reduced form.
QuadraticForm form_inverse(const QuadraticForm& f);

/// Checks that q is a prime with q = 3 (mod 4); throws domain_error
/// otherwise.  These q are exactly the levels with fundamental discriminant
/// -q, and their class numbers are odd.
void require_valid_level(i64 q);

/// The class number h(-q): the count of reduced forms of discriminant -q.
/// Enumerates forms without building the group structure.
i64 class_number(i64 q);

/// The ideal class group of the imaginary quadratic order of discriminant
/// -q, realized on reduced binary quadratic forms.  Enumeration finds all
/// reduced forms; the group structure (elementary divisors d_1 | d_2 | ...
/// and a discrete logarithm for every class) is computed by incremental
/// subgroup closure followed by a Smith normal form of the relation matrix.
class ClassGroup {
 public:
  /// Enumerates the class group of discriminant -q.  Throws domain_error
  /// unless q is a prime with q = 3 (mod 4).
  static std::shared_ptr<const ClassGroup> create(i64 q);

  i64 q() const { return q_; }
  i64 discriminant() const { return -q_; }
  i64 h() const { return static_cast<i64>(forms_.size()); }

  /// All reduced forms of discriminant -q in increasing (a, b) order.  The
  /// principal form (1, 1, (1+q)/4) is always first.
  const std::vector<QuadraticForm>& forms() const { return forms_; }
  const QuadraticForm& form(int index) const;
  int principal_index() const { return 0; }

  /// Index of a reduced form, or -1 when it is not a form of this group.
  int index_of(const QuadraticForm& f) const;

  /// Index of the class inverse (the conjugate class).
  int inverse_index(int index) const;

  /// Group operation and powers in index space.
  int compose_indices(int i, int j) const;
  int power_index(int base, i64 exponent) const;

  /// Elementary divisors d_1 | d_2 | ... | d_r, all > 1 (empty when h = 1).
  const std::vector<i64>& divisors() const { return divisors_; }

  /// Exponent of the group: lcm of the divisors (1 when h = 1).
  i64 exponent() const { return exponent_; }

  /// Indices of generator classes g_1 .. g_r, where g_i has order d_i and
  /// every class is uniquely g_1^{e_1} * ... * g_r^{e_r} with 0 <= e_i < d_i.
  const std::vector<int>& generator_indices() const { return generators_; }

  /// The exponent vector (e_1, ..., e_r) of a class on the generators.
  const std::vector<i64>& dlog(int index) const;

 private:
  explicit ClassGroup(i64 q);
  void enumerate_forms();
  void build_structure();

  i64 q_ = 0;
  std::vector<QuadraticForm> forms_;
  std::vector<int> inverse_;
  std::vector<i64> divisors_;
  i64 exponent_ = 1;
  std::vector<int> generators_;
  std::vector<std::vector<i64>> dlog_;
};

// ---------------------------------------------------------------------------
// Prime ideals
// ---------------------------------------------------------------------------

/// Behaviour of a rational prime p in the quadratic field of discriminant -q.
enum class Splitting {
  kSplit,     // (p) = P * conj(P), P != conj(P); kronecker(-q, p) = +1
  kInert,     // (p) stays prime; kronecker(-q, p) = -1
  kRamified,  // (p) = P^2; p = q
};

/// The ideal class of a prime above p: type, the class index of P, and the
/// index of the conjugate class (equal indices for ramified p; -1 for inert).
struct PrimeClass {
  Splitting type = Splitting::kInert;
  int index = -1;
  int conj_index = -1;
};

/// Splitting data for the prime p in the class group G.  For split p the
/// class is that of the form (p, b, (b^2+q)/(4p)) with b odd, b^2 = -q mod 4p.
/// Throws domain_error when p is not prime.
PrimeClass prime_ideal_class(i64 p, const ClassGroup& G);

/// prime_ideal_class for every prime p <= bound, indexed in step with
/// primes_up_to(bound).
class SplitTable {
 public:
  SplitTable(std::shared_ptr<const ClassGroup> group, i64 bound);

  const ClassGroup& group() const { return *group_; }
  i64 bound() const { return bound_; }
  const std::vector<i64>& primes() const { return primes_; }
  const PrimeClass& entry(size_t prime_index) const { return entries_[prime_index]; }

 private:
  std::shared_ptr<const ClassGroup> group_;
  i64 bound_ = 0;
  std::vector<i64> primes_;
  std::vector<PrimeClass> entries_;
};

}  // namespace theta1

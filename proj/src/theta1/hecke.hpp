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
// Symbolic Hecke-eigenvalue algebra for weight-one forms.  At a good prime
// the local eigenvalue data is a pair of roots of unity (alpha, beta): the
// eigenvalue is a_p = alpha + beta, the determinant (nebentypus value) is
// chi = alpha * beta, and a_{p^k} = sum_{i+j=k} alpha^i beta^j.  Polynomials
// in a_p therefore rewrite to finite linear combinations of the a_{p^k} with
// coefficients in Z[zeta][chi, chi^{-1}].

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta1/cyclotomic.hpp"

namespace theta1 {

/// Local eigenvalue data at a good prime: two roots of unity.
struct UnitEigenPair {
  RootOfUnity alpha;
  RootOfUnity beta;

  /// The nebentypus value chi = alpha * beta.
  RootOfUnity det() const { return alpha * beta; }
  /// The ratio alpha / beta, whose order controls vanishing of traces.
  RootOfUnity ratio() const { return alpha * beta.conj(); }
};

/// t_k = sum_{i+j=k} alpha^i beta^j (so t_0 = 1, t_1 = alpha + beta), as an
/// exact cyclotomic integer.  ring_modulus 0 picks the smallest common ring;
/// otherwise both orders must divide ring_modulus.
Cyclo trace_power(const UnitEigenPair& pair, i64 k, i64 ring_modulus = 0);

/// A Laurent polynomial in the formal unimodular symbol chi with cyclotomic
/// integer coefficients.  Zero coefficients are dropped, so the term map is
/// canonical.
class ChiPolynomial {
 public:
  explicit ChiPolynomial(i64 modulus = 1) : modulus_(modulus) {}
  static ChiPolynomial constant(const Cyclo& c);
  /// coeff * chi^power.
  static ChiPolynomial chi_power(i64 power, const Cyclo& coeff);

  i64 modulus() const { return modulus_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exponent -> coefficient, sparse and free of zero entries.
  const std::map<i64, Cyclo>& terms() const { return terms_; }

  ChiPolynomial& add_term(i64 power, const Cyclo& c);
  ChiPolynomial& operator+=(const ChiPolynomial& o);
  ChiPolynomial times(const Cyclo& c) const;
  ChiPolynomial times_chi(i64 shift) const;

  /// Substitutes a concrete root of unity for chi.
  Cyclo eval(const RootOfUnity& chi) const;

  /// Largest possible absolute value over unimodular chi: the sum of the
  /// coefficient magnitudes.
  long double sup_bound() const;

  bool operator==(const ChiPolynomial& o) const;
  std::string str() const;

 private:
  i64 modulus_ = 1;              // cyclotomic ring of the coefficients
  std::map<i64, Cyclo> terms_;   // chi exponent -> coefficient
};

/// A polynomial sum_j c_j(chi) * X^j in the Hecke eigenvalue X = a_p, with
/// ChiPolynomial coefficients.
class HeckePowerExpression {
 public:
  /// coeffs[j] multiplies X^j.  Degree is capped at 64.
  explicit HeckePowerExpression(std::vector<ChiPolynomial> coeffs);

  /// Plain polynomial with cyclotomic coefficients (no chi dependence).
  static HeckePowerExpression from_x_polynomial(const std::vector<Cyclo>& coeffs);

  i64 degree() const { return static_cast<i64>(coeffs_.size()) - 1; }
  const ChiPolynomial& coeff(i64 j) const { return coeffs_[static_cast<size_t>(j)]; }

  /// Substitutes X = t_1(pair) and chi = det(pair).
  Cyclo eval(const UnitEigenPair& pair) const;

 private:
  std::vector<ChiPolynomial> coeffs_;
};

/// A finite linear combination sum_{k in support} mu_k(chi) a_{p^k} + c(chi),
/// produced by rewriting a polynomial in a_p.
struct HeckeLinearRelation {
  std::vector<std::pair<i64, ChiPolynomial>> terms;  // (k, mu_k), k >= 1, ascending
  ChiPolynomial constant_term;                       // the a_{p^0} slot
  std::optional<i64> guaranteed_value;               // B, when built from a trace set

  i64 support_size() const { return static_cast<i64>(terms.size()); }

  /// Substitutes a_{p^k} = trace_power(pair, k) and chi = det(pair).
  Cyclo evaluate(const UnitEigenPair& pair) const;

  std::string str() const;
};

/// Rewrites a polynomial in a_p as a linear combination of the a_{p^k},
/// using a_p * a_{p^k} = a_{p^{k+1}} + chi * a_{p^{k-1}} (k >= 1) and
/// a_p * 1 = a_p.  Exact; valid identically in alpha, beta.
HeckeLinearRelation rewrite_to_linear(const HeckePowerExpression& expression);

/// Linearizes P(X) = prod_{s in traces}(X - s) + shift.  On any eigenvalue
/// pair whose trace lies in `traces` the product vanishes, so the relation
/// evaluates to the integer B = shift; the invariant |B| >= 1 forces
/// shift != 0 (the minimal valid shift is 1), and domain_error reports that
/// otherwise.
HeckeLinearRelation build_relation(const std::vector<Cyclo>& traces, i64 shift);

/// The sawtooth sums D_r(zeta) = sum_{i=-r}^{r} zeta^i satisfy, for zeta of
/// small order, the combination D_6 - D_4 - D_1 = 1 (an identity tied to the
/// exceptional finite subgroups of PGL_2).  Evaluates it exactly for zeta a
/// primitive root of the given order.
struct IcosahedralCheck {
  i64 ratio_order = 1;
  bool holds = false;
  Cyclo value;  // exact value of D_6 - D_4 - D_1 in Z[zeta]
};
IcosahedralCheck verify_icosahedral_identity(i64 ratio_order);

}  // namespace theta1

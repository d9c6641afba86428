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

#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "theta1/arith.hpp"

namespace theta1 {

// ---------------------------------------------------------------------------
// Roots of unity
// ---------------------------------------------------------------------------

/// The root of unity e(k/d) = exp(2*pi*i*k/d), stored as the fraction k/d
/// reduced to lowest terms with 0 <= k < d.  After reduction d is exactly the
/// multiplicative order.
struct RootOfUnity {
  i64 k = 0;
  i64 d = 1;

  RootOfUnity() = default;
  RootOfUnity(i64 num, i64 den);

  i64 order() const { return d; }
  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity conj() const { return RootOfUnity(-k, d); }
  RootOfUnity pow(i64 e) const;
  bool operator==(const RootOfUnity& o) const { return k == o.k && d == o.d; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

  std::complex<long double> value() const;
  std::string str() const { return "e(" + std::to_string(k) + "/" + std::to_string(d) + ")"; }
};

// ---------------------------------------------------------------------------
// Cyclotomic integers
// ---------------------------------------------------------------------------

/// Shared per-modulus data for arithmetic in Z[zeta_d]: the d-th cyclotomic
/// polynomial and reduction tables for the monomials zeta^0 .. zeta^{d-1}.
/// Contexts are cached process-wide; obtain them via CycloContext::get.
class CycloContext {
 public:
  static std::shared_ptr<const CycloContext> get(i64 d);

  i64 modulus() const { return d_; }
  i64 degree() const { return phi_; }

  /// Coefficients of the d-th cyclotomic polynomial, constant term first
  /// (size degree() + 1, monic).
  const std::vector<i64>& polynomial() const { return poly_; }

  /// acc += c * zeta^e on the power basis, for 0 <= e < d and acc of size
  /// degree().  Monomials below the degree are basis vectors; higher ones use
  /// the precomputed reduction rows.
  void accumulate(i64* acc, i64 e, i64 c) const;
  void accumulate(std::vector<i64>& acc, i64 e, i64 c) const { accumulate(acc.data(), e, c); }

  /// cos/sin of 2*pi*j/d for 0 <= j < d, for numerical embeddings.
  long double cos_table(i64 j) const { return cos_[static_cast<size_t>(j)]; }
  long double sin_table(i64 j) const { return sin_[static_cast<size_t>(j)]; }

 private:
  explicit CycloContext(i64 d);

  i64 d_ = 1;
  i64 phi_ = 1;
  std::vector<i64> poly_;
  std::vector<std::vector<i64>> reduced_;  // coordinates of zeta^e for e in [degree, d)
  std::vector<long double> cos_, sin_;
};

/// An element of the ring of integers Z[zeta_d] of the d-th cyclotomic field,
/// held in reduced form on the power basis 1, zeta, ..., zeta^{phi(d)-1}.
/// The representation is canonical, so equality is coordinate comparison.
///
/// Binary operations lift both operands to the lcm of their moduli when these
/// differ, so values from different cyclotomic fields can be combined freely.
class Cyclo {
 public:
  Cyclo() : Cyclo(integer(1, 0)) {}

  static Cyclo zero(i64 d) { return integer(d, 0); }
  static Cyclo one(i64 d) { return integer(d, 1); }
  static Cyclo integer(i64 d, i64 value);

  /// zeta_d^e as an element of Z[zeta_d].
  static Cyclo root_power(i64 d, i64 e);

  /// The root of unity r as an element of Z[zeta_d]; r.order() must divide d.
  static Cyclo from_root(const RootOfUnity& r, i64 d);

  /// Wraps already-reduced power-basis coordinates (size phi(d)).
  static Cyclo from_coords(i64 d, std::vector<i64> coords);

  i64 modulus() const { return ctx_->modulus(); }
  const std::vector<i64>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integer() const;           // lies in Z
  i64 integer_value() const;         // requires is_integer()

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
  Cyclo& operator+=(const Cyclo& y) { return *this = *this + y; }
  Cyclo& operator-=(const Cyclo& y) { return *this = *this - y; }
  Cyclo& operator*=(const Cyclo& y) { return *this = *this * y; }
  Cyclo operator*(i64 scalar) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  /// Complex conjugation, i.e. the Galois automorphism zeta -> zeta^{-1}.
  Cyclo conj() const;

  /// The Galois conjugate under zeta -> zeta^a; requires gcd(a, modulus) = 1.
  Cyclo galois(i64 a) const;

  /// Re-expresses the element in Z[zeta_m]; the current modulus must divide m.
  Cyclo lift(i64 m) const;

  /// Numerical value under the embedding zeta_d -> e(1/d).
  std::complex<long double> embed() const;
  long double embed_real() const { return embed().real(); }

  /// Human-readable form, e.g. "-1 + 2*z^3 (mod Phi_12)".
  std::string str() const;

 private:
  explicit Cyclo(std::shared_ptr<const CycloContext> ctx)
      : ctx_(std::move(ctx)), coords_(static_cast<size_t>(ctx_->degree()), 0) {}

  /// Adds c * zeta^e (0 <= e < d) into the coordinates.
  void add_monomial(i64 e, i64 c);

  std::shared_ptr<const CycloContext> ctx_;
  std::vector<i64> coords_;
};

}  // namespace theta1

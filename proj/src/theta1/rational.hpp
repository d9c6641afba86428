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

#include <numeric>
#include <string>

#include "theta1/arith.hpp"
#include "theta1/errors.hpp"

namespace theta1 {

/// Exact rational number with 64-bit numerator and denominator, always kept
/// in lowest terms with a positive denominator.  Overflow in intermediate
/// products is detected via 128-bit arithmetic.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}  // NOLINT: implicit integer conversion is intended
  Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational from_i128(i128 n, i128 d) {
    if (d == 0) throw domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 0) {
      n /= a;
      d /= a;
    }
    constexpr i128 kMax = 0x7fffffffffffffffLL;
    if (n > kMax || n < -kMax || d > kMax) {
      throw resource_error("Rational: value does not fit in 64-bit lowest terms");
    }
    return Rational(static_cast<i64>(n), static_cast<i64>(d));
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return from_i128(static_cast<i128>(x.num) * y.den + static_cast<i128>(y.num) * x.den,
                     static_cast<i128>(x.den) * y.den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return from_i128(static_cast<i128>(x.num) * y.den - static_cast<i128>(y.num) * x.den,
                     static_cast<i128>(x.den) * y.den);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return from_i128(static_cast<i128>(x.num) * y.num, static_cast<i128>(x.den) * y.den);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num == 0) throw domain_error("Rational: division by zero");
    return from_i128(static_cast<i128>(x.num) * y.den, static_cast<i128>(x.den) * y.num);
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<i128>(x.num) * y.den < static_cast<i128>(y.num) * x.den;
  }

  long double value() const { return static_cast<long double>(num) / den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace theta1

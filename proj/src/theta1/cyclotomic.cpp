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

#include "theta1/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "theta1/errors.hpp"

namespace theta1 {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// Largest cyclotomic modulus the context cache accepts.  The reduction
// tables take O((d - phi(d)) * phi(d)) words; this cap keeps them small.
constexpr i64 kMaxModulus = 4000;

// Exact division of integer polynomials, num / den with den monic.
// Coefficients are constant-term first.  The division must be exact.
std::vector<i64> poly_div_exact(const std::vector<i64>& num, const std::vector<i64>& den) {
  const auto deg_n = static_cast<i64>(num.size()) - 1;
  const auto deg_d = static_cast<i64>(den.size()) - 1;
  check_internal(deg_n >= deg_d && den.back() == 1, "poly_div_exact: bad operands");
  std::vector<i64> rem = num;
  std::vector<i64> quot(static_cast<size_t>(deg_n - deg_d) + 1, 0);
  for (i64 i = deg_n - deg_d; i >= 0; --i) {
    const i64 c = rem[static_cast<size_t>(i + deg_d)];
    quot[static_cast<size_t>(i)] = c;
    if (c == 0) continue;
    for (i64 j = 0; j <= deg_d; ++j) rem[static_cast<size_t>(i + j)] -= c * den[static_cast<size_t>(j)];
  }
  for (i64 coeff : rem) check_internal(coeff == 0, "poly_div_exact: division not exact");
  return quot;
}

// The d-th cyclotomic polynomial Phi_d, computed by dividing x^d - 1 by the
// cyclotomic polynomials of all proper divisors of d.
std::vector<i64> cyclotomic_polynomial(i64 d) {
  if (d == 1) return {-1, 1};
  std::vector<i64> poly(static_cast<size_t>(d) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(d)] = 1;  // x^d - 1
  for (i64 e = 1; e < d; ++e) {
    if (d % e == 0) poly = poly_div_exact(poly, cyclotomic_polynomial(e));
  }
  return poly;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootOfUnity
// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(i64 num, i64 den) {
  if (den < 1) throw domain_error("RootOfUnity: order must be positive");
  k = mod_floor(num, den);
  const i64 g = std::gcd(k, den);
  k /= g;
  d = den / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const i64 l = std::lcm(d, o.d);
  return RootOfUnity(k * (l / d) + o.k * (l / o.d), l);
}

RootOfUnity RootOfUnity::pow(i64 e) const {
  // Reduce the exponent first so k * e cannot overflow.
  return RootOfUnity(mod_floor(e, d) * k, d);
}

std::complex<long double> RootOfUnity::value() const {
  const long double t = kTwoPi * static_cast<long double>(k) / static_cast<long double>(d);
  return {std::cos(t), std::sin(t)};
}

// ---------------------------------------------------------------------------
// CycloContext
// ---------------------------------------------------------------------------

CycloContext::CycloContext(i64 d) : d_(d) {
  poly_ = cyclotomic_polynomial(d);
  phi_ = static_cast<i64>(poly_.size()) - 1;

  // Rows for zeta^e, e in [phi, d): start from the basis monomial
  // zeta^{phi-1} and repeatedly multiply by zeta, reducing by the monic
  // polynomial (zeta^phi = -sum_j poly[j] zeta^j).
  std::vector<i64> row(static_cast<size_t>(phi_), 0);
  row[static_cast<size_t>(phi_ - 1)] = 1;
  reduced_.reserve(static_cast<size_t>(d - phi_));
  for (i64 e = phi_; e < d; ++e) {
    std::vector<i64> next(static_cast<size_t>(phi_), 0);
    const i64 lead = row[static_cast<size_t>(phi_ - 1)];
    next[0] = -lead * poly_[0];
    for (i64 j = 1; j < phi_; ++j) {
      next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] - lead * poly_[static_cast<size_t>(j)];
    }
    reduced_.push_back(next);
    row = std::move(next);
  }

  cos_.resize(static_cast<size_t>(d));
  sin_.resize(static_cast<size_t>(d));
  for (i64 j = 0; j < d; ++j) {
    const long double t = kTwoPi * static_cast<long double>(j) / static_cast<long double>(d);
    cos_[static_cast<size_t>(j)] = std::cos(t);
    sin_[static_cast<size_t>(j)] = std::sin(t);
  }
}

void CycloContext::accumulate(i64* acc, i64 e, i64 c) const {
  if (c == 0) return;
  if (e < phi_) {
    acc[e] += c;
    return;
  }
  const std::vector<i64>& row = reduced_[static_cast<size_t>(e - phi_)];
  for (i64 j = 0; j < phi_; ++j) acc[j] += c * row[static_cast<size_t>(j)];
}

std::shared_ptr<const CycloContext> CycloContext::get(i64 d) {
  if (d < 1) throw domain_error("CycloContext: modulus must be positive");
  if (d > kMaxModulus) {
    throw resource_error("CycloContext: modulus " + std::to_string(d) + " exceeds the supported bound " +
                         std::to_string(kMaxModulus));
  }
  static std::mutex mutex;
  static std::map<i64, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(d));
  cache.emplace(d, ctx);
  return ctx;
}

// ---------------------------------------------------------------------------
// Cyclo
// ---------------------------------------------------------------------------

Cyclo Cyclo::integer(i64 d, i64 value) {
  Cyclo out(CycloContext::get(d));
  out.coords_[0] = value;
  return out;
}

Cyclo Cyclo::root_power(i64 d, i64 e) {
  Cyclo out(CycloContext::get(d));
  out.add_monomial(mod_floor(e, d), 1);
  return out;
}

Cyclo Cyclo::from_root(const RootOfUnity& r, i64 d) {
  if (d % r.order() != 0) {
    throw domain_error("Cyclo::from_root: the root's order must divide the ring modulus");
  }
  return root_power(d, r.k * (d / r.order()));
}

Cyclo Cyclo::from_coords(i64 d, std::vector<i64> coords) {
  Cyclo out(CycloContext::get(d));
  if (coords.size() != out.coords_.size()) {
    throw domain_error("Cyclo::from_coords: coordinate count must equal the degree");
  }
  out.coords_ = std::move(coords);
  return out;
}

void Cyclo::add_monomial(i64 e, i64 c) { ctx_->accumulate(coords_, e, c); }

bool Cyclo::is_zero() const {
  for (i64 c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_integer() const {
  for (size_t j = 1; j < coords_.size(); ++j) {
    if (coords_[j] != 0) return false;
  }
  return true;
}

i64 Cyclo::integer_value() const {
  if (!is_integer()) throw domain_error("Cyclo::integer_value: element is not rational");
  return coords_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (i64& c : out.coords_) c = -c;
  return out;
}

Cyclo Cyclo::operator*(i64 scalar) const {
  Cyclo out = *this;
  for (i64& c : out.coords_) c *= scalar;
  return out;
}

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
  if (x.modulus() != y.modulus()) {
    const i64 l = std::lcm(x.modulus(), y.modulus());
    return x.lift(l) + y.lift(l);
  }
  Cyclo out = x;
  for (size_t j = 0; j < out.coords_.size(); ++j) out.coords_[j] += y.coords_[j];
  return out;
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) {
  if (x.modulus() != y.modulus()) {
    const i64 l = std::lcm(x.modulus(), y.modulus());
    return x.lift(l) - y.lift(l);
  }
  Cyclo out = x;
  for (size_t j = 0; j < out.coords_.size(); ++j) out.coords_[j] -= y.coords_[j];
  return out;
}

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  if (x.modulus() != y.modulus()) {
    const i64 l = std::lcm(x.modulus(), y.modulus());
    return x.lift(l) * y.lift(l);
  }
  const i64 phi = x.ctx_->degree();
  const i64 d = x.modulus();
  // Schoolbook convolution; degrees stay below 2*phi - 1 < 2*d.
  std::vector<i64> conv(static_cast<size_t>(2 * phi - 1), 0);
  for (i64 i = 0; i < phi; ++i) {
    const i64 xi = x.coords_[static_cast<size_t>(i)];
    if (xi == 0) continue;
    for (i64 j = 0; j < phi; ++j) {
      conv[static_cast<size_t>(i + j)] += xi * y.coords_[static_cast<size_t>(j)];
    }
  }
  Cyclo out(x.ctx_);
  for (i64 e = 0; e < 2 * phi - 1; ++e) {
    out.add_monomial(e < d ? e : e - d, conv[static_cast<size_t>(e)]);
  }
  return out;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (modulus() != o.modulus()) {
    const i64 l = std::lcm(modulus(), o.modulus());
    return lift(l) == o.lift(l);
  }
  return coords_ == o.coords_;
}

Cyclo Cyclo::galois(i64 a) const {
  const i64 d = modulus();
  a = mod_floor(a, d);
  if (std::gcd(a, d) != 1) throw domain_error("Cyclo::galois: exponent must be invertible");
  Cyclo out(ctx_);
  for (i64 j = 0; j < ctx_->degree(); ++j) {
    out.add_monomial(mod_floor(a * j, d), coords_[static_cast<size_t>(j)]);
  }
  return out;
}

Cyclo Cyclo::conj() const { return galois(modulus() - 1); }

Cyclo Cyclo::lift(i64 m) const {
  const i64 d = modulus();
  if (m == d) return *this;
  if (m % d != 0) throw domain_error("Cyclo::lift: current modulus must divide the target");
  const i64 step = m / d;
  Cyclo out(CycloContext::get(m));
  for (i64 j = 0; j < ctx_->degree(); ++j) {
    out.add_monomial(mod_floor(step * j, m), coords_[static_cast<size_t>(j)]);
  }
  return out;
}

std::complex<long double> Cyclo::embed() const {
  long double re = 0, im = 0;
  for (i64 j = 0; j < ctx_->degree(); ++j) {
    const auto c = static_cast<long double>(coords_[static_cast<size_t>(j)]);
    re += c * ctx_->cos_table(j);
    im += c * ctx_->sin_table(j);
  }
  return {re, im};
}

std::string Cyclo::str() const {
  std::string out;
  bool first = true;
  for (i64 j = 0; j < ctx_->degree(); ++j) {
    const i64 c = coords_[static_cast<size_t>(j)];
    if (c == 0) continue;
    if (first) {
      out += c < 0 ? "-" : "";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const i64 abs_c = c < 0 ? -c : c;
    if (abs_c != 1 || j == 0) out += std::to_string(abs_c);
    if (j > 0) {
      if (abs_c != 1) out += "*";
      out += "z";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  if (first) out = "0";
  return out + " (mod Phi_" + std::to_string(modulus()) + ")";
}

}  // namespace theta1

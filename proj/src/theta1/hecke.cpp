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

#include "theta1/hecke.hpp"

#include <cmath>
#include <numeric>

#include "theta1/errors.hpp"

namespace theta1 {

namespace {
constexpr i64 kMaxDegree = 64;
}

Cyclo trace_power(const UnitEigenPair& pair, i64 k, i64 ring_modulus) {
  if (k < 0) throw domain_error("trace_power: exponent must be >= 0");
  i64 m = std::lcm(pair.alpha.order(), pair.beta.order());
  if (ring_modulus != 0) {
    if (ring_modulus % m != 0) {
      throw domain_error("trace_power: both orders must divide the requested ring modulus");
    }
    m = ring_modulus;
  }
  Cyclo acc = Cyclo::zero(m);
  for (i64 i = 0; i <= k; ++i) {
    acc += Cyclo::from_root(pair.alpha.pow(i) * pair.beta.pow(k - i), m);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// ChiPolynomial
// ---------------------------------------------------------------------------

ChiPolynomial ChiPolynomial::constant(const Cyclo& c) {
  ChiPolynomial out(c.modulus());
  out.add_term(0, c);
  return out;
}

ChiPolynomial ChiPolynomial::chi_power(i64 power, const Cyclo& coeff) {
  ChiPolynomial out(coeff.modulus());
  out.add_term(power, coeff);
  return out;
}

ChiPolynomial& ChiPolynomial::add_term(i64 power, const Cyclo& c) {
  if (c.is_zero()) return *this;
  const i64 m = std::lcm(modulus_, c.modulus());
  if (m != modulus_) {
    // Lift every stored coefficient into the joint ring.
    std::map<i64, Cyclo> lifted;
    for (const auto& [k, v] : terms_) lifted.emplace(k, v.lift(m));
    terms_ = std::move(lifted);
    modulus_ = m;
  }
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    terms_.emplace(power, c.lift(m));
    return *this;
  }
  it->second += c.lift(m);
  if (it->second.is_zero()) terms_.erase(it);
  return *this;
}

ChiPolynomial& ChiPolynomial::operator+=(const ChiPolynomial& o) {
  for (const auto& [k, v] : o.terms_) add_term(k, v);
  return *this;
}

ChiPolynomial ChiPolynomial::times(const Cyclo& c) const {
  ChiPolynomial out(modulus_);
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

ChiPolynomial ChiPolynomial::times_chi(i64 shift) const {
  ChiPolynomial out(modulus_);
  for (const auto& [k, v] : terms_) out.add_term(k + shift, v);
  return out;
}

Cyclo ChiPolynomial::eval(const RootOfUnity& chi) const {
  const i64 m = std::lcm(modulus_, chi.order());
  Cyclo acc = Cyclo::zero(m);
  for (const auto& [k, v] : terms_) {
    acc += v.lift(m) * Cyclo::from_root(chi.pow(k), m);
  }
  return acc;
}

long double ChiPolynomial::sup_bound() const {
  long double s = 0;
  for (const auto& [k, v] : terms_) s += std::abs(v.embed());
  return s;
}

bool ChiPolynomial::operator==(const ChiPolynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto it = terms_.begin(), jt = o.terms_.begin(); it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::string ChiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")";
    if (k != 0) out += "*chi^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// HeckePowerExpression
// ---------------------------------------------------------------------------

HeckePowerExpression::HeckePowerExpression(std::vector<ChiPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw domain_error("HeckePowerExpression: need at least the constant coefficient");
  if (degree() > kMaxDegree) {
    throw domain_error("HeckePowerExpression: degree exceeds the supported bound 64");
  }
}

HeckePowerExpression HeckePowerExpression::from_x_polynomial(const std::vector<Cyclo>& coeffs) {
  std::vector<ChiPolynomial> cp;
  cp.reserve(coeffs.size());
  for (const Cyclo& c : coeffs) cp.push_back(ChiPolynomial::constant(c));
  return HeckePowerExpression(std::move(cp));
}

Cyclo HeckePowerExpression::eval(const UnitEigenPair& pair) const {
  const RootOfUnity chi = pair.det();
  const Cyclo x = trace_power(pair, 1);
  Cyclo acc = coeffs_[0].eval(chi);
  Cyclo xp = x;
  for (size_t j = 1; j < coeffs_.size(); ++j) {
    acc += coeffs_[j].eval(chi) * xp;
    xp = xp * x;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Rewriting
// ---------------------------------------------------------------------------

Cyclo HeckeLinearRelation::evaluate(const UnitEigenPair& pair) const {
  const RootOfUnity chi = pair.det();
  Cyclo acc = constant_term.eval(chi);
  for (const auto& [k, mu] : terms) {
    acc += mu.eval(chi) * trace_power(pair, k);
  }
  return acc;
}

std::string HeckeLinearRelation::str() const {
  std::string out;
  for (const auto& [k, mu] : terms) {
    if (!out.empty()) out += " + ";
    out += "[" + mu.str() + "] * a(p^" + std::to_string(k) + ")";
  }
  if (!constant_term.is_zero() || out.empty()) {
    if (!out.empty()) out += " + ";
    out += "[" + constant_term.str() + "]";
  }
  return out;
}

HeckeLinearRelation rewrite_to_linear(const HeckePowerExpression& expression) {
  const i64 deg = expression.degree();
  // lin[j][k]: the chi-coefficient of a_{p^k} in the expansion of X^j.
  // X^{j+1} = X * X^j expands with X * a_{p^k} = a_{p^{k+1}} + chi a_{p^{k-1}}
  // (k >= 1) and X * a_{p^0} = a_{p^1}.
  std::vector<std::vector<ChiPolynomial>> lin(static_cast<size_t>(deg) + 1);
  lin[0] = {ChiPolynomial::constant(Cyclo::one(1))};
  for (i64 j = 1; j <= deg; ++j) {
    const auto& prev = lin[static_cast<size_t>(j - 1)];
    std::vector<ChiPolynomial> next(static_cast<size_t>(j) + 1, ChiPolynomial(1));
    for (i64 k = 0; k < static_cast<i64>(prev.size()); ++k) {
      const ChiPolynomial& mu = prev[static_cast<size_t>(k)];
      if (mu.is_zero()) continue;
      next[static_cast<size_t>(k + 1)] += mu;
      if (k >= 1) next[static_cast<size_t>(k - 1)] += mu.times_chi(1);
    }
    lin[static_cast<size_t>(j)] = std::move(next);
  }

  std::vector<ChiPolynomial> out(static_cast<size_t>(deg) + 1, ChiPolynomial(1));
  for (i64 j = 0; j <= deg; ++j) {
    const ChiPolynomial& cj = expression.coeff(j);
    if (cj.is_zero()) continue;
    for (i64 k = 0; k < static_cast<i64>(lin[static_cast<size_t>(j)].size()); ++k) {
      const ChiPolynomial& mu = lin[static_cast<size_t>(j)][static_cast<size_t>(k)];
      for (const auto& [cpow, ccoef] : cj.terms()) {
        out[static_cast<size_t>(k)] += mu.times(ccoef).times_chi(cpow);
      }
    }
  }

  HeckeLinearRelation rel;
  rel.constant_term = out[0];
  for (i64 k = 1; k <= deg; ++k) {
    if (!out[static_cast<size_t>(k)].is_zero()) {
      rel.terms.emplace_back(k, out[static_cast<size_t>(k)]);
    }
  }
  return rel;
}

HeckeLinearRelation build_relation(const std::vector<Cyclo>& traces, i64 shift) {
  if (traces.empty()) throw domain_error("build_relation: need at least one trace value");
  if (static_cast<i64>(traces.size()) > kMaxDegree) {
    throw domain_error("build_relation: more than 64 trace values");
  }
  if (shift == 0) {
    throw domain_error(
        "build_relation: shift 0 gives guaranteed value 0, violating |B| >= 1; "
        "the minimal valid shift is 1");
  }
  i64 m = 1;
  for (const Cyclo& s : traces) m = std::lcm(m, s.modulus());

  // P(X) = prod (X - s) + shift, coefficients in Z[zeta_m].
  std::vector<Cyclo> poly{Cyclo::one(m)};
  for (const Cyclo& s : traces) {
    const Cyclo sl = s.lift(m);
    std::vector<Cyclo> next(poly.size() + 1, Cyclo::zero(m));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * sl;
    }
    poly = std::move(next);
  }
  poly[0] += Cyclo::integer(m, shift);

  HeckeLinearRelation rel = rewrite_to_linear(HeckePowerExpression::from_x_polynomial(poly));
  rel.guaranteed_value = shift;
  return rel;
}

IcosahedralCheck verify_icosahedral_identity(i64 ratio_order) {
  if (ratio_order < 1) throw domain_error("verify_icosahedral_identity: order must be >= 1");
  IcosahedralCheck out;
  out.ratio_order = ratio_order;
  auto sawtooth = [ratio_order](i64 r) {
    Cyclo acc = Cyclo::zero(ratio_order);
    for (i64 i = -r; i <= r; ++i) {
      acc += Cyclo::root_power(ratio_order, mod_floor(i, ratio_order));
    }
    return acc;
  };
  out.value = sawtooth(6) - sawtooth(4) - sawtooth(1);
  out.holds = out.value == Cyclo::one(ratio_order);
  return out;
}

}  // namespace theta1

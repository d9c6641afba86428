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

#include "theta1/characters.hpp"

#include <numeric>

#include "theta1/errors.hpp"

namespace theta1 {

ClassCharacter::ClassCharacter(std::shared_ptr<const ClassGroup> group, std::vector<i64> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
  const std::vector<i64>& d = group_->divisors();
  if (exps_.size() != d.size()) {
    throw domain_error("ClassCharacter: exponent count must match the divisor count");
  }
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0 || exps_[i] >= d[i]) {
      throw domain_error("ClassCharacter: exponent out of range");
    }
  }

  order_ = 1;
  for (size_t i = 0; i < exps_.size(); ++i) {
    order_ = std::lcm(order_, d[i] / std::gcd(d[i], exps_[i]));
  }

  // Tabulate the value on every class as a numerator over the group exponent,
  // then rescale to the character order.
  const i64 lambda = group_->exponent();
  val_.resize(static_cast<size_t>(group_->h()));
  for (int c = 0; c < group_->h(); ++c) {
    const std::vector<i64>& e = group_->dlog(c);
    i64 num = 0;
    for (size_t i = 0; i < exps_.size(); ++i) {
      num = mod_floor(num + exps_[i] * (lambda / d[i]) % lambda * e[i], lambda);
    }
    check_internal(num * order_ % lambda == 0, "ClassCharacter: value outside the stated order");
    val_[static_cast<size_t>(c)] = num * order_ / lambda;
  }
}

ClassCharacter ClassCharacter::conjugate() const {
  const std::vector<i64>& d = group_->divisors();
  std::vector<i64> conj(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) conj[i] = exps_[i] == 0 ? 0 : d[i] - exps_[i];
  return ClassCharacter(group_, conj);
}

RootOfUnity ClassCharacter::value(int form_index) const {
  group_->form(form_index);  // range check
  return RootOfUnity(val_[static_cast<size_t>(form_index)], order_);
}

Cyclo ClassCharacter::value_cyclo(int form_index, i64 ring_modulus) const {
  return Cyclo::from_root(value(form_index), ring_modulus);
}

std::vector<ClassCharacter> all_characters(std::shared_ptr<const ClassGroup> group) {
  const std::vector<i64>& d = group->divisors();
  std::vector<ClassCharacter> out;
  out.reserve(static_cast<size_t>(group->h()));
  std::vector<i64> x(d.size(), 0);
  while (true) {
    out.emplace_back(group, x);
    // Advance the exponent vector in lexicographic order (last slot fastest).
    size_t i = d.size();
    while (i > 0) {
      --i;
      if (++x[i] < d[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (d.empty()) return out;
  }
}

std::vector<std::pair<int, int>> conjugate_pairs(const std::vector<ClassCharacter>& chars) {
  if (chars.empty()) throw domain_error("conjugate_pairs: empty character list");
  const ClassGroup& G = chars[0].group();
  const std::vector<i64>& d = G.divisors();

  // In the lexicographic list the index of a character is the mixed-radix
  // value of its exponent vector.
  auto index_of = [&d](const std::vector<i64>& x) {
    i64 idx = 0;
    for (size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + x[i];
    return static_cast<int>(idx);
  };

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(chars.size()); ++i) {
    if (chars[static_cast<size_t>(i)].is_real()) continue;
    const int j = index_of(chars[static_cast<size_t>(i)].conjugate().exponents());
    check_internal(j >= 0 && j < static_cast<int>(chars.size()) && j != i,
                   "conjugate_pairs: conjugate index out of range");
    if (i < j) pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace theta1

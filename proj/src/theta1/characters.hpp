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

#include <memory>
#include <utility>
#include <vector>

#include "theta1/bqf.hpp"
#include "theta1/cyclotomic.hpp"

namespace theta1 {

/// A character of the ideal class group, determined by its exponents
/// (x_1, ..., x_r) on the cyclic generators of orders d_1 | ... | d_r:
/// psi(g_1^{e_1} ... g_r^{e_r}) = e(sum_i x_i e_i / d_i).
class ClassCharacter {
 public:
  ClassCharacter(std::shared_ptr<const ClassGroup> group, std::vector<i64> exponents);

  const ClassGroup& group() const { return *group_; }
  const std::shared_ptr<const ClassGroup>& group_ptr() const { return group_; }
  const std::vector<i64>& exponents() const { return exps_; }

  /// Multiplicative order of the character.  Because the class number of a
  /// prime discriminant is odd, the order is odd too.
  i64 order() const { return order_; }

  /// A character is real iff it equals its conjugate; with odd class number
  /// that happens only for the trivial character.
  bool is_real() const { return order_ <= 2; }
  bool is_trivial() const { return order_ == 1; }

  ClassCharacter conjugate() const;

  /// psi evaluated on the class with the given form index.
  RootOfUnity value(int form_index) const;

  /// Numerator of the value as a fraction over order(): value(i) = e(k/order).
  i64 value_numerator(int form_index) const { return val_[static_cast<size_t>(form_index)]; }

  /// The value as an element of Z[zeta_m]; order() must divide m.
  Cyclo value_cyclo(int form_index, i64 ring_modulus) const;

  bool operator==(const ClassCharacter& o) const {
    return group_->q() == o.group_->q() && exps_ == o.exps_;
  }

 private:
  std::shared_ptr<const ClassGroup> group_;
  std::vector<i64> exps_;
  i64 order_ = 1;
  std::vector<i64> val_;  // per form index: numerator over denominator order_
};

/// All h characters of the class group in lexicographic order of their
/// exponent vectors; the trivial character comes first.
std::vector<ClassCharacter> all_characters(std::shared_ptr<const ClassGroup> group);

/// Indices (i, j), i < j, pairing every non-real character in `chars` (the
/// output of all_characters) with its conjugate.  There are (h-1)/2 pairs;
/// the smaller index is the pair's representative.
std::vector<std::pair<int, int>> conjugate_pairs(const std::vector<ClassCharacter>& chars);

}  // namespace theta1

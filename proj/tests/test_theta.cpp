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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "theta1/errors.hpp"
#include "theta1/theta.hpp"

using namespace theta1;

namespace {

ClassCharacter nonreal_character(const std::shared_ptr<const ClassGroup>& G, int which = 0) {
  const auto chars = all_characters(G);
  const auto pairs = conjugate_pairs(chars);
  return chars[static_cast<size_t>(pairs[static_cast<size_t>(which)].first)];
}

}  // namespace

TEST_CASE("the series at the smallest level matches its eta-product expansion") {
  // At q = 23 the unique dihedral series equals the eta product
  // eta(z) * eta(23 z) = q-series prod (1 - x^n)(1 - x^{23 n}) * x; expanding
  // with the pentagonal number theorem gives the integer coefficients below.
  const std::vector<i64> expected = {1,  -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1,
                                     0,  0,  -1, 0, 0, 0, 0, 0, 0, 1, -1, 1, 1};
  const auto G = ClassGroup::create(23);
  const ThetaSeries theta = theta_coefficients(nonreal_character(G), 26);
  CHECK(theta.limit() == 26);
  CHECK(theta.ring_modulus() == 3);
  for (i64 n = 1; n <= 26; ++n) {
    const Cyclo c = theta.coefficient(n);
    REQUIRE(c.is_integer());
    CHECK(c.integer_value() == expected[static_cast<size_t>(n - 1)]);
    CHECK(theta.coefficient_real(n) == doctest::Approx(static_cast<double>(c.integer_value())));
  }
}

TEST_CASE("coefficients match the direct ideal-count oracle") {
  for (i64 q : {i64{23}, i64{31}, i64{47}}) {
    const auto G = ClassGroup::create(q);
    const auto chars = all_characters(G);
    for (const auto& [i, j] : conjugate_pairs(chars)) {
      const ClassCharacter& psi = chars[static_cast<size_t>(i)];
      const ThetaSeries theta = theta_coefficients(psi, 500);
      for (i64 n = 1; n <= 500; ++n) {
        CHECK(theta.coefficient(n) == direct_coefficient_oracle(psi, n));
      }
      (void)j;
    }
  }
}

TEST_CASE("structural facts: leading term, ramified prime, inert squares") {
  for (i64 q : {i64{23}, i64{31}, i64{47}, i64{71}}) {
    const auto G = ClassGroup::create(q);
    const ThetaSeries theta = theta_coefficients(nonreal_character(G), std::max<i64>(q + 1, 200));
    CHECK(theta.coefficient(1) == Cyclo::one(theta.ring_modulus()));
    // The prime above q is ramified with principal class (odd group order),
    // so c_q = 1.
    CHECK(theta.coefficient(q) == Cyclo::one(theta.ring_modulus()));
    for (i64 p : primes_up_to(13)) {
      if (kronecker(-q, p) == -1) {
        // Inert p: no ideal of norm p, and the only one of norm p^2 is (p).
        CHECK(theta.coefficient(p).is_zero());
        CHECK(theta.coefficient(p * p) == Cyclo::one(theta.ring_modulus()));
      }
    }
  }
}

TEST_CASE("coefficients are real and unchanged under character conjugation") {
  const auto G = ClassGroup::create(47);
  const auto chars = all_characters(G);
  const auto pairs = conjugate_pairs(chars);
  for (const auto& [i, j] : pairs) {
    const ThetaSeries a = theta_coefficients(chars[static_cast<size_t>(i)], 300);
    const ThetaSeries b = theta_coefficients(chars[static_cast<size_t>(j)], 300);
    for (i64 n = 1; n <= 300; ++n) {
      CHECK(a.coefficient(n) == b.coefficient(n));          // conjugate character
      CHECK(a.coefficient(n).conj() == a.coefficient(n));   // self-conjugate value
      CHECK(std::abs(a.coefficient(n).embed().imag()) < 1e-15L);
    }
  }
}

TEST_CASE("hecke verification passes on clean series and counts its work") {
  const auto G = ClassGroup::create(31);
  const ThetaSeries theta = theta_coefficients(nonreal_character(G), 2000);
  const HeckeReport report = verify_hecke(theta);
  CHECK(report.ok);
  CHECK(report.power_identities_checked > 0);
  CHECK(report.products_checked > 0);
  CHECK(!report.first.has_value());
}

TEST_CASE("fault injection is caught and located by the hecke checks") {
  const auto G = ClassGroup::create(23);

  SUBCASE("a corrupted prime power breaks its recurrence") {
    ThetaSeries theta = theta_coefficients(nonreal_character(G), 100);
    theta.corrupt_coefficient(8, 3);
    const HeckeReport report = verify_hecke(theta);
    REQUIRE(!report.ok);
    REQUIRE(report.first.has_value());
    CHECK(report.first->kind == HeckeViolation::Kind::kPrimePower);
    CHECK(report.first->p == 2);
    CHECK(report.first->k == 2);  // the identity producing c_{2^3}
  }

  SUBCASE("a corrupted prime breaks the first identity above it") {
    ThetaSeries theta = theta_coefficients(nonreal_character(G), 100);
    theta.corrupt_coefficient(7, 5);
    const HeckeReport report = verify_hecke(theta);
    REQUIRE(!report.ok);
    REQUIRE(report.first.has_value());
    CHECK(report.first->kind == HeckeViolation::Kind::kPrimePower);
    CHECK(report.first->p == 7);
    CHECK(report.first->k == 1);
  }

  SUBCASE("a corrupted composite breaks exactly its coprime factorization") {
    ThetaSeries theta = theta_coefficients(nonreal_character(G), 100);
    theta.corrupt_coefficient(12, 1);
    const HeckeReport report = verify_hecke(theta);
    REQUIRE(!report.ok);
    REQUIRE(report.first.has_value());
    CHECK(report.first->kind == HeckeViolation::Kind::kProduct);
    CHECK(report.first->m * report.first->n == 12);
  }
}

TEST_CASE("size bounds hold with the expected extremal witnesses") {
  const auto G = ClassGroup::create(23);
  ThetaSeries theta = theta_coefficients(nonreal_character(G), 500);

  const RamanujanReport clean = ramanujan_check(theta);
  CHECK(clean.prime_bound_ok);
  CHECK(clean.divisor_bound_ok);
  CHECK(clean.primes_checked == 94);  // pi(500) = 95 minus the ramified prime
  CHECK(clean.values_checked == 500);
  // The first split prime with principal prime ideals is 59 = 36 + 23, where
  // c_p attains the extreme value 2.
  CHECK(clean.max_prime_abs == doctest::Approx(2.0));
  CHECK(clean.argmax_prime == 59);
  CHECK(clean.first_divisor_violation == 0);

  theta.corrupt_coefficient(2, 5);  // c_2: -1 -> 4
  const RamanujanReport dirty = ramanujan_check(theta);
  CHECK(!dirty.prime_bound_ok);
  CHECK(!dirty.divisor_bound_ok);
  CHECK(dirty.first_divisor_violation == 2);
  CHECK(dirty.max_prime_abs == doctest::Approx(4.0));
  CHECK(dirty.argmax_prime == 2);
}

TEST_CASE("the dihedral family has one series per conjugate pair, all independent") {
  for (i64 q : {i64{23}, i64{47}, i64{167}}) {
    const auto G = ClassGroup::create(q);
    const auto basis = dihedral_basis(G, 400);
    REQUIRE(static_cast<i64>(basis.size()) == (G->h() - 1) / 2);
    const BasisReport report = basis_independence_report(basis, 400);
    CHECK(report.columns == 400);
    CHECK(report.pairwise_distinct);
    CHECK(report.rank == static_cast<int>(basis.size()));
    CHECK(report.independent);
    CHECK(report.first_equal_i == -1);
  }
  // Class number one: no non-real characters, an empty family.
  CHECK(dihedral_basis(ClassGroup::create(163), 50).empty());
}

TEST_CASE("duplicated series are flagged as dependent") {
  const auto G = ClassGroup::create(167);
  const auto chars = all_characters(G);
  const auto pairs = conjugate_pairs(chars);
  std::vector<ThetaSeries> family;
  family.push_back(theta_coefficients(chars[static_cast<size_t>(pairs[0].first)], 200));
  family.push_back(theta_coefficients(chars[static_cast<size_t>(pairs[0].second)], 200));
  const BasisReport report = basis_independence_report(family, 200);
  CHECK(!report.pairwise_distinct);
  CHECK(report.first_equal_i == 0);
  CHECK(report.first_equal_j == 1);
  CHECK(report.rank == 1);
  CHECK(!report.independent);
}

TEST_CASE("construction rejects invalid characters and oversized requests") {
  const auto G = ClassGroup::create(23);
  const auto chars = all_characters(G);
  CHECK_THROWS_AS(theta_coefficients(chars[0], 100), domain_error);  // trivial: not cuspidal
  CHECK_THROWS_AS(direct_coefficient_oracle(chars[0], 5), domain_error);
  const ClassCharacter psi = nonreal_character(G);
  CHECK_THROWS_AS(theta_coefficients(psi, 0), domain_error);
  CHECK_THROWS_AS(theta_coefficients(psi, 30'000'000), resource_error);
  const ThetaSeries theta = theta_coefficients(psi, 10);
  CHECK_THROWS_AS(theta.coefficient(0), domain_error);
  CHECK_THROWS_AS(theta.coefficient(11), domain_error);
  CHECK_THROWS_AS(direct_coefficient_oracle(psi, 0), domain_error);
}

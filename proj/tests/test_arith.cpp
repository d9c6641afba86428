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

#include <algorithm>
#include <numeric>

#include "theta1/arith.hpp"
#include "theta1/errors.hpp"

using namespace theta1;

namespace {

// Independent primality oracle: plain trial division.
bool trial_division_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Independent quadratic-residue oracle: Euler's criterion at an odd prime.
int euler_criterion(i64 a, i64 p) {
  const i64 r = mod_floor(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("mul_mod and pow_mod near the word boundary") {
  CHECK(mul_mod(3, 4, 5) == 2);
  const i64 p = 2305843009213693951;  // 2^61 - 1
  CHECK(mul_mod(p - 1, p - 1, p) == 1);
  CHECK(pow_mod(2, 61, p) == 1);  // 2^61 = p + 1
  CHECK(pow_mod(3, p - 1, p) == 1);
  CHECK(pow_mod(7, 0, 10) == 1);
}

TEST_CASE("isqrt is exact at square boundaries") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  for (i64 n : {i64{999999}, i64{1000000}, i64{1000001}}) CHECK(isqrt(n * n) == n);
  CHECK(isqrt(1000000000000000000) == 1000000000);
  CHECK(isqrt(999999999999999999) == 999999999);
  const i64 big = i64{3037000499};  // floor(sqrt(2^63 - 1))
  CHECK(isqrt(big * big - 1) == big - 1);
}

TEST_CASE("extended gcd returns Bezout certificates") {
  for (i64 a = -30; a <= 30; ++a) {
    for (i64 b = -30; b <= 30; ++b) {
      const Bezout r = ext_gcd(a, b);
      CHECK(r.g == std::gcd(a, b));
      CHECK(r.u * a + r.v * b == r.g);
    }
  }
}

TEST_CASE("mod_floor always lands in [0, m)") {
  CHECK(mod_floor(7, 3) == 1);
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(mod_floor(-3, 3) == 0);
  CHECK(mod_floor(-1, 120) == 119);
}

TEST_CASE("is_prime agrees with trial division and handles known traps") {
  for (i64 n = 0; n <= 3000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(!is_prime(561));        // Carmichael
  CHECK(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(2305843009213693951));  // 2^61 - 1
  CHECK(!is_prime(2305843009213693953));
}

TEST_CASE("primes_up_to matches known prime counts") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(10) == std::vector<i64>{2, 3, 5, 7});
  CHECK(primes_up_to(100).size() == 25);
  CHECK(primes_up_to(10000).size() == 1229);
  CHECK(primes_up_to(1000000).size() == 78498);
  CHECK(primes_up_to(1000000).back() == 999983);

  // Cross-check the whole head against the independent oracle.
  const std::vector<i64> head = primes_up_to(2000);
  std::vector<i64> expected;
  for (i64 n = 2; n <= 2000; ++n) {
    if (trial_division_prime(n)) expected.push_back(n);
  }
  CHECK(head == expected);

  CHECK_THROWS_AS(primes_up_to(0), domain_error);
  CHECK_THROWS_AS(primes_up_to(200000000), resource_error);
}

TEST_CASE("factorize recovers exact exponents") {
  const auto f720 = factorize(720);
  CHECK(f720.size() == 3);
  CHECK(f720.at(2) == 4);
  CHECK(f720.at(3) == 2);
  CHECK(f720.at(5) == 1);

  const auto big = factorize(i64{1} << 40);
  CHECK(big.size() == 1);
  CHECK(big.at(2) == 40);

  CHECK(factorize(1).empty());
  CHECK(factorize(9973).at(9973) == 1);
  CHECK_THROWS_AS(factorize(0), domain_error);

  for (i64 n = 1; n <= 500; ++n) {
    i64 prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(trial_division_prime(p));
      for (i64 i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("divisor_count matches the divisor definition") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(97) == 2);
  CHECK(divisor_count(720) == 30);
  for (i64 n = 1; n <= 300; ++n) {
    i64 direct = 0;
    for (i64 d = 1; d <= n; ++d) direct += n % d == 0;
    CHECK(divisor_count(n) == direct);
  }
}

TEST_CASE("smallest_factor_table matches factorize") {
  const auto spf = smallest_factor_table(2000);
  CHECK(spf[0] == 0);
  CHECK(spf[1] == 0);
  CHECK(spf[2] == 2);
  CHECK(spf[49] == 7);
  CHECK(spf[97] == 97);
  for (i64 n = 2; n <= 2000; ++n) {
    CHECK(static_cast<i64>(spf[static_cast<size_t>(n)]) == factorize(n).begin()->first);
  }
}

TEST_CASE("kronecker symbol matches Euler's criterion at odd primes") {
  for (i64 D : {i64{-3}, i64{-7}, i64{-23}, i64{-163}, i64{5}, i64{8}}) {
    for (i64 p : primes_up_to(300)) {
      if (p == 2) continue;
      CHECK(kronecker(D, p) == euler_criterion(D, p));
    }
  }
  // The prime 2 follows the discriminant-mod-8 rule.
  CHECK(kronecker(-23, 2) == 1);   // -23 = 1 (mod 8)
  CHECK(kronecker(-7, 2) == 1);    // -7 = 1 (mod 8)
  CHECK(kronecker(-3, 2) == -1);   // -3 = 5 (mod 8)
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-23, 23) == 0);
  CHECK(kronecker(-23, 1) == 1);
  CHECK_THROWS_AS(kronecker(-23, 0), domain_error);
  CHECK_THROWS_AS(kronecker(-2, 3), domain_error);  // -2 is not a discriminant
}

TEST_CASE("kronecker is completely multiplicative in the denominator") {
  for (i64 D : {i64{-23}, i64{-47}}) {
    for (i64 m = 1; m <= 60; ++m) {
      for (i64 n = 1; n <= 60; ++n) {
        CHECK(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
      }
    }
  }
}

TEST_CASE("sqrt_mod finds exactly the residues") {
  for (i64 p : {i64{3}, i64{5}, i64{7}, i64{13}, i64{17}, i64{101}, i64{998244353}}) {
    i64 tested = 0;
    for (i64 a = 1; a < std::min<i64>(p, 50); ++a) {
      const auto r = sqrt_mod(a, p);
      if (euler_criterion(a, p) == 1) {
        REQUIRE(r.has_value());
        CHECK(mul_mod(*r, *r, p) == a);
        CHECK(*r <= p - *r);  // canonical: the smaller of the two roots
      } else {
        CHECK(!r.has_value());
      }
      ++tested;
    }
    CHECK(tested > 0);
  }
  CHECK_THROWS_AS(sqrt_mod(2, 4), domain_error);
  CHECK_THROWS_AS(sqrt_mod(-1, 7), domain_error);
}

TEST_CASE("euler_phi matches the coprime count") {
  const i64 expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (i64 n = 1; n <= 12; ++n) CHECK(euler_phi(n) == expected[n - 1]);
  CHECK(euler_phi(120) == 32);
  for (i64 n = 1; n <= 200; ++n) {
    i64 direct = 0;
    for (i64 k = 1; k <= n; ++k) direct += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == direct);
  }
}

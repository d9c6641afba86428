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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace theta1 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// ---------------------------------------------------------------------------
// Modular arithmetic helpers
// ---------------------------------------------------------------------------

/// (a * b) mod m without overflow, for 0 <= a, b < m < 2^63.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

/// a^e mod m by binary exponentiation.  Requires m >= 1.
u64 pow_mod(u64 a, u64 e, u64 m);

/// Floor of the integer square root of n >= 0.
i64 isqrt(i64 n);

/// gcd(|a|, |b|), with gcd(0, 0) = 0.
i64 gcd(i64 a, i64 b);

/// Extended Euclid: returns g = gcd(a, b) >= 0 and Bezout coefficients with
/// u*a + v*b = g.
struct Bezout {
  i64 g, u, v;
};
Bezout ext_gcd(i64 a, i64 b);

/// x mod m normalized to [0, m).  Requires m >= 1.
inline i64 mod_floor(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin primality test, exact for all n < 2^63.
bool is_prime(i64 n);

/// All primes p <= limit, in increasing order, by a segmented sieve of
/// Eratosthenes.  Throws domain_error if limit < 1, resource_error if
/// limit > 10^8.
std::vector<i64> primes_up_to(i64 limit);

/// Prime factorization of n >= 1 as {prime -> exponent}, by trial division.
/// factorize(1) is the empty map.  Throws domain_error if n < 1.
std::map<i64, i64> factorize(i64 n);

/// Number of divisors of n >= 1, computed from the factorization.
i64 divisor_count(i64 n);

/// Smallest-prime-factor table for 0..limit: spf[n] is the least prime
/// dividing n (spf[0] = spf[1] = 0).  Linear sieve.
std::vector<std::int32_t> smallest_factor_table(i64 limit);

// ---------------------------------------------------------------------------
// Quadratic residues
// ---------------------------------------------------------------------------

/// Kronecker symbol (D | n) for a discriminant D = 0 or 1 (mod 4) and n >= 1.
/// Throws domain_error otherwise.
int kronecker(i64 D, i64 n);

/// A square root of a modulo an odd prime p (Tonelli-Shanks), i.e. r with
/// r^2 = a (mod p) and 0 <= r < p, or std::nullopt if a is a non-residue.
/// The smaller of the two roots is returned.  Requires 0 <= a < p, p an odd
/// prime.
std::optional<i64> sqrt_mod(i64 a, i64 p);

/// Euler's totient of n >= 1.
i64 euler_phi(i64 n);

}  // namespace theta1

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

#include "theta1/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "theta1/errors.hpp"

namespace theta1 {

u64 pow_mod(u64 a, u64 e, u64 m) {
  if (m == 0) throw domain_error("pow_mod: modulus must be positive");
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

i64 isqrt(i64 n) {
  if (n < 0) throw domain_error("isqrt: negative argument");
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

i64 gcd(i64 a, i64 b) {
  return std::gcd(a, b);
}

Bezout ext_gcd(i64 a, i64 b) {
  // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  i64 r0 = a, r1 = b;
  i64 u0 = 1, u1 = 0;
  i64 v0 = 0, v1 = 1;
  while (r1 != 0) {
    i64 quot = r0 / r1;
    r0 -= quot * r1;
    std::swap(r0, r1);
    u0 -= quot * u1;
    std::swap(u0, u1);
    v0 -= quot * v1;
    std::swap(v0, v1);
  }
  if (r0 < 0) {
    r0 = -r0;
    u0 = -u0;
    v0 = -v0;
  }
  return {r0, u0, v0};
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin witness set for all n < 3.3 * 10^24
  // (Sorenson & Webster), far beyond the 2^63 input range.
  u64 d = static_cast<u64>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const u64 un = static_cast<u64>(n);
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<i64> primes_up_to(i64 limit) {
  if (limit < 1) throw domain_error("primes_up_to: limit must be >= 1");
  if (limit > 100'000'000) {
    throw resource_error("primes_up_to: limit above 10^8 is not supported");
  }
  std::vector<i64> primes;
  if (limit >= 2) primes.push_back(2);

  // Sieve odd numbers only.  Base sieve up to sqrt(limit) seeds the
  // segmented passes over [3, limit].
  const i64 root = isqrt(limit);
  std::vector<char> base(static_cast<size_t>(root) + 1, 1);
  std::vector<i64> base_primes;  // odd primes <= root
  for (i64 i = 3; i <= root; i += 2) {
    if (!base[static_cast<size_t>(i)]) continue;
    base_primes.push_back(i);
    for (i64 j = i * i; j <= root; j += 2 * i) base[static_cast<size_t>(j)] = 0;
  }

  constexpr i64 kSegment = 1 << 18;  // odd numbers per segment
  std::vector<char> seg(kSegment);
  for (i64 low = 3; low <= limit; low += 2 * kSegment) {
    const i64 high = std::min(low + 2 * kSegment - 2, limit | 1);
    const i64 count = (high - low) / 2 + 1;  // odd values in [low, high]
    std::memset(seg.data(), 1, static_cast<size_t>(count));
    for (i64 p : base_primes) {
      if (p * p > high) break;
      i64 start = std::max(p * p, ((low + p - 1) / p) * p);
      if ((start & 1) == 0) start += p;
      for (i64 j = start; j <= high; j += 2 * p) seg[static_cast<size_t>((j - low) / 2)] = 0;
    }
    for (i64 k = 0; k < count; ++k) {
      if (seg[static_cast<size_t>(k)]) {
        i64 value = low + 2 * k;
        if (value <= limit) primes.push_back(value);
      }
    }
  }
  return primes;
}

std::map<i64, i64> factorize(i64 n) {
  if (n < 1) throw domain_error("factorize: argument must be >= 1");
  std::map<i64, i64> out;
  while (n % 2 == 0) {
    ++out[2];
    n /= 2;
  }
  for (i64 d = 3; d * d <= n; d += 2) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

i64 divisor_count(i64 n) {
  i64 tau = 1;
  for (const auto& [p, e] : factorize(n)) tau *= e + 1;
  return tau;
}

std::vector<std::int32_t> smallest_factor_table(i64 limit) {
  if (limit < 0) throw domain_error("smallest_factor_table: negative limit");
  if (limit > 2'000'000'000) {
    throw resource_error("smallest_factor_table: limit does not fit 32-bit entries");
  }
  std::vector<std::int32_t> spf(static_cast<size_t>(limit) + 1, 0);
  std::vector<std::int32_t> primes;
  for (i64 i = 2; i <= limit; ++i) {
    if (spf[static_cast<size_t>(i)] == 0) {
      spf[static_cast<size_t>(i)] = static_cast<std::int32_t>(i);
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : primes) {
      if (p > spf[static_cast<size_t>(i)] || p * i > limit) break;
      spf[static_cast<size_t>(p * i)] = p;
    }
  }
  return spf;
}

namespace {

// Kronecker symbol (a | b) for arbitrary a and b >= 1, following the
// binary algorithm in Cohen, "A Course in Computational Algebraic Number
// Theory", Algorithm 1.4.10.
int kronecker_general(i64 a, i64 b) {
  // (a | 2) for odd a, indexed by a mod 8.
  static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (((a | b) & 1) == 0) return 0;  // both even
  int v = 0;
  while ((b & 1) == 0) {
    b >>= 1;
    ++v;
  }
  int k = (v & 1) ? tab2[mod_floor(a, 8)] : 1;
  if (a < 0) {
    a = -a;
    if ((b & 3) == 3) k = -k;
  }
  a %= b;
  while (a != 0) {
    v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) k *= tab2[b & 7];
    if ((a & b & 2) != 0) k = -k;  // reciprocity: both a, b = 3 (mod 4)
    i64 t = a;
    a = b % t;
    b = t;
  }
  return b == 1 ? k : 0;
}

}  // namespace

int kronecker(i64 D, i64 n) {
  if (mod_floor(D, 4) > 1) {
    throw domain_error("kronecker: D must be 0 or 1 mod 4");
  }
  if (n < 1) throw domain_error("kronecker: n must be >= 1");
  return kronecker_general(D, n);
}

std::optional<i64> sqrt_mod(i64 a, i64 p) {
  if (p < 3 || !is_prime(p) || (p & 1) == 0) {
    throw domain_error("sqrt_mod: modulus must be an odd prime");
  }
  if (a < 0 || a >= p) throw domain_error("sqrt_mod: argument must be in [0, p)");
  if (a == 0) return 0;
  const u64 up = static_cast<u64>(p);
  if (pow_mod(static_cast<u64>(a), up >> 1, up) != 1) return std::nullopt;  // Euler criterion

  u64 root;
  if ((p & 3) == 3) {
    root = pow_mod(static_cast<u64>(a), (up + 1) >> 2, up);
  } else {
    // Tonelli-Shanks.  Write p - 1 = q * 2^s with q odd.
    u64 q = up - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    // Any quadratic non-residue z serves as the 2^s-th root generator.
    u64 z = 2;
    while (kronecker_general(static_cast<i64>(z), p) != -1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = pow_mod(z, q, up);
    u64 t = pow_mod(static_cast<u64>(a), q, up);
    root = pow_mod(static_cast<u64>(a), (q + 1) >> 1, up);
    while (t != 1) {
      u64 i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, up);
        ++i;
      }
      u64 b = c;
      for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, up);
      m = i;
      c = mul_mod(b, b, up);
      t = mul_mod(t, c, up);
      root = mul_mod(root, b, up);
    }
  }
  i64 r = static_cast<i64>(root);
  return std::min(r, p - r);
}

i64 euler_phi(i64 n) {
  i64 phi = n;
  for (const auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

}  // namespace theta1

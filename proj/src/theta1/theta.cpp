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

#include "theta1/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "theta1/errors.hpp"

namespace theta1 {

namespace {

// Hard cap on the coefficient table (words): 4 * 10^7 entries = 320 MB.
constexpr i64 kMaxFlatWords = 40'000'000;

// Angle codes for the per-prime table used during construction.
constexpr std::int32_t kInertCode = -1;
constexpr std::int32_t kRamifiedCode = -2;

}  // namespace

Cyclo ThetaSeries::coefficient(i64 n) const {
  if (n < 1 || n > n_max_) throw domain_error("ThetaSeries::coefficient: index out of range");
  const size_t base = static_cast<size_t>(n * phi_);
  return Cyclo::from_coords(modulus_,
                            std::vector<i64>(flat_.begin() + static_cast<std::ptrdiff_t>(base),
                                             flat_.begin() + static_cast<std::ptrdiff_t>(base + static_cast<size_t>(phi_))));
}

long double ThetaSeries::coefficient_real(i64 n) const { return coefficient(n).embed_real(); }

void ThetaSeries::corrupt_coefficient(i64 n, i64 delta) {
  if (n < 1 || n > n_max_) throw domain_error("ThetaSeries::corrupt_coefficient: index out of range");
  flat_[static_cast<size_t>(n * phi_)] += delta;
}

ThetaSeries theta_coefficients(const ClassCharacter& psi, i64 n_max) {
  if (psi.is_real()) {
    throw domain_error(
        "theta_coefficients: a real class group character yields an Eisenstein series; "
        "only the non-real (cuspidal) case is supported");
  }
  if (n_max < 1) throw domain_error("theta_coefficients: n_max must be >= 1");

  const i64 m = psi.order();
  const auto ctx = CycloContext::get(m);
  const i64 phi = ctx->degree();
  if ((n_max + 1) * phi > kMaxFlatWords) {
    throw resource_error("theta_coefficients: coefficient table would exceed the memory cap");
  }

  ThetaSeries out(psi);
  out.n_max_ = n_max;
  out.modulus_ = m;
  out.phi_ = phi;
  out.flat_.assign(static_cast<size_t>((n_max + 1) * phi), 0);
  out.flat_[static_cast<size_t>(phi)] = 1;  // c_1 = 1
  if (n_max == 1) return out;

  // Angle of psi on the prime above p, indexed by p: the numerator a of
  // psi(P) = e(a/m), or a negative type code.
  const SplitTable split(psi.group_ptr(), n_max);
  std::vector<std::int32_t> angle(static_cast<size_t>(n_max) + 1, kInertCode);
  for (size_t i = 0; i < split.primes().size(); ++i) {
    const PrimeClass& pc = split.entry(i);
    auto& slot = angle[static_cast<size_t>(split.primes()[i])];
    if (pc.type == Splitting::kSplit) {
      slot = static_cast<std::int32_t>(psi.value_numerator(pc.index));
    } else if (pc.type == Splitting::kRamified) {
      slot = kRamifiedCode;
    }
  }
  i64 ram_angle = 0;
  if (psi.group().q() <= n_max) {
    ram_angle = psi.value_numerator(prime_ideal_class(psi.group().q(), psi.group()).index);
  }

  const std::vector<std::int32_t> spf = smallest_factor_table(n_max);

  // c_{p^k} straight from the ideal count: the ideals of norm p^k above a
  // split p are P^i conj(P)^{k-i}, so c_{p^k} = sum_i e(a(2i-k)/m); an inert
  // p contributes only for even k (the principal ideal (p^{k/2})); the
  // ramified prime contributes the single class of P^k.
  std::map<std::pair<i64, i64>, std::vector<i64>> memo;
  auto prime_power = [&](i64 p, i64 k) -> const std::vector<i64>& {
    const std::int32_t code = angle[static_cast<size_t>(p)];
    const i64 key_a = code == kRamifiedCode ? -2 : (code == kInertCode ? -1 : code);
    const auto it = memo.find({key_a, k});
    if (it != memo.end()) return it->second;
    std::vector<i64> coords(static_cast<size_t>(phi), 0);
    if (code == kInertCode) {
      if (k % 2 == 0) coords[0] = 1;
    } else if (code == kRamifiedCode) {
      ctx->accumulate(coords, mod_floor(ram_angle * k, m), 1);
    } else {
      for (i64 i = 0; i <= k; ++i) {
        ctx->accumulate(coords, mod_floor(static_cast<i64>(code) * (2 * i - k), m), 1);
      }
    }
    return memo.emplace(std::make_pair(key_a, k), std::move(coords)).first->second;
  };

  std::vector<i64> conv(static_cast<size_t>(2 * phi - 1));
  for (i64 n = 2; n <= n_max; ++n) {
    const i64 p = spf[static_cast<size_t>(n)];
    i64 rest = n / p;
    i64 e = 1;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const std::vector<i64>& pp = prime_power(p, e);
    i64* dst = &out.flat_[static_cast<size_t>(n * phi)];
    if (rest == 1) {
      std::copy(pp.begin(), pp.end(), dst);
      continue;
    }
    // c_n = c_rest * c_{p^e} in Z[zeta_m] (coprime parts multiply).
    const i64* x = &out.flat_[static_cast<size_t>(rest * phi)];
    std::fill(conv.begin(), conv.end(), 0);
    for (i64 i = 0; i < phi; ++i) {
      if (x[i] == 0) continue;
      for (i64 j = 0; j < phi; ++j) conv[static_cast<size_t>(i + j)] += x[i] * pp[static_cast<size_t>(j)];
    }
    for (i64 t = 0; t < 2 * phi - 1; ++t) {
      if (conv[static_cast<size_t>(t)] != 0) ctx->accumulate(dst, t < m ? t : t - m, conv[static_cast<size_t>(t)]);
    }
  }
  return out;
}

Cyclo direct_coefficient_oracle(const ClassCharacter& psi, i64 n) {
  if (psi.is_real()) throw domain_error("direct_coefficient_oracle: character must be non-real");
  if (n < 1) throw domain_error("direct_coefficient_oracle: n must be >= 1");
  const ClassGroup& G = psi.group();
  const i64 m = psi.order();

  std::vector<std::pair<i64, i64>> factors;
  for (const auto& [p, e] : factorize(n)) factors.emplace_back(p, e);

  Cyclo acc = Cyclo::zero(m);
  // Walk every way to build an ideal of norm n as a product of prime ideals,
  // tracking the resulting ideal class.
  auto dfs = [&](auto&& self, size_t i, int cls) -> void {
    if (i == factors.size()) {
      acc += psi.value_cyclo(cls, m);
      return;
    }
    const auto [p, e] = factors[i];
    const PrimeClass pc = prime_ideal_class(p, G);
    switch (pc.type) {
      case Splitting::kInert:
        // Only even powers of an inert prime are norms: P = (p) has norm p^2.
        if (e % 2 == 0) self(self, i + 1, cls);
        return;
      case Splitting::kRamified:
        self(self, i + 1, G.compose_indices(cls, G.power_index(pc.index, e)));
        return;
      case Splitting::kSplit:
        for (i64 j = 0; j <= e; ++j) {
          const int part = G.compose_indices(G.power_index(pc.index, j), G.power_index(pc.conj_index, e - j));
          self(self, i + 1, G.compose_indices(cls, part));
        }
        return;
    }
  };
  dfs(dfs, 0, G.principal_index());
  return acc;
}

HeckeReport verify_hecke(const ThetaSeries& theta) {
  const i64 N = theta.limit();
  const i64 q = theta.group().q();
  const i64 m = theta.ring_modulus();
  HeckeReport report;

  for (i64 p : primes_up_to(N)) {
    const int chi = (p == q) ? 0 : kronecker(-q, p);
    const Cyclo cp = theta.coefficient(p);
    Cyclo prev = Cyclo::one(m);
    Cyclo cur = cp;
    i64 k = 1;
    for (i64 pk = p; pk <= N / p; pk *= p, ++k) {
      const Cyclo next = theta.coefficient(pk * p);
      if (next != cp * cur - prev * chi) {
        report.ok = false;
        if (!report.first) {
          report.first = HeckeViolation{HeckeViolation::Kind::kPrimePower, p, k, 0, 0};
        }
      }
      ++report.power_identities_checked;
      prev = cur;
      cur = next;
    }
  }

  const std::vector<std::int32_t> spf = smallest_factor_table(N);
  for (i64 n = 2; n <= N; ++n) {
    const i64 p = spf[static_cast<size_t>(n)];
    i64 rest = n / p;
    i64 pe = p;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    if (rest == 1) continue;
    if (theta.coefficient(n) != theta.coefficient(pe) * theta.coefficient(rest)) {
      report.ok = false;
      if (!report.first) {
        report.first = HeckeViolation{HeckeViolation::Kind::kProduct, 0, 0, pe, rest};
      }
    }
    ++report.products_checked;
  }
  return report;
}

RamanujanReport ramanujan_check(const ThetaSeries& theta) {
  const i64 N = theta.limit();
  const i64 q = theta.group().q();
  RamanujanReport report;
  constexpr long double kSlack = 1e-9L;

  for (i64 p : primes_up_to(N)) {
    if (p == q) continue;  // the bound concerns good primes
    const long double v = std::fabs(theta.coefficient_real(p));
    if (v > report.max_prime_abs) {
      report.max_prime_abs = v;
      report.argmax_prime = p;
    }
    ++report.primes_checked;
  }
  report.prime_bound_ok = report.max_prime_abs <= 2.0L + kSlack;

  // Divisor-count table by the divisor-adding sieve.
  std::vector<std::int32_t> tau(static_cast<size_t>(N) + 1, 0);
  for (i64 d = 1; d <= N; ++d) {
    for (i64 j = d; j <= N; j += d) ++tau[static_cast<size_t>(j)];
  }
  for (i64 n = 1; n <= N; ++n) {
    const long double v = std::fabs(theta.coefficient_real(n));
    ++report.values_checked;
    if (v > static_cast<long double>(tau[static_cast<size_t>(n)]) + kSlack) {
      report.divisor_bound_ok = false;
      if (report.first_divisor_violation == 0) report.first_divisor_violation = n;
    }
  }
  return report;
}

std::vector<ThetaSeries> dihedral_basis(std::shared_ptr<const ClassGroup> group, i64 n_max) {
  const std::vector<ClassCharacter> chars = all_characters(group);
  std::vector<ThetaSeries> out;
  for (const auto& [i, j] : conjugate_pairs(chars)) {
    out.push_back(theta_coefficients(chars[static_cast<size_t>(i)], n_max));
    (void)j;  // conjugate characters give the same series
  }
  return out;
}

BasisReport basis_independence_report(const std::vector<ThetaSeries>& basis, i64 columns) {
  BasisReport report;
  if (basis.empty()) return report;
  i64 L = columns;
  for (const ThetaSeries& t : basis) L = std::min(L, t.limit());
  report.columns = L;

  const int rows = static_cast<int>(basis.size());
  for (int i = 0; i < rows && report.pairwise_distinct; ++i) {
    for (int j = i + 1; j < rows && report.pairwise_distinct; ++j) {
      bool differ = false;
      for (i64 n = 1; n <= L; ++n) {
        if (basis[static_cast<size_t>(i)].coefficient(n) != basis[static_cast<size_t>(j)].coefficient(n)) {
          differ = true;
          break;
        }
      }
      if (!differ) {
        report.pairwise_distinct = false;
        report.first_equal_i = i;
        report.first_equal_j = j;
      }
    }
  }

  // Numerical rank by Gaussian elimination with partial pivoting.
  std::vector<std::vector<long double>> mat(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    mat[static_cast<size_t>(i)].resize(static_cast<size_t>(L));
    for (i64 n = 1; n <= L; ++n) {
      mat[static_cast<size_t>(i)][static_cast<size_t>(n - 1)] = basis[static_cast<size_t>(i)].coefficient_real(n);
    }
  }
  constexpr long double kTol = 1e-9L;
  int rank = 0;
  i64 col = 0;
  while (rank < rows && col < L) {
    int pivot = -1;
    long double best = kTol;
    for (int i = rank; i < rows; ++i) {
      const long double v = std::fabs(mat[static_cast<size_t>(i)][static_cast<size_t>(col)]);
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (pivot < 0) {
      ++col;
      continue;
    }
    std::swap(mat[static_cast<size_t>(pivot)], mat[static_cast<size_t>(rank)]);
    const auto& prow = mat[static_cast<size_t>(rank)];
    for (int i = rank + 1; i < rows; ++i) {
      auto& row = mat[static_cast<size_t>(i)];
      const long double f = row[static_cast<size_t>(col)] / prow[static_cast<size_t>(col)];
      if (f != 0.0L) {
        for (i64 c2 = col; c2 < L; ++c2) row[static_cast<size_t>(c2)] -= f * prow[static_cast<size_t>(c2)];
      }
    }
    ++rank;
    ++col;
  }
  report.rank = rank;
  report.independent = rank == rows;
  return report;
}

}  // namespace theta1

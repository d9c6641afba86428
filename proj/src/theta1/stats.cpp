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

#include "theta1/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "theta1/errors.hpp"
#include "theta1/parallel.hpp"

namespace theta1 {

namespace {
constexpr long double kTwoPi = 6.283185307179586476925286766559L;

void require_same_group(const ClassCharacter& psi, const SplitTable& table) {
  if (psi.group().q() != table.group().q()) {
    throw domain_error("character and split table belong to different levels");
  }
}
}  // namespace

// ---------------------------------------------------------------------------
// CosValue
// ---------------------------------------------------------------------------

CosValue CosValue::from_angle(i64 num, i64 den) {
  const RootOfUnity r(num, den);  // validates and reduces
  CosValue out;
  out.d = r.order();
  out.k = std::min(r.k, out.d - r.k);
  if (out.d == 1) out.k = 0;  // e(0/1): keep (0, 1)
  // Reduce again: min(k, d-k) can share a factor with d (e.g. 2/3 -> 1/3).
  const i64 g = std::gcd(out.k, out.d);
  if (g > 1) {
    out.k /= g;
    out.d /= g;
  }
  return out;
}

long double CosValue::value() const {
  return 2.0L * std::cos(kTwoPi * static_cast<long double>(k) / static_cast<long double>(d));
}

std::string CosValue::str() const {
  return "2cos(2pi*" + std::to_string(k) + "/" + std::to_string(d) + ")";
}

// ---------------------------------------------------------------------------
// AtomicMeasure / EmpiricalMeasure
// ---------------------------------------------------------------------------

Rational AtomicMeasure::total_mass() const {
  Rational s(0);
  for (const auto& [v, w] : atoms) s += w;
  return s;
}

Rational AtomicMeasure::mass_at(const CosValue& v) const {
  for (const auto& [key, w] : atoms) {
    if (key == v) return w;
  }
  return Rational(0);
}

long double AtomicMeasure::moment(int r) const {
  long double s = 0;
  for (const auto& [v, w] : atoms) s += w.value() * std::pow(v.value(), static_cast<long double>(r));
  return s;
}

i64 EmpiricalMeasure::count_at(const CosValue& v) const {
  for (const auto& [key, c] : counts) {
    if (key == v) return c;
  }
  return 0;
}

long double EmpiricalMeasure::mass_at(const CosValue& v) const {
  return sample_count == 0 ? 0.0L : static_cast<long double>(count_at(v)) / static_cast<long double>(sample_count);
}

long double EmpiricalMeasure::moment(int r) const {
  if (sample_count == 0) return 0;
  long double s = 0;
  for (const auto& [v, c] : counts) {
    s += static_cast<long double>(c) * std::pow(v.value(), static_cast<long double>(r));
  }
  return s / static_cast<long double>(sample_count);
}

AtomicMeasure theoretical_mu(const ClassCharacter& psi) {
  if (psi.is_real()) throw domain_error("theoretical_mu: character must be non-real");
  const ClassGroup& G = psi.group();
  const i64 h = G.h();
  const i64 m = psi.order();

  std::map<CosValue, Rational> acc;
  acc[CosValue::zero()] = Rational(1, 2);  // inert primes
  for (int c = 0; c < h; ++c) {
    const CosValue key = CosValue::from_angle(psi.value_numerator(c), m);
    const auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, Rational(1, 2 * h));
    } else {
      it->second += Rational(1, 2 * h);
    }
  }
  AtomicMeasure out;
  out.atoms.assign(acc.begin(), acc.end());
  return out;
}

Cyclo theoretical_moment_sum(const ClassCharacter& psi, int r) {
  if (r < 0) throw domain_error("theoretical_moment_sum: negative moment");
  const ClassGroup& G = psi.group();
  const i64 m = psi.order();
  Cyclo acc = Cyclo::zero(m);
  for (int c = 0; c < G.h(); ++c) {
    const Cyclo v = psi.value_cyclo(c, m) + psi.value_cyclo(G.inverse_index(c), m);
    Cyclo p = Cyclo::one(m);
    for (int i = 0; i < r; ++i) p *= v;
    acc += p;
  }
  return acc;
}

EmpiricalMeasure empirical_mu(const ClassCharacter& psi, const SplitTable& table) {
  require_same_group(psi, table);
  if (psi.is_real()) throw domain_error("empirical_mu: character must be non-real");
  const i64 m = psi.order();

  std::map<CosValue, i64> acc;
  i64 samples = 0;
  for (size_t i = 0; i < table.primes().size(); ++i) {
    const PrimeClass& pc = table.entry(i);
    if (pc.type == Splitting::kRamified) continue;
    ++samples;
    const CosValue key = pc.type == Splitting::kInert
                             ? CosValue::zero()
                             : CosValue::from_angle(psi.value_numerator(pc.index), m);
    ++acc[key];
  }
  EmpiricalMeasure out;
  out.sample_count = samples;
  out.counts.assign(acc.begin(), acc.end());
  return out;
}

long double measure_discrepancy(const AtomicMeasure& mu, const EmpiricalMeasure& nu) {
  long double worst = 0;
  for (const auto& [v, w] : mu.atoms) {
    worst = std::max(worst, std::fabs(w.value() - nu.mass_at(v)));
  }
  for (const auto& [v, c] : nu.counts) {
    if (mu.mass_at(v) == Rational(0)) {
      worst = std::max(worst, nu.sample_count == 0
                                  ? 0.0L
                                  : static_cast<long double>(c) / static_cast<long double>(nu.sample_count));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Vanishing
// ---------------------------------------------------------------------------

ZeroDensityReport zero_density(const ClassCharacter& psi, const SplitTable& table) {
  require_same_group(psi, table);
  if (psi.is_real()) throw domain_error("zero_density: character must be non-real");
  const ClassGroup& G = psi.group();
  const i64 m = psi.order();

  ZeroDensityReport out;
  i64 quartic = 0;  // classes where psi(c) is a primitive 4th root of unity
  for (int c = 0; c < G.h(); ++c) {
    if (psi.value(c).order() == 4) ++quartic;
  }
  out.theoretical = Rational(1, 2) + Rational(quartic, 2 * G.h());

  for (size_t i = 0; i < table.primes().size(); ++i) {
    const PrimeClass& pc = table.entry(i);
    if (pc.type == Splitting::kRamified) continue;
    ++out.good_primes;
    if (pc.type == Splitting::kInert) {
      ++out.zero_count;
    } else if (RootOfUnity(psi.value_numerator(pc.index), m).order() == 4) {
      ++out.zero_count;  // c_p = 2cos(+-pi/2) = 0
    }
  }
  return out;
}

double nonvanishing_exponent_fit(const std::vector<i64>& xs, const std::vector<i64>& counts) {
  if (xs.size() != counts.size() || xs.size() < 2) {
    throw domain_error("nonvanishing_exponent_fit: need two or more checkpoints");
  }
  // Model: count(x) = C x / (log x)^beta, i.e.
  //   log(count/x) = log C - beta * log log x.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 3 || counts[i] < 1) throw domain_error("nonvanishing_exponent_fit: checkpoint out of range");
    const double lx = std::log(std::log(static_cast<double>(xs[i])));
    const double ly = std::log(static_cast<double>(counts[i]) / static_cast<double>(xs[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

NonvanishingCount count_nonzero(const ClassCharacter& psi, i64 limit) {
  if (psi.is_real()) throw domain_error("count_nonzero: character must be non-real");
  if (limit < 4096) throw domain_error("count_nonzero: limit must be at least 4096");

  const i64 m = psi.order();
  const i64 q = psi.group().q();

  // Vanishing at prime powers is periodic in the exponent.  Encode per prime:
  //   0          ramified: c_{q^e} is a root of unity, never zero
  //  -1          inert: c_{p^e} = 0 iff e is odd
  //   z >= 1     split with psi(P) = e(a/m): c_{p^e} = 0 iff z > 1 and
  //              z | e + 1, where z = m / gcd(m, 2a) is the order of the
  //              squared ratio of the two eigenvalues.
  std::vector<std::int16_t> code(static_cast<size_t>(limit) + 1, 0);
  {
    const SplitTable table(psi.group_ptr(), limit);
    for (size_t i = 0; i < table.primes().size(); ++i) {
      const PrimeClass& pc = table.entry(i);
      const i64 p = table.primes()[i];
      if (pc.type == Splitting::kInert) {
        code[static_cast<size_t>(p)] = -1;
      } else if (pc.type == Splitting::kSplit) {
        const i64 a = psi.value_numerator(pc.index);
        code[static_cast<size_t>(p)] = static_cast<std::int16_t>(m / std::gcd(m, 2 * a % m));
      }
    }
  }
  auto prime_power_nonzero = [&code](i64 p, i64 e) {
    const std::int16_t z = code[static_cast<size_t>(p)];
    if (z == -1) return e % 2 == 0;
    if (z <= 1) return true;
    return (e + 1) % z != 0;
  };

  NonvanishingCount out;
  out.limit = limit;
  for (i64 x = 1024; x <= limit; x *= 2) out.checkpoints.push_back(x);

  const std::vector<i64> primes = primes_up_to(isqrt(limit));
  constexpr i64 kBlock = 1 << 20;
  std::vector<i64> rem(static_cast<size_t>(kBlock));
  std::vector<char> ok(static_cast<size_t>(kBlock));

  i64 running = 0;
  size_t next_cp = 0;
  out.counts.resize(out.checkpoints.size());
  for (i64 lo = 1; lo <= limit; lo += kBlock) {
    const i64 hi = std::min(lo + kBlock - 1, limit);
    const i64 len = hi - lo + 1;
    for (i64 i = 0; i < len; ++i) {
      rem[static_cast<size_t>(i)] = lo + i;
      ok[static_cast<size_t>(i)] = 1;
    }
    for (i64 p : primes) {
      for (i64 j = ((lo + p - 1) / p) * p; j <= hi; j += p) {
        const size_t idx = static_cast<size_t>(j - lo);
        i64 e = 0;
        while (rem[idx] % p == 0) {
          rem[idx] /= p;
          ++e;
        }
        if (!prime_power_nonzero(p, e)) ok[idx] = 0;
      }
    }
    for (i64 i = 0; i < len; ++i) {
      // Any cofactor left after removing the primes below sqrt(limit) is a
      // single large prime; it enters with exponent 1, so only the inert
      // case (and a split class of order exactly 2, impossible for odd m)
      // kills the coefficient.
      if (ok[static_cast<size_t>(i)]) {
        const i64 r = rem[static_cast<size_t>(i)];
        if (r > 1 && !prime_power_nonzero(r, 1)) ok[static_cast<size_t>(i)] = 0;
      }
      if (ok[static_cast<size_t>(i)]) ++running;
      const i64 n = lo + i;
      while (next_cp < out.checkpoints.size() && out.checkpoints[next_cp] == n) {
        out.counts[next_cp] = running;
        ++next_cp;
      }
    }
  }
  check_internal(next_cp == out.checkpoints.size(), "count_nonzero: checkpoint bookkeeping failed");
  (void)q;
  out.fitted_exponent = nonvanishing_exponent_fit(out.checkpoints, out.counts);
  return out;
}

// ---------------------------------------------------------------------------
// Value-set finiteness
// ---------------------------------------------------------------------------

i64 FiniteValueReport::count_above(long double bound) const {
  i64 out = 0;
  for (const auto& [v, c] : value_counts) {
    if (std::fabs(v.value()) > bound) out += c;
  }
  return out;
}

FiniteValueReport finite_value_check(const ClassCharacter& psi, const SplitTable& table) {
  require_same_group(psi, table);
  if (psi.is_real()) throw domain_error("finite_value_check: character must be non-real");
  const i64 m = psi.order();

  std::map<CosValue, i64> acc;
  FiniteValueReport out;
  for (size_t i = 0; i < table.primes().size(); ++i) {
    const PrimeClass& pc = table.entry(i);
    if (pc.type == Splitting::kRamified) continue;
    ++out.good_primes;
    const CosValue key = pc.type == Splitting::kInert
                             ? CosValue::zero()
                             : CosValue::from_angle(psi.value_numerator(pc.index), m);
    ++acc[key];
  }
  out.value_counts.assign(acc.begin(), acc.end());
  for (const auto& [v, c] : out.value_counts) {
    out.max_abs = std::max(out.max_abs, std::fabs(v.value()));
    for (i64 a = 1; a <= v.d; ++a) {
      if (std::gcd(a, v.d) != 1) continue;
      const long double conj =
          2.0L * std::cos(kTwoPi * static_cast<long double>(mod_floor(a * v.k, v.d)) / static_cast<long double>(v.d));
      out.max_galois_abs = std::max(out.max_galois_abs, std::fabs(conj));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Aggregates across levels
// ---------------------------------------------------------------------------

long double RealAtomicMeasure::total_mass() const {
  long double s = 0;
  for (const auto& [v, w] : atoms) s += w;
  return s;
}

long double RealAtomicMeasure::mass_at(const CosValue& v) const {
  for (const auto& [key, w] : atoms) {
    if (key == v) return w;
  }
  return 0;
}

long double RealAtomicMeasure::moment(int r) const {
  long double s = 0;
  for (const auto& [v, w] : atoms) s += w * std::pow(v.value(), static_cast<long double>(r));
  return s;
}

namespace {

std::vector<i64> valid_levels_up_to(i64 q_max) {
  std::vector<i64> levels;
  for (i64 q : primes_up_to(q_max)) {
    if (q % 4 == 3) levels.push_back(q);
  }
  return levels;
}

}  // namespace

RealAtomicMeasure averaged_measure(i64 q_max, i64 sample_limit, int threads) {
  if (q_max < 3) throw domain_error("averaged_measure: q_max must be at least 3");
  const std::vector<i64> levels = valid_levels_up_to(q_max);

  // Per-level partial results, merged in level order for determinism.
  struct Partial {
    std::vector<std::pair<CosValue, long double>> atoms;  // sum of per-pair masses
    i64 pair_count = 0;
  };
  std::vector<Partial> partials(levels.size());

  parallel_for(static_cast<i64>(levels.size()), threads, [&](i64 li) {
    const i64 q = levels[static_cast<size_t>(li)];
    const auto group = ClassGroup::create(q);
    if (group->h() == 1) return;  // no non-real characters
    const auto chars = all_characters(group);
    const auto pairs = conjugate_pairs(chars);

    std::map<CosValue, long double> acc;
    std::shared_ptr<SplitTable> table;
    if (sample_limit > 0) table = std::make_shared<SplitTable>(group, sample_limit);
    for (const auto& [rep, conj] : pairs) {
      (void)conj;
      const ClassCharacter& psi = chars[static_cast<size_t>(rep)];
      if (sample_limit == 0) {
        for (const auto& [v, w] : theoretical_mu(psi).atoms) acc[v] += w.value();
      } else {
        const EmpiricalMeasure e = empirical_mu(psi, *table);
        for (const auto& [v, c] : e.counts) {
          acc[v] += static_cast<long double>(c) / static_cast<long double>(e.sample_count);
        }
      }
    }
    Partial& part = partials[static_cast<size_t>(li)];
    part.atoms.assign(acc.begin(), acc.end());
    part.pair_count = static_cast<i64>(pairs.size());
  });

  i64 total_pairs = 0;
  std::map<CosValue, long double> merged;
  for (const Partial& part : partials) {
    total_pairs += part.pair_count;
    for (const auto& [v, w] : part.atoms) merged[v] += w;
  }
  if (total_pairs == 0) {
    throw domain_error("averaged_measure: no level below the bound has a non-real character");
  }
  RealAtomicMeasure out;
  out.atoms.reserve(merged.size());
  for (const auto& [v, w] : merged) {
    out.atoms.emplace_back(v, w / static_cast<long double>(total_pairs));
  }
  return out;
}

DimensionScan dimension_scan(i64 q_max, int threads) {
  if (q_max < 3) throw domain_error("dimension_scan: q_max must be at least 3");
  const std::vector<i64> levels = valid_levels_up_to(q_max);
  DimensionScan out;
  out.rows.resize(levels.size());
  parallel_for(static_cast<i64>(levels.size()), threads, [&](i64 li) {
    const i64 q = levels[static_cast<size_t>(li)];
    const i64 h = class_number(q);
    out.rows[static_cast<size_t>(li)] = DimensionRow{q, h, (h - 1) / 2};
  });

  // Least squares of log h against log q.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(out.rows.size());
  if (out.rows.size() < 2) throw domain_error("dimension_scan: need at least two levels");
  for (const DimensionRow& row : out.rows) {
    const double lx = std::log(static_cast<double>(row.q));
    const double ly = std::log(static_cast<double>(row.h));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.intercept = (sy - out.slope * sx) / n;
  return out;
}

}  // namespace theta1

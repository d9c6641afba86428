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

// Acceptance gate: twelve release-blocking checks, each holding one
// user-facing guarantee of the library against an independent computation or
// an extremal workload.  Checks favour exhaustive sweeps and oracles that
// share no code with the functions under test.
//
//   theta1_acceptance [--only K] [--threads T]
//
// prints one PASS/FAIL line per check and exits with the number of failures,
// so each check doubles as a ctest entry.  Checks with an explicit runtime
// budget fail when they blow it, even if the mathematics came out right.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "theta1/arith.hpp"
#include "theta1/bqf.hpp"
#include "theta1/characters.hpp"
#include "theta1/cyclotomic.hpp"
#include "theta1/experiments.hpp"
#include "theta1/hecke.hpp"
#include "theta1/parallel.hpp"
#include "theta1/rational.hpp"
#include "theta1/stats.hpp"
#include "theta1/theta.hpp"

using namespace theta1;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4Lg", x);
  return buf;
}

std::string fmt(double x) { return fmt(static_cast<long double>(x)); }

/// Primes q = 3 mod 4 up to the bound: the valid levels.
std::vector<i64> valid_levels(i64 bound) {
  std::vector<i64> out;
  for (i64 q : primes_up_to(bound)) {
    if (q % 4 == 3) out.push_back(q);
  }
  return out;
}

/// The non-real characters of the four small reference levels, one task per
/// character (not one per conjugate pair: the heavy sweeps below re-derive
/// conjugate series independently rather than assuming they coincide).
struct CharacterTask {
  i64 q = 0;
  int idx = 0;
  std::vector<ClassCharacter> chars;  // the full character list of the level

  const ClassCharacter& psi() const { return chars[static_cast<size_t>(idx)]; }
};

std::vector<CharacterTask> nonreal_tasks(const std::vector<i64>& levels) {
  std::vector<CharacterTask> tasks;
  for (i64 q : levels) {
    const auto chars = all_characters(ClassGroup::create(q));
    for (int i = 0; i < static_cast<int>(chars.size()); ++i) {
      if (!chars[static_cast<size_t>(i)].is_real()) tasks.push_back({q, i, chars});
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// 1. Class numbers against the analytic class number formula
// ---------------------------------------------------------------------------

// h(-q) = w sqrt(q) L(1, chi_{-q}) / (2 pi), with L evaluated as a plain
// partial sum of 10^6 terms of the Kronecker character.  The oracle shares no
// code with the form-reduction enumeration under test: the character is
// sieved multiplicatively from its values at primes, summed smallest terms
// first, and rounded.  Partial-sum tails stay below 2e-3 for q <= 10^4
// (Polya–Vinogradov), two orders of magnitude inside the rounding margin;
// the worst observed distance from an integer is reported.
Outcome class_numbers_match_analytic_formula(int threads) {
  constexpr i64 kLevelBound = 10000;
  constexpr i64 kTerms = 1000000;
  const std::vector<i64> levels = valid_levels(kLevelBound);
  const std::vector<std::int32_t> spf = smallest_factor_table(kTerms);
  const std::vector<i64> primes = primes_up_to(kTerms);

  struct Slot {
    bool ok = true;
    i64 q = 0, lib = 0, oracle = 0;
    long double residual = 0;  // |raw analytic value - nearest integer|
  };
  std::vector<Slot> slots(levels.size());

  parallel_for(static_cast<i64>(levels.size()), threads, [&](i64 idx) {
    const i64 q = levels[static_cast<size_t>(idx)];
    std::vector<std::int8_t> chi(kTerms + 1, 0);
    chi[1] = 1;
    for (i64 p : primes) chi[p] = static_cast<std::int8_t>(kronecker(-q, p));
    for (i64 n = 2; n <= kTerms; ++n) {
      const i64 p = spf[static_cast<size_t>(n)];
      if (n != p) chi[n] = static_cast<std::int8_t>(chi[n / p] * chi[p]);
    }
    long double sum = 0;
    for (i64 n = kTerms; n >= 1; --n) {
      if (chi[n] != 0) sum += static_cast<long double>(chi[n]) / static_cast<long double>(n);
    }
    const int w = q == 3 ? 6 : 2;
    const long double raw = static_cast<long double>(w) *
                            std::sqrt(static_cast<long double>(q)) * sum /
                            (2 * std::numbers::pi_v<long double>);
    Slot& s = slots[static_cast<size_t>(idx)];
    s.q = q;
    s.oracle = llroundl(raw);
    s.residual = std::fabs(raw - static_cast<long double>(s.oracle));
    s.lib = class_number(q);
    s.ok = s.lib == s.oracle;
  });

  long double worst = 0;
  for (const Slot& s : slots) {
    if (!s.ok) {
      return {false, "q=" + std::to_string(s.q) + ": library h=" + std::to_string(s.lib) +
                         " vs analytic h=" + std::to_string(s.oracle)};
    }
    worst = std::max(worst, s.residual);
  }
  return {true, std::to_string(levels.size()) +
                    " levels agree, worst rounding residual " + fmt(worst)};
}

// ---------------------------------------------------------------------------
// 2. Series coefficients against the direct ideal count
// ---------------------------------------------------------------------------

// Every coefficient of every non-real character series at levels 23, 31, 47
// and 71 (all fourteen characters, conjugates included) must equal the
// direct per-n oracle, which walks prime ideals above each prime factor of n
// instead of enumerating lattice points.  Exact cyclotomic comparison.
Outcome coefficients_match_ideal_count(int threads) {
  constexpr i64 kNMax = 10000;
  const std::vector<CharacterTask> tasks = nonreal_tasks({23, 31, 47, 71});

  struct Slot {
    bool ok = true;
    i64 bad_n = 0;
  };
  std::vector<Slot> slots(tasks.size());

  parallel_for(static_cast<i64>(tasks.size()), threads, [&](i64 t) {
    const CharacterTask& task = tasks[static_cast<size_t>(t)];
    const ThetaSeries theta = theta_coefficients(task.psi(), kNMax);
    for (i64 n = 1; n <= kNMax; ++n) {
      if (!(theta.coefficient(n) == direct_coefficient_oracle(task.psi(), n))) {
        slots[static_cast<size_t>(t)] = {false, n};
        return;
      }
    }
  });

  for (size_t t = 0; t < tasks.size(); ++t) {
    if (!slots[t].ok) {
      return {false, "q=" + std::to_string(tasks[t].q) + " psi=" + std::to_string(tasks[t].idx) +
                         ": first mismatch at n=" + std::to_string(slots[t].bad_n)};
    }
  }
  return {true, std::to_string(tasks.size()) + " characters x " + std::to_string(kNMax) +
                    " coefficients, all equal the ideal-count oracle"};
}

// ---------------------------------------------------------------------------
// 3. Multiplicative structure, exhaustively
// ---------------------------------------------------------------------------

// The same fourteen series, extended to n <= 10^5: every prime-power
// recursion c_{p^{k+1}} = c_p c_{p^k} - chi(p) c_{p^{k-1}} (chi(q) = 0 at the
// ramified prime) and every coprime product c_{mn} = c_m c_n must hold as an
// identity in the cyclotomic ring.  Zero tolerance.
Outcome multiplicative_identities_exact(int threads) {
  constexpr i64 kNMax = 100000;
  const std::vector<CharacterTask> tasks = nonreal_tasks({23, 31, 47, 71});

  struct Slot {
    bool ok = true;
    i64 powers = 0, products = 0;
    std::string witness;
  };
  std::vector<Slot> slots(tasks.size());

  parallel_for(static_cast<i64>(tasks.size()), threads, [&](i64 t) {
    const CharacterTask& task = tasks[static_cast<size_t>(t)];
    const ThetaSeries theta = theta_coefficients(task.psi(), kNMax);
    const HeckeReport rep = verify_hecke(theta);
    Slot& s = slots[static_cast<size_t>(t)];
    s.ok = rep.ok;
    s.powers = rep.power_identities_checked;
    s.products = rep.products_checked;
    if (!rep.ok && rep.first.has_value()) {
      const HeckeViolation& v = *rep.first;
      s.witness = v.kind == HeckeViolation::Kind::kPrimePower
                      ? "p=" + std::to_string(v.p) + " k=" + std::to_string(v.k)
                      : "m=" + std::to_string(v.m) + " n=" + std::to_string(v.n);
    }
  });

  i64 powers = 0, products = 0;
  for (size_t t = 0; t < tasks.size(); ++t) {
    if (!slots[t].ok) {
      return {false, "q=" + std::to_string(tasks[t].q) + " psi=" + std::to_string(tasks[t].idx) +
                         ": violated at " + slots[t].witness};
    }
    powers += slots[t].powers;
    products += slots[t].products;
  }
  return {true, std::to_string(tasks.size()) + " series to n=100000: " + std::to_string(powers) +
                    " power recursions + " + std::to_string(products) + " coprime products, all exact"};
}

// ---------------------------------------------------------------------------
// 4. Prime values bounded by two
// ---------------------------------------------------------------------------

// Part one scans every character at every valid level q <= 10^3 over all
// primes p <= 10^6 (via the splitting table) and requires |c_p| <= 2 + 1e-9,
// including every Galois conjugate of every observed value.  Part two checks
// the divisor bound |c_n| <= tau(n) for n <= 10^5 on the four reference
// levels.  The prime bound is attained (split principal primes give exactly
// 2), so the reported maximum should be 2 on the nose.
Outcome prime_values_bounded_by_two(int threads) {
  constexpr long double kBound = 2 + 1e-9L;
  constexpr i64 kPrimeBound = 1000000;
  const std::vector<i64> levels = valid_levels(1000);

  struct Slot {
    bool ok = true;
    long double max_abs = 0;
    std::string msg;
  };
  std::vector<Slot> slots(levels.size());

  parallel_for(static_cast<i64>(levels.size()), threads, [&](i64 idx) {
    const i64 q = levels[static_cast<size_t>(idx)];
    Slot& s = slots[static_cast<size_t>(idx)];
    const auto group = ClassGroup::create(q);
    if (group->h() == 1) return;  // only the trivial character, nothing to scan
    const SplitTable table(group, kPrimeBound);
    const auto chars = all_characters(group);
    for (const auto& [i, j] : conjugate_pairs(chars)) {
      const FiniteValueReport rep = finite_value_check(chars[static_cast<size_t>(i)], table);
      s.max_abs = std::max({s.max_abs, rep.max_abs, rep.max_galois_abs});
      if (rep.max_abs > kBound || rep.max_galois_abs > kBound) {
        s.ok = false;
        s.msg = "q=" + std::to_string(q) + " psi=" + std::to_string(i) +
                ": max |c_p| = " + fmt(std::max(rep.max_abs, rep.max_galois_abs));
        return;
      }
    }
  });

  long double global_max = 0;
  for (const Slot& s : slots) {
    if (!s.ok) return {false, s.msg};
    global_max = std::max(global_max, s.max_abs);
  }

  i64 divisor_series = 0;
  for (i64 q : {23, 31, 47, 71}) {
    const auto group = ClassGroup::create(q);
    const auto chars = all_characters(group);
    for (const auto& [i, j] : conjugate_pairs(chars)) {
      const ThetaSeries theta = theta_coefficients(chars[static_cast<size_t>(i)], 100000);
      const RamanujanReport rep = ramanujan_check(theta);
      if (!rep.prime_bound_ok || !rep.divisor_bound_ok) {
        return {false, "q=" + std::to_string(q) + " psi=" + std::to_string(i) +
                           (rep.divisor_bound_ok
                                ? ": |c_p| > 2 at p=" + std::to_string(rep.argmax_prime)
                                : ": |c_n| > tau(n) at n=" +
                                      std::to_string(rep.first_divisor_violation))};
      }
      ++divisor_series;
    }
  }
  return {true, std::to_string(levels.size()) + " levels scanned to p=10^6, max |c_p| = " +
                    fmt(global_max) + "; divisor bound clean on " +
                    std::to_string(divisor_series) + " series to n=10^5"};
}

// ---------------------------------------------------------------------------
// 5. Family size and independence
// ---------------------------------------------------------------------------

// At every valid level q <= 10^3 the series family must contain exactly
// (h-1)/2 members, pairwise distinct by exact comparison and of full
// numerical rank over the first 500 coefficients.
Outcome family_size_and_rank(int threads) {
  constexpr i64 kColumns = 500;
  const std::vector<i64> levels = valid_levels(1000);

  struct Slot {
    bool ok = true;
    i64 size = 0;
    std::string msg;
  };
  std::vector<Slot> slots(levels.size());

  parallel_for(static_cast<i64>(levels.size()), threads, [&](i64 idx) {
    const i64 q = levels[static_cast<size_t>(idx)];
    Slot& s = slots[static_cast<size_t>(idx)];
    const auto group = ClassGroup::create(q);
    const i64 expected = (group->h() - 1) / 2;
    const std::vector<ThetaSeries> basis = dihedral_basis(group, kColumns);
    s.size = static_cast<i64>(basis.size());
    if (s.size != expected) {
      s.ok = false;
      s.msg = "q=" + std::to_string(q) + ": family has " + std::to_string(s.size) +
              " members, expected " + std::to_string(expected);
      return;
    }
    const BasisReport rep = basis_independence_report(basis, kColumns);
    if (!rep.pairwise_distinct || !rep.independent) {
      s.ok = false;
      s.msg = "q=" + std::to_string(q) +
              (rep.pairwise_distinct
                   ? ": rank " + std::to_string(rep.rank) + " < " + std::to_string(s.size)
                   : ": members " + std::to_string(rep.first_equal_i) + " and " +
                         std::to_string(rep.first_equal_j) + " coincide");
    }
  });

  i64 total = 0, largest = 0;
  for (const Slot& s : slots) {
    if (!s.ok) return {false, s.msg};
    total += s.size;
    largest = std::max(largest, s.size);
  }
  return {true, std::to_string(levels.size()) + " levels: " + std::to_string(total) +
                    " series total (largest family " + std::to_string(largest) +
                    "), every family independent"};
}

// ---------------------------------------------------------------------------
// 6. Second moment equals one
// ---------------------------------------------------------------------------

// Empirically: for each character at levels 23, 31, 47 the mean of c_p^2
// over all primes p <= 10^6 (ramified prime included, c_q = 1 since the
// class number is odd) must land within 0.05 of 1.  Exactly: for every
// non-real character at every valid level q <= 10^3 (class numbers h <= 200)
// the theoretical second-moment sum over classes must equal 2h in the
// cyclotomic ring, i.e. the distribution's second moment is exactly 1.
Outcome second_moment_is_one(int threads) {
  constexpr i64 kPrimeBound = 1000000;
  const std::vector<i64> empirical_levels = {23, 31, 47};

  struct Slot {
    bool ok = true;
    long double worst = 0;
    std::string msg;
  };
  std::vector<Slot> slots(empirical_levels.size());

  parallel_for(static_cast<i64>(empirical_levels.size()), threads, [&](i64 idx) {
    const i64 q = empirical_levels[static_cast<size_t>(idx)];
    Slot& s = slots[static_cast<size_t>(idx)];
    const auto group = ClassGroup::create(q);
    const SplitTable table(group, kPrimeBound);
    const long double total_primes = static_cast<long double>(table.primes().size());
    const auto chars = all_characters(group);
    for (const auto& [i, j] : conjugate_pairs(chars)) {
      const EmpiricalMeasure mu = empirical_mu(chars[static_cast<size_t>(i)], table);
      long double sum = 1;  // the ramified prime contributes c_q^2 = 1
      for (const auto& [v, count] : mu.counts) {
        sum += static_cast<long double>(count) * v.value() * v.value();
      }
      const long double gap = std::fabs(sum / total_primes - 1);
      s.worst = std::max(s.worst, gap);
      if (gap > 0.05L) {
        s.ok = false;
        s.msg = "q=" + std::to_string(q) + " psi=" + std::to_string(i) +
                ": second moment off by " + fmt(gap);
        return;
      }
    }
  });

  long double worst = 0;
  for (const Slot& s : slots) {
    if (!s.ok) return {false, s.msg};
    worst = std::max(worst, s.worst);
  }

  i64 exact_chars = 0;
  for (i64 q : valid_levels(1000)) {
    const auto group = ClassGroup::create(q);
    if (group->h() > 200) continue;  // exact sweep covers class numbers up to 200
    for (const ClassCharacter& psi : all_characters(group)) {
      if (psi.is_real()) continue;
      const Cyclo s2 = theoretical_moment_sum(psi, 2);
      if (!s2.is_integer() || s2.integer_value() != 2 * group->h()) {
        return {false, "q=" + std::to_string(q) + ": exact second-moment sum is " + s2.str() +
                           ", expected " + std::to_string(2 * group->h())};
      }
      ++exact_chars;
    }
  }
  return {true, "empirical gap <= " + fmt(worst) + " at p<=10^6; exact sum = 2h for " +
                    std::to_string(exact_chars) + " characters"};
}

// ---------------------------------------------------------------------------
// 7. Zero density matches the class-group prediction
// ---------------------------------------------------------------------------

// For each character at levels 23, 31, 47: the predicted density of primes
// with c_p = 0 must be exactly 1/2 (the character order is odd, so no
// order-4 correction applies), and the observed fraction over p <= 10^6 must
// sit within 0.01 of it.
Outcome zero_density_matches_prediction(int threads) {
  constexpr i64 kPrimeBound = 1000000;
  const std::vector<i64> levels = {23, 31, 47};

  struct Slot {
    bool ok = true;
    long double worst = 0;
    std::string msg;
  };
  std::vector<Slot> slots(levels.size());

  parallel_for(static_cast<i64>(levels.size()), threads, [&](i64 idx) {
    const i64 q = levels[static_cast<size_t>(idx)];
    Slot& s = slots[static_cast<size_t>(idx)];
    const auto group = ClassGroup::create(q);
    const SplitTable table(group, kPrimeBound);
    const auto chars = all_characters(group);
    for (const auto& [i, j] : conjugate_pairs(chars)) {
      const ClassCharacter& psi = chars[static_cast<size_t>(i)];
      const ZeroDensityReport rep = zero_density(psi, table);
      if (psi.order() % 4 != 0 && !(rep.theoretical == Rational(1, 2))) {
        s.ok = false;
        s.msg = "q=" + std::to_string(q) + " psi=" + std::to_string(i) +
                ": predicted density " + rep.theoretical.str() + ", expected 1/2";
        return;
      }
      s.worst = std::max(s.worst, rep.gap());
      if (rep.gap() > 0.01L) {
        s.ok = false;
        s.msg = "q=" + std::to_string(q) + " psi=" + std::to_string(i) +
                ": observed zero fraction off by " + fmt(rep.gap());
        return;
      }
    }
  });

  long double worst = 0;
  for (const Slot& s : slots) {
    if (!s.ok) return {false, s.msg};
    worst = std::max(worst, s.worst);
  }
  return {true, "predicted density exactly 1/2, observed within " + fmt(worst) + " at p<=10^6"};
}

// ---------------------------------------------------------------------------
// 8. Nonvanishing count exponent
// ---------------------------------------------------------------------------

// The count of nonzero coefficients up to x should grow like C x/(log x)^beta
// with beta = 1/2 at level 23.  Fit beta over checkpoints up to 10^7 and
// require the estimate within 0.15 of 1/2 (slow logarithmic convergence
// makes a tighter bound unreasonable at this range).
Outcome nonvanishing_count_exponent(int threads) {
  (void)threads;
  constexpr i64 kLimit = 10000000;
  const auto group = ClassGroup::create(23);
  const auto chars = all_characters(group);
  const int rep_index = conjugate_pairs(chars).front().first;
  const NonvanishingCount rep =
      count_nonzero(chars[static_cast<size_t>(rep_index)], kLimit);
  const double gap = std::fabs(rep.fitted_exponent - 0.5);
  if (gap > 0.15) {
    return {false, "fitted exponent " + fmt(rep.fitted_exponent) + " vs 1/2 (off by " +
                       fmt(gap) + ") at x=10^7"};
  }
  return {true, "fitted exponent " + fmt(rep.fitted_exponent) + " vs 1/2 at x=10^7, " +
                    std::to_string(rep.counts.back()) + " nonzero coefficients"};
}

// ---------------------------------------------------------------------------
// 9. Sawtooth identity holds at exactly the exceptional orders
// ---------------------------------------------------------------------------

// The divisor-count identity D_6 - D_4 - D_1 = 1 in the eigenvalue-ratio
// order is required to hold for orders {1, 2, 3, 5} and fail for every other
// order up to 12.  The exact cyclotomic evaluation decides each order.
Outcome sawtooth_identity_exceptional_orders(int threads) {
  (void)threads;
  const std::set<i64> expected_true = {1, 2, 3, 5};
  std::string mismatches;
  for (i64 order = 1; order <= 12; ++order) {
    const IcosahedralCheck check = verify_icosahedral_identity(order);
    const bool want = expected_true.count(order) > 0;
    if (check.holds != want) {
      if (!mismatches.empty()) mismatches += "; ";
      mismatches += "order " + std::to_string(order) + ": identity " +
                    (check.holds ? "holds (value " + check.value.str() + ")"
                                 : "fails (value " + check.value.str() + ")") +
                    ", required to " + (want ? "hold" : "fail");
    }
  }
  if (!mismatches.empty()) return {false, mismatches};
  return {true, "holds at orders 1, 2, 3, 5 and fails at 4, 6..12, as required"};
}

// ---------------------------------------------------------------------------
// 10. Randomized trace relations hit their guaranteed value
// ---------------------------------------------------------------------------

// One hundred random exact trace sets (size <= 6, entries roots-of-unity
// sums): the linearized relation built from each set must evaluate to its
// guaranteed value on every eigenvalue pair whose trace lies in the set.
// Run through the experiment driver so the check covers the same path the
// command-line front end uses.
Outcome random_relations_guaranteed_value(int threads) {
  RunConfig config;
  config.command = "relations";
  config.set = "random";
  config.trials = 100;
  config.threads = threads;
  const RunResult result = run_experiment(config);
  const bool all_exact = result.text.find("# exact on 100/100 trials") != std::string::npos;
  if (!result.ok || !all_exact) {
    const size_t at = result.text.find("false");
    std::string row;
    if (at != std::string::npos) {
      const size_t start = result.text.rfind('\n', at) + 1;
      row = result.text.substr(start, result.text.find('\n', at) - start);
    }
    return {false, "a relation missed its guaranteed value" + (row.empty() ? "" : ": " + row)};
  }
  return {true, "100 random trace sets, relation exact on every matching eigenvalue pair"};
}

// ---------------------------------------------------------------------------
// 11. Pooled moments converge to the semicircle targets
// ---------------------------------------------------------------------------

// Pooling the exact per-character distributions over all levels up to
// Q_max = 10^3, 10^4, 10^5: the second and fourth moments must land within
// 0.05 and 0.15 of the limiting values 1 and 3, and the distance to those
// targets must not grow as Q_max increases.
Outcome pooled_moments_converge(int threads) {
  const std::vector<i64> scales = {1000, 10000, 100000};
  std::vector<long double> m2, m4;
  for (i64 q_max : scales) {
    const RealAtomicMeasure mu = averaged_measure(q_max, 0, threads);
    m2.push_back(mu.moment(2));
    m4.push_back(mu.moment(4));
  }
  std::string trail2 = fmt(m2[0]), trail4 = fmt(m4[0]);
  for (size_t i = 1; i < m2.size(); ++i) {
    trail2 += " -> " + fmt(m2[i]);
    trail4 += " -> " + fmt(m4[i]);
  }
  if (std::fabs(m2.back() - 1) > 0.05L || std::fabs(m4.back() - 3) > 0.15L) {
    return {false, "at Q_max=10^5: m2 = " + fmt(m2.back()) + ", m4 = " + fmt(m4.back())};
  }
  constexpr long double kSlack = 1e-12L;  // exact-arithmetic pools may tie
  for (size_t i = 0; i + 1 < m2.size(); ++i) {
    if (std::fabs(m2[i + 1] - 1) > std::fabs(m2[i] - 1) + kSlack ||
        std::fabs(m4[i + 1] - 3) > std::fabs(m4[i] - 3) + kSlack) {
      return {false, "moment drifts away from target: m2 " + trail2 + ", m4 " + trail4};
    }
  }
  return {true, "m2: " + trail2 + "; m4: " + trail4 + " (targets 1 and 3)"};
}

// ---------------------------------------------------------------------------
// 12. Dimension growth exponent
// ---------------------------------------------------------------------------

// Across all valid levels up to 10^5, the least-squares slope of log h
// against log q must land in [0.4, 0.6] — the family dimension (h-1)/2 grows
// like a square root, as the class number bound predicts.
Outcome dimension_growth_exponent(int threads) {
  const DimensionScan scan = dimension_scan(100000, threads);
  if (scan.slope < 0.4 || scan.slope > 0.6) {
    return {false, "fitted slope " + fmt(scan.slope) + " outside [0.4, 0.6] over " +
                       std::to_string(scan.rows.size()) + " levels"};
  }
  return {true, "fitted slope " + fmt(scan.slope) + " over " +
                    std::to_string(scan.rows.size()) + " levels up to 10^5"};
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* name;
  Outcome (*fn)(int);
  double budget_seconds;  // 0 = bounded only by the ctest timeout
};

constexpr Criterion kCriteria[] = {
    {"class numbers match the analytic formula", class_numbers_match_analytic_formula, 300},
    {"coefficients match the direct ideal count", coefficients_match_ideal_count, 120},
    {"multiplicative identities hold exactly", multiplicative_identities_exact, 0},
    {"prime values bounded by two", prime_values_bounded_by_two, 0},
    {"family size and rank", family_size_and_rank, 0},
    {"second moment equals one", second_moment_is_one, 0},
    {"zero density matches the prediction", zero_density_matches_prediction, 0},
    {"nonvanishing count exponent", nonvanishing_count_exponent, 600},
    {"sawtooth identity at exceptional orders", sawtooth_identity_exceptional_orders, 0},
    {"random relations hit the guaranteed value", random_relations_guaranteed_value, 0},
    {"pooled moments converge", pooled_moments_converge, 0},
    {"dimension growth exponent", dimension_growth_exponent, 600},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  int threads = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--threads" && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: theta1_acceptance [--only K] [--threads T]\n");
      return 2;
    }
  }
  constexpr int kCount = static_cast<int>(std::size(kCriteria));
  if (only < 0 || only > kCount || threads < 1 || threads > 64) {
    std::fprintf(stderr, "--only expects 1..%d, --threads expects 1..64\n", kCount);
    return 2;
  }

  int failures = 0;
  for (int k = 1; k <= kCount; ++k) {
    if (only != 0 && k != only) continue;
    const Criterion& c = kCriteria[k - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.fn(threads);
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      out.pass = false;
      out.detail += " [exceeded the " + std::to_string(static_cast<int>(c.budget_seconds)) +
                    "s budget]";
    }
    std::printf("[%2d/%d] %s  %s -- %s (%.1fs)\n", k, kCount, out.pass ? "PASS" : "FAIL",
                c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}

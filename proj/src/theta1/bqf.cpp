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

#include "theta1/bqf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "theta1/errors.hpp"

namespace theta1 {

bool QuadraticForm::operator<(const QuadraticForm& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::string QuadraticForm::str() const {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

bool is_reduced(const QuadraticForm& f) {
  if (!(-f.a < f.b && f.b <= f.a && f.a <= f.c)) return false;
  if (f.a == f.c && f.b < 0) return false;
  return true;
}

QuadraticForm reduce(QuadraticForm f) {
  if (f.a <= 0 || f.discriminant() >= 0) {
    throw domain_error("reduce: form must be positive definite (a > 0, discriminant < 0)");
  }
  while (true) {
    // Normalize b into (-a, a].
    if (f.b > f.a || f.b <= -f.a) {
      const i64 b_new = mod_floor(f.b + f.a - 1, 2 * f.a) - f.a + 1;
      const i64 k = (f.b - b_new) / (2 * f.a);
      f.c += f.a * k * k - f.b * k;
      f.b = b_new;
    }
    if (f.a > f.c) {
      // rho step: (a, b, c) -> (c, -b, a), then renormalize.
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

QuadraticForm compose(QuadraticForm f, QuadraticForm g) {
  if (f.discriminant() != g.discriminant()) {
    throw domain_error("compose: forms must share one discriminant");
  }
  if (std::gcd(std::gcd(f.a, f.b), f.c) != 1 || std::gcd(std::gcd(g.a, g.b), g.c) != 1) {
    throw domain_error("compose: forms must be primitive");
  }
  f = reduce(f);
  g = reduce(g);
  // Cohen, Algorithm 5.4.7.  Notation: f = (a1, b1, c1), g = (a2, b2, c2)
  // with a1 <= a2.
  if (f.a > g.a) std::swap(f, g);
  const i64 s = (f.b + g.b) / 2;
  const i64 n = g.b - s;

  i64 y1, d;
  if (g.a % f.a == 0) {
    y1 = 0;
    d = f.a;
  } else {
    const Bezout e = ext_gcd(g.a, f.a);  // u*a2 + v*a1 = d
    y1 = e.u;
    d = e.g;
  }

  i64 x2, y2, d1;
  if (s % d == 0) {
    x2 = 0;
    y2 = -1;
    d1 = d;
  } else {
    const Bezout e = ext_gcd(s, d);  // u*s + v*d = d1
    x2 = e.u;
    y2 = -e.v;
    d1 = e.g;
  }

  const i64 v1 = f.a / d1;
  const i64 v2 = g.a / d1;
  // r = (y1*y2*n - x2*c2) mod v1, in 128-bit to avoid overflow.
  const i128 num = static_cast<i128>(y1) * y2 % v1 * n - static_cast<i128>(x2) * g.c;
  i64 r = static_cast<i64>(((num % v1) + v1) % v1);

  QuadraticForm out;
  out.a = v1 * v2;
  out.b = g.b + 2 * v2 * r;
  out.c = (g.c * d1 + r * (g.b + v2 * r)) / v1;
  return reduce(out);
}

QuadraticForm form_inverse(const QuadraticForm& f) { return reduce({f.a, -f.b, f.c}); }

void require_valid_level(i64 q) {
  if (q < 3 || q % 4 != 3) {
    throw domain_error("level " + std::to_string(q) + " must be a prime with q = 3 (mod 4)");
  }
  if (!is_prime(q)) {
    throw domain_error("level " + std::to_string(q) + " must be prime");
  }
}

namespace {

// Calls visit(a, b, c) for every reduced form of discriminant -q.
template <typename Visitor>
void scan_reduced_forms(i64 q, Visitor&& visit) {
  const i64 a_max = isqrt(q / 3);
  for (i64 a = 1; a <= a_max; ++a) {
    // b odd, -a < b <= a, with 4a | b^2 + q and c = (b^2+q)/(4a) >= a.
    for (i64 b = (a % 2 == 0) ? -a + 1 : -a + 2; b <= a; b += 2) {
      const i64 t = b * b + q;
      if (t % (4 * a) != 0) continue;
      const i64 c = t / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      visit(a, b, c);
    }
  }
}

}  // namespace

i64 class_number(i64 q) {
  require_valid_level(q);
  i64 h = 0;
  scan_reduced_forms(q, [&h](i64, i64, i64) { ++h; });
  return h;
}

ClassGroup::ClassGroup(i64 q) : q_(q) {
  enumerate_forms();
  build_structure();
}

std::shared_ptr<const ClassGroup> ClassGroup::create(i64 q) {
  require_valid_level(q);
  return std::shared_ptr<const ClassGroup>(new ClassGroup(q));
}

void ClassGroup::enumerate_forms() {
  scan_reduced_forms(q_, [this](i64 a, i64 b, i64 c) { forms_.push_back({a, b, c}); });
  std::sort(forms_.begin(), forms_.end());
  check_internal(!forms_.empty() && forms_[0] == QuadraticForm{1, 1, (1 + q_) / 4},
                 "ClassGroup: principal form must sort first");
  check_internal(h() % 2 == 1, "ClassGroup: class number of a prime discriminant must be odd");
  inverse_.resize(forms_.size());
  for (size_t i = 0; i < forms_.size(); ++i) {
    const int inv = index_of(form_inverse(forms_[i]));
    check_internal(inv >= 0, "ClassGroup: inverse form missing from enumeration");
    inverse_[i] = inv;
  }
}

const QuadraticForm& ClassGroup::form(int index) const {
  if (index < 0 || index >= static_cast<int>(forms_.size())) {
    throw domain_error("ClassGroup::form: index out of range");
  }
  return forms_[static_cast<size_t>(index)];
}

int ClassGroup::index_of(const QuadraticForm& f) const {
  const auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it == forms_.end() || !(*it == f)) return -1;
  return static_cast<int>(it - forms_.begin());
}

int ClassGroup::inverse_index(int index) const {
  form(index);  // range check
  return inverse_[static_cast<size_t>(index)];
}

int ClassGroup::compose_indices(int i, int j) const {
  const int out = index_of(compose(form(i), form(j)));
  check_internal(out >= 0, "ClassGroup: composition left the form list");
  return out;
}

int ClassGroup::power_index(int base, i64 exponent) const {
  form(base);  // range check
  if (exponent < 0) {
    base = inverse_[static_cast<size_t>(base)];
    exponent = -exponent;
  }
  int acc = principal_index();
  int sq = base;
  while (exponent > 0) {
    if (exponent & 1) acc = compose_indices(acc, sq);
    exponent >>= 1;
    if (exponent > 0) sq = compose_indices(sq, sq);
  }
  return acc;
}

const std::vector<i64>& ClassGroup::dlog(int index) const {
  form(index);  // range check
  return dlog_[static_cast<size_t>(index)];
}

namespace {

// Smith normal form of a square nonsingular integer matrix.  Only column
// operations need mirroring: V accumulates them (result = input * V-ops) and
// Vinv accumulates their inverses, so V * Vinv = identity throughout.
struct SmithResult {
  std::vector<std::vector<i64>> d;     // diagonalized matrix
  std::vector<std::vector<i64>> v;     // accumulated column operations
  std::vector<std::vector<i64>> vinv;  // inverse of v
};

SmithResult smith_normal_form(std::vector<std::vector<i64>> m) {
  const int n = static_cast<int>(m.size());
  SmithResult res;
  res.d = std::move(m);
  res.v.assign(static_cast<size_t>(n), std::vector<i64>(static_cast<size_t>(n), 0));
  res.vinv = res.v;
  for (int i = 0; i < n; ++i) {
    res.v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    res.vinv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  }
  auto& d = res.d;

  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(d[static_cast<size_t>(r)][static_cast<size_t>(i)], d[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    for (int r = 0; r < n; ++r) std::swap(res.v[static_cast<size_t>(r)][static_cast<size_t>(i)], res.v[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    std::swap(res.vinv[static_cast<size_t>(i)], res.vinv[static_cast<size_t>(j)]);
  };
  auto col_negate = [&](int i) {
    for (int r = 0; r < n; ++r) d[static_cast<size_t>(r)][static_cast<size_t>(i)] = -d[static_cast<size_t>(r)][static_cast<size_t>(i)];
    for (int r = 0; r < n; ++r) res.v[static_cast<size_t>(r)][static_cast<size_t>(i)] = -res.v[static_cast<size_t>(r)][static_cast<size_t>(i)];
    for (int c = 0; c < n; ++c) res.vinv[static_cast<size_t>(i)][static_cast<size_t>(c)] = -res.vinv[static_cast<size_t>(i)][static_cast<size_t>(c)];
  };
  // column j += k * column i  (so row i of vinv -= k * row j)
  auto col_add = [&](int j, int i, i64 k) {
    if (k == 0) return;
    for (int r = 0; r < n; ++r) d[static_cast<size_t>(r)][static_cast<size_t>(j)] += k * d[static_cast<size_t>(r)][static_cast<size_t>(i)];
    for (int r = 0; r < n; ++r) res.v[static_cast<size_t>(r)][static_cast<size_t>(j)] += k * res.v[static_cast<size_t>(r)][static_cast<size_t>(i)];
    for (int c = 0; c < n; ++c) res.vinv[static_cast<size_t>(i)][static_cast<size_t>(c)] -= k * res.vinv[static_cast<size_t>(j)][static_cast<size_t>(c)];
  };
  auto row_swap = [&](int i, int j) { std::swap(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]); };
  // row j -= k * row i; row operations only recombine relations.
  auto row_sub = [&](int j, int i, i64 k) {
    if (k == 0) return;
    for (int c = 0; c < n; ++c) d[static_cast<size_t>(j)][static_cast<size_t>(c)] -= k * d[static_cast<size_t>(i)][static_cast<size_t>(c)];
  };

  for (int t = 0; t < n; ++t) {
    for (int guard = 0;; ++guard) {
      check_internal(guard < 10000, "smith_normal_form: no convergence");
      // Move a minimal nonzero entry of the trailing submatrix to (t, t).
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i) {
        for (int j = t; j < n; ++j) {
          const i64 x = d[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (x == 0) continue;
          if (pi < 0 || std::abs(x) < std::abs(d[static_cast<size_t>(pi)][static_cast<size_t>(pj)])) {
            pi = i;
            pj = j;
          }
        }
      }
      check_internal(pi >= 0, "smith_normal_form: singular matrix");
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      const i64 pivot = d[static_cast<size_t>(t)][static_cast<size_t>(t)];

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        const i64 x = d[static_cast<size_t>(i)][static_cast<size_t>(t)];
        row_sub(i, t, x / pivot);
        if (d[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        const i64 x = d[static_cast<size_t>(t)][static_cast<size_t>(j)];
        col_add(j, t, -(x / pivot));
        if (d[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility pass: the pivot must divide the whole submatrix.
      bool divides = true;
      for (int i = t + 1; i < n && divides; ++i) {
        for (int j = t + 1; j < n && divides; ++j) {
          if (d[static_cast<size_t>(i)][static_cast<size_t>(j)] % pivot != 0) {
            col_add(t, j, 1);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (d[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) col_negate(t);
  }
  return res;
}

}  // namespace

void ClassGroup::build_structure() {
  const int n = static_cast<int>(forms_.size());

  // Incremental subgroup closure.  found[i] is the exponent vector of form i
  // over the generators picked so far; relations[t] records the minimal power
  // of generator t that falls back into the previous subgroup.
  std::vector<int> gen_raw;
  std::vector<std::vector<i64>> relations;
  std::vector<std::vector<i64>> found(static_cast<size_t>(n));
  std::vector<char> known(static_cast<size_t>(n), 0);
  std::vector<int> members{principal_index()};
  known[static_cast<size_t>(principal_index())] = 1;

  while (static_cast<int>(members.size()) < n) {
    int g = -1;
    for (int i = 0; i < n; ++i) {
      if (!known[static_cast<size_t>(i)]) {
        g = i;
        break;
      }
    }
    const int t = static_cast<int>(gen_raw.size());
    gen_raw.push_back(g);
    for (auto& v : found) v.resize(static_cast<size_t>(t) + 1, 0);

    // Find the minimal m >= 1 with g^m in the current subgroup.
    i64 m = 0;
    int pw = g;
    std::vector<int> powers;  // g^1 .. g^m
    for (i64 e = 1;; ++e) {
      powers.push_back(pw);
      if (known[static_cast<size_t>(pw)]) {
        m = e;
        break;
      }
      pw = compose_indices(pw, g);
    }
    // Relation row: g_t^m = product of earlier generators^v  =>
    // (-v_0, ..., -v_{t-1}, m) annihilates (g_0, ..., g_t).
    std::vector<i64> row(static_cast<size_t>(t) + 1, 0);
    const std::vector<i64>& v = found[static_cast<size_t>(powers.back())];
    for (int j = 0; j < t; ++j) row[static_cast<size_t>(j)] = -v[static_cast<size_t>(j)];
    row[static_cast<size_t>(t)] = m;
    for (auto& r : relations) r.resize(static_cast<size_t>(t) + 1, 0);
    relations.push_back(row);

    // Extend the subgroup by the cosets g^e * H, 1 <= e < m.
    const std::vector<int> base = members;
    for (i64 e = 1; e < m; ++e) {
      const int ge = powers[static_cast<size_t>(e - 1)];
      for (int s : base) {
        const int x = compose_indices(ge, s);
        check_internal(!known[static_cast<size_t>(x)], "ClassGroup: coset overlap during closure");
        known[static_cast<size_t>(x)] = 1;
        members.push_back(x);
        found[static_cast<size_t>(x)] = found[static_cast<size_t>(s)];
        found[static_cast<size_t>(x)][static_cast<size_t>(t)] = e;
      }
    }
  }

  if (gen_raw.empty()) {
    dlog_.assign(1, {});
    return;
  }

  // Smith normal form turns the relation matrix into independent cyclic
  // factors: new exponent vectors are x * V, new generators come from the
  // rows of V^{-1}.
  const int r = static_cast<int>(gen_raw.size());
  SmithResult snf = smith_normal_form(relations);

  std::vector<int> keep;  // positions with divisor > 1
  for (int i = 0; i < r; ++i) {
    const i64 di = snf.d[static_cast<size_t>(i)][static_cast<size_t>(i)];
    check_internal(di >= 1, "ClassGroup: nonpositive elementary divisor");
    if (di > 1) keep.push_back(i);
  }
  for (int i : keep) divisors_.push_back(snf.d[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  for (size_t i = 1; i < divisors_.size(); ++i) {
    check_internal(divisors_[i] % divisors_[i - 1] == 0, "ClassGroup: divisors must form a chain");
  }
  exponent_ = divisors_.empty() ? 1 : divisors_.back();

  for (int pos : keep) {
    int gen = principal_index();
    for (int j = 0; j < r; ++j) {
      const i64 e = snf.vinv[static_cast<size_t>(pos)][static_cast<size_t>(j)];
      if (e != 0) gen = compose_indices(gen, power_index(gen_raw[static_cast<size_t>(j)], e));
    }
    generators_.push_back(gen);
  }

  dlog_.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    std::vector<i64> y;
    y.reserve(keep.size());
    for (size_t kk = 0; kk < keep.size(); ++kk) {
      const int pos = keep[kk];
      i64 acc = 0;
      for (int j = 0; j < r; ++j) {
        acc += found[static_cast<size_t>(i)][static_cast<size_t>(j)] * snf.v[static_cast<size_t>(j)][static_cast<size_t>(pos)];
      }
      y.push_back(mod_floor(acc, divisors_[kk]));
    }
    dlog_[static_cast<size_t>(i)] = std::move(y);
  }
}

PrimeClass prime_ideal_class(i64 p, const ClassGroup& G) {
  if (p < 2 || !is_prime(p)) throw domain_error("prime_ideal_class: p must be prime");
  const i64 q = G.q();
  PrimeClass out;
  if (p == q) {
    out.type = Splitting::kRamified;
    out.index = G.index_of(reduce({q, q, (q + 1) / 4}));
    out.conj_index = out.index;
    check_internal(out.index >= 0, "prime_ideal_class: ramified form not found");
    return out;
  }
  if (kronecker(-q, p) != 1) {
    out.type = Splitting::kInert;
    return out;
  }
  out.type = Splitting::kSplit;
  i64 b;
  if (p == 2) {
    b = 1;  // q = 7 (mod 8) here, so (1 + q)/8 is integral
  } else {
    const i64 a = mod_floor(-q, p);
    const auto root = sqrt_mod(a, p);
    check_internal(root.has_value(), "prime_ideal_class: split prime without square root");
    b = (*root % 2 != 0) ? *root : p - *root;  // odd square root of -q mod 4p
  }
  const i64 c = (b * b + q) / (4 * p);
  check_internal((b * b + q) % (4 * p) == 0, "prime_ideal_class: form is not integral");
  out.index = G.index_of(reduce({p, b, c}));
  check_internal(out.index >= 0, "prime_ideal_class: split form not found");
  out.conj_index = G.inverse_index(out.index);
  return out;
}

SplitTable::SplitTable(std::shared_ptr<const ClassGroup> group, i64 bound)
    : group_(std::move(group)), bound_(bound) {
  primes_ = primes_up_to(bound);
  entries_.reserve(primes_.size());
  for (i64 p : primes_) entries_.push_back(prime_ideal_class(p, *group_));
}

}  // namespace theta1

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

#include "theta1/experiments.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <vector>

#include "theta1/bqf.hpp"
#include "theta1/characters.hpp"
#include "theta1/errors.hpp"
#include "theta1/hecke.hpp"
#include "theta1/stats.hpp"
#include "theta1/theta.hpp"

namespace theta1 {
namespace {

using nlohmann::json;

// %.12g keeps CSV cells byte-stable across runs and thread counts while
// staying well within double precision.
std::string fmt(long double x) {
  const double v = static_cast<double>(x) + 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["q"] = c.q;
  j["qmax"] = c.qmax;
  j["n"] = c.n;
  j["psi"] = c.psi;
  j["out"] = c.out;
  j["format"] = c.format;
  j["threads"] = c.threads;
  j["seed"] = c.seed;
  j["inject_fault"] = c.inject_fault;
  j["shift"] = c.shift;
  j["trials"] = c.trials;
  j["set"] = c.set;
  return j;
}

std::string render(const RunConfig& config, const std::string& csv_body, const json& results) {
  if (config.format == "json") {
    json j;
    j["config"] = config_json(config);
    j["results"] = results;
    return j.dump() + "\n";
  }
  return "# config: " + config_json(config).dump() + "\n" + csv_body;
}

std::string structure_name(const ClassGroup& group) {
  if (group.divisors().empty()) return "C1";
  std::string s;
  for (i64 d : group.divisors()) {
    if (!s.empty()) s += "x";
    s += "C" + std::to_string(d);
  }
  return s;
}

/// The level's characters together with the validated selection: the single
/// index `psi` when >= 0, otherwise one representative per conjugate pair.
struct Selection {
  std::shared_ptr<const ClassGroup> group;
  std::vector<ClassCharacter> chars;
  std::vector<int> indices;
};

Selection select_characters(i64 q, i64 psi) {
  Selection sel;
  sel.group = ClassGroup::create(q);
  sel.chars = all_characters(sel.group);
  if (psi >= 0) {
    if (psi >= sel.group->h()) {
      throw domain_error("psi index " + std::to_string(psi) + " out of range: level " +
                         std::to_string(q) + " has " + std::to_string(sel.group->h()) + " characters");
    }
    if (sel.chars[static_cast<size_t>(psi)].is_real()) {
      throw domain_error("character " + std::to_string(psi) +
                         " is real; its theta series is Eisenstein, not a cusp form");
    }
    sel.indices.push_back(static_cast<int>(psi));
  } else {
    for (const auto& [i, j] : conjugate_pairs(sel.chars)) {
      (void)j;
      sel.indices.push_back(i);
    }
    if (sel.indices.empty()) {
      throw domain_error("level " + std::to_string(q) +
                         " has class number 1: no non-real characters exist");
    }
  }
  return sel;
}

void require_positive(i64 value, const char* what) {
  if (value < 1) throw domain_error(std::string(what) + " must be at least 1");
}

// ---------------------------------------------------------------------------
// classgroup
// ---------------------------------------------------------------------------

RunResult run_classgroup(const RunConfig& config) {
  const auto group = ClassGroup::create(config.q);
  const std::string structure = structure_name(*group);

  std::string csv;
  csv += "# q: " + std::to_string(group->q()) + " discriminant: " + std::to_string(group->discriminant()) +
         " h: " + std::to_string(group->h()) + " structure: " + structure + "\n";
  csv += "index,a,b,c,dlog\n";
  json forms = json::array();
  for (int i = 0; i < group->h(); ++i) {
    const QuadraticForm f = group->form(i);
    std::string dl;
    for (i64 e : group->dlog(i)) {
      if (!dl.empty()) dl += ";";
      dl += std::to_string(e);
    }
    csv += std::to_string(i) + "," + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
           std::to_string(f.c) + "," + dl + "\n";
    forms.push_back({{"index", i}, {"a", f.a}, {"b", f.b}, {"c", f.c}, {"dlog", group->dlog(i)}});
  }

  json results;
  results["q"] = group->q();
  results["discriminant"] = group->discriminant();
  results["h"] = group->h();
  results["divisors"] = group->divisors();
  results["structure"] = structure;
  results["forms"] = forms;

  RunResult out;
  out.text = render(config, csv, results);
  out.message = "q=" + std::to_string(group->q()) + ": h=" + std::to_string(group->h()) +
                ", structure " + structure;
  return out;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

RunResult run_theta(const RunConfig& config) {
  require_positive(config.n, "n");
  const Selection sel = select_characters(config.q, config.psi);

  std::string csv = "psi,n,re,im,exact\n";
  json series = json::array();
  for (int idx : sel.indices) {
    const ThetaSeries theta = theta_coefficients(sel.chars[static_cast<size_t>(idx)], config.n);
    json coeffs = json::array();
    for (i64 n = 1; n <= config.n; ++n) {
      const Cyclo c = theta.coefficient(n);
      const auto z = c.embed();
      csv += std::to_string(idx) + "," + std::to_string(n) + "," + fmt(z.real()) + "," +
             fmt(z.imag()) + "," + c.str() + "\n";
      coeffs.push_back({{"n", n}, {"re", static_cast<double>(z.real()) + 0.0},
                        {"im", static_cast<double>(z.imag()) + 0.0}, {"exact", c.str()}});
    }
    series.push_back({{"psi", idx}, {"coefficients", coeffs}});
  }

  json results;
  results["q"] = config.q;
  results["n"] = config.n;
  results["series"] = series;

  RunResult out;
  out.text = render(config, csv, results);
  out.message = "q=" + std::to_string(config.q) + ": " + std::to_string(sel.indices.size()) +
                " series, coefficients to n=" + std::to_string(config.n);
  return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

RunResult run_verify(const RunConfig& config) {
  require_positive(config.n, "n");
  const Selection sel = select_characters(config.q, config.psi);

  std::string csv = "psi,check,status,detail\n";
  json checks = json::array();
  bool all_ok = true;

  auto add = [&](int psi, const char* check, bool pass, const std::string& detail) {
    csv += std::to_string(psi) + "," + check + "," + (pass ? "pass" : "fail") + "," + detail + "\n";
    checks.push_back({{"psi", psi}, {"check", check}, {"pass", pass}, {"detail", detail}});
    all_ok = all_ok && pass;
  };

  for (int idx : sel.indices) {
    ThetaSeries theta = theta_coefficients(sel.chars[static_cast<size_t>(idx)], config.n);
    if (config.inject_fault >= 0) theta.corrupt_coefficient(config.inject_fault, 1);

    const HeckeReport hecke = verify_hecke(theta);
    const bool power_ok = hecke.ok || hecke.first->kind != HeckeViolation::Kind::kPrimePower;
    const bool product_ok = hecke.ok || hecke.first->kind != HeckeViolation::Kind::kProduct;
    add(idx, "hecke_power_identities", power_ok,
        power_ok ? "checked=" + std::to_string(hecke.power_identities_checked)
                 : "p=" + std::to_string(hecke.first->p) + " k=" + std::to_string(hecke.first->k));
    add(idx, "hecke_products", product_ok,
        product_ok ? "checked=" + std::to_string(hecke.products_checked)
                   : "m=" + std::to_string(hecke.first->m) + " n=" + std::to_string(hecke.first->n));

    const RamanujanReport ram = ramanujan_check(theta);
    add(idx, "prime_bound", ram.prime_bound_ok,
        "max_abs=" + fmt(ram.max_prime_abs) + " argmax_p=" + std::to_string(ram.argmax_prime) +
            " primes=" + std::to_string(ram.primes_checked));
    add(idx, "divisor_bound", ram.divisor_bound_ok,
        ram.divisor_bound_ok
            ? "checked=" + std::to_string(ram.values_checked)
            : "n=" + std::to_string(ram.first_divisor_violation));
  }
  csv += std::string("# overall: ") + (all_ok ? "PASS" : "FAIL") + "\n";

  json results;
  results["q"] = config.q;
  results["n"] = config.n;
  results["checks"] = checks;
  results["overall"] = all_ok ? "PASS" : "FAIL";

  RunResult out;
  out.ok = all_ok;
  out.text = render(config, csv, results);
  out.message = "q=" + std::to_string(config.q) + " n=" + std::to_string(config.n) + ": " +
                std::to_string(sel.indices.size()) + " series, overall " + (all_ok ? "PASS" : "FAIL");
  return out;
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

RunResult run_density(const RunConfig& config) {
  if (config.n < 2) throw domain_error("n (prime bound) must be at least 2");
  const Selection sel = select_characters(config.q, config.psi);
  const SplitTable table(sel.group, config.n);

  std::string csv = "q,psi,beta_theory,beta_hat,N,gap\n";
  json rows = json::array();
  for (int idx : sel.indices) {
    const ZeroDensityReport rep = zero_density(sel.chars[static_cast<size_t>(idx)], table);
    csv += std::to_string(config.q) + "," + std::to_string(idx) + "," + fmt(rep.theoretical.value()) +
           "," + fmt(rep.empirical()) + "," + std::to_string(config.n) + "," + fmt(rep.gap()) + "\n";
    rows.push_back({{"q", config.q},
                    {"psi", idx},
                    {"beta_theory", rep.theoretical.str()},
                    {"beta_hat", static_cast<double>(rep.empirical())},
                    {"N", config.n},
                    {"gap", static_cast<double>(rep.gap())},
                    {"good_primes", rep.good_primes},
                    {"zero_count", rep.zero_count}});
  }

  json results;
  results["rows"] = rows;

  RunResult out;
  out.text = render(config, csv, results);
  out.message = "q=" + std::to_string(config.q) + ": zero densities for " +
                std::to_string(sel.indices.size()) + " series at N=" + std::to_string(config.n);
  return out;
}

// ---------------------------------------------------------------------------
// wirsing
// ---------------------------------------------------------------------------

Rational zero_trace_density(const ClassCharacter& psi) {
  i64 quartic = 0;
  for (int c = 0; c < psi.group().h(); ++c) {
    if (psi.value(c).order() == 4) ++quartic;
  }
  return Rational(1, 2) + Rational(quartic, 2 * psi.group().h());
}

RunResult run_wirsing(const RunConfig& config) {
  const Selection sel = select_characters(config.q, config.psi);

  std::string csv = "psi,x,count,ratio\n";
  std::string summary;
  json series = json::array();
  for (int idx : sel.indices) {
    const ClassCharacter& psi = sel.chars[static_cast<size_t>(idx)];
    const NonvanishingCount rep = count_nonzero(psi, config.n);
    json points = json::array();
    for (size_t i = 0; i < rep.checkpoints.size(); ++i) {
      const long double ratio =
          static_cast<long double>(rep.counts[i]) / static_cast<long double>(rep.checkpoints[i]);
      csv += std::to_string(idx) + "," + std::to_string(rep.checkpoints[i]) + "," +
             std::to_string(rep.counts[i]) + "," + fmt(ratio) + "\n";
      points.push_back({{"x", rep.checkpoints[i]}, {"count", rep.counts[i]}});
    }
    const Rational beta = zero_trace_density(psi);
    summary += "# psi " + std::to_string(idx) + ": fitted_beta=" + fmt(rep.fitted_exponent) +
               " beta_theory=" + fmt(beta.value()) + "\n";
    series.push_back({{"psi", idx},
                      {"fitted_beta", rep.fitted_exponent},
                      {"beta_theory", beta.str()},
                      {"points", points}});
  }

  json results;
  results["q"] = config.q;
  results["limit"] = config.n;
  results["series"] = series;

  RunResult out;
  out.text = render(config, csv + summary, results);
  out.message = "q=" + std::to_string(config.q) + ": nonvanishing counts to " +
                std::to_string(config.n) + " for " + std::to_string(sel.indices.size()) + " series";
  return out;
}

// ---------------------------------------------------------------------------
// dimension
// ---------------------------------------------------------------------------

RunResult run_dimension(const RunConfig& config) {
  const DimensionScan scan = dimension_scan(config.qmax, config.threads);

  std::string csv = "q,h,dih_dim\n";
  json rows = json::array();
  for (const DimensionRow& row : scan.rows) {
    csv += std::to_string(row.q) + "," + std::to_string(row.h) + "," + std::to_string(row.dim) + "\n";
    rows.push_back({{"q", row.q}, {"h", row.h}, {"dih_dim", row.dim}});
  }
  csv += "# fit: slope=" + fmt(scan.slope) + " intercept=" + fmt(scan.intercept) +
         " levels=" + std::to_string(scan.rows.size()) + "\n";

  json results;
  results["qmax"] = config.qmax;
  results["rows"] = rows;
  results["slope"] = scan.slope;
  results["intercept"] = scan.intercept;

  RunResult out;
  out.text = render(config, csv, results);
  out.message = "levels=" + std::to_string(scan.rows.size()) + " slope=" + fmt(scan.slope) +
                " (square-root growth gives 0.5)";
  return out;
}

// ---------------------------------------------------------------------------
// satotate
// ---------------------------------------------------------------------------

RunResult run_satotate(const RunConfig& config) {
  if (config.n < 0) throw domain_error("n (sample bound) must be nonnegative");
  const RealAtomicMeasure mu = averaged_measure(config.qmax, config.n, config.threads);
  const long double m0 = mu.total_mass();
  const long double m2 = mu.moment(2);
  const long double m4 = mu.moment(4);
  const long double m6 = mu.moment(6);

  std::string csv = "Q_max,m0,m2,m4,m6\n";
  csv += std::to_string(config.qmax) + "," + fmt(m0) + "," + fmt(m2) + "," + fmt(m4) + "," +
         fmt(m6) + "\n";

  json atoms = json::array();
  for (const auto& [v, w] : mu.atoms) {
    atoms.push_back(
        {{"k", v.k}, {"d", v.d}, {"value", static_cast<double>(v.value())}, {"mass", static_cast<double>(w)}});
  }
  json results;
  results["qmax"] = config.qmax;
  results["sample_limit"] = config.n;
  results["moments"] = {{"m0", static_cast<double>(m0)},
                        {"m2", static_cast<double>(m2)},
                        {"m4", static_cast<double>(m4)},
                        {"m6", static_cast<double>(m6)}};
  results["atoms"] = atoms;

  RunResult out;
  out.text = render(config, csv, results);
  out.message = "Q_max=" + std::to_string(config.qmax) + ": m2=" + fmt(m2) + " m4=" + fmt(m4) +
                " m6=" + fmt(m6) + " (limit targets 1, 3, 10)";
  return out;
}

// ---------------------------------------------------------------------------
// relations
// ---------------------------------------------------------------------------

RunResult run_relations_icosahedral(const RunConfig& config) {
  std::string csv = "# identity: a(p^12) - a(p^8) - a(p^2) = 1, by eigenvalue ratio order\n";
  csv += "order,holds,value\n";
  json rows = json::array();
  std::string true_orders;
  for (i64 order = 1; order <= 12; ++order) {
    const IcosahedralCheck check = verify_icosahedral_identity(order);
    csv += std::to_string(order) + "," + (check.holds ? "true" : "false") + "," + check.value.str() + "\n";
    rows.push_back({{"order", order}, {"holds", check.holds}, {"value", check.value.str()}});
    if (check.holds) {
      if (!true_orders.empty()) true_orders += ",";
      true_orders += std::to_string(order);
    }
  }

  json results;
  results["identity"] = "a(p^12) - a(p^8) - a(p^2) = 1";
  results["orders"] = rows;

  RunResult out;
  out.text = render(config, csv, results);
  out.message = "identity holds exactly at ratio orders {" + true_orders + "}";
  return out;
}

RunResult run_relations_random(const RunConfig& config) {
  if (config.trials < 1 || config.trials > 100000) {
    throw domain_error("trials must be between 1 and 100000");
  }
  std::mt19937_64 rng(config.seed);
  auto rnd = [&rng](i64 n) { return static_cast<i64>(rng() % static_cast<u64>(n)); };
  constexpr i64 kOrderBound = 120;  // eigenvalue orders divide this

  std::string csv = "trial,set_size,shift,pairs,holds\n";
  json rows = json::array();
  bool all_ok = true;
  i64 holds_count = 0;
  for (i64 trial = 0; trial < config.trials; ++trial) {
    const i64 pair_count = 1 + rnd(6);
    std::vector<UnitEigenPair> pairs;
    std::vector<Cyclo> traces;
    for (i64 i = 0; i < pair_count; ++i) {
      const UnitEigenPair pair{RootOfUnity(rnd(kOrderBound), kOrderBound),
                               RootOfUnity(rnd(kOrderBound), kOrderBound)};
      pairs.push_back(pair);
      const Cyclo t = trace_power(pair, 1, kOrderBound);
      bool seen = false;
      for (const Cyclo& s : traces) seen = seen || s == t;
      if (!seen) traces.push_back(t);
    }
    const i64 shift = 1 + rnd(9);
    const HeckeLinearRelation rel = build_relation(traces, shift);
    bool holds = rel.guaranteed_value.has_value() && *rel.guaranteed_value == shift;
    for (const UnitEigenPair& pair : pairs) {
      const Cyclo v = rel.evaluate(pair);
      holds = holds && v.is_integer() && v.integer_value() == shift;
    }
    csv += std::to_string(trial) + "," + std::to_string(traces.size()) + "," + std::to_string(shift) +
           "," + std::to_string(pair_count) + "," + (holds ? "true" : "false") + "\n";
    rows.push_back({{"trial", trial},
                    {"set_size", traces.size()},
                    {"shift", shift},
                    {"pairs", pair_count},
                    {"holds", holds}});
    all_ok = all_ok && holds;
    if (holds) ++holds_count;
  }
  csv += "# exact on " + std::to_string(holds_count) + "/" + std::to_string(config.trials) + " trials\n";

  json results;
  results["trials"] = rows;
  results["all_exact"] = all_ok;

  RunResult out;
  out.ok = all_ok;
  out.text = render(config, csv, results);
  out.message = "randomized relations: exact on " + std::to_string(holds_count) + "/" +
                std::to_string(config.trials) + " trials";
  return out;
}

RunResult run_relations_custom(const RunConfig& config) {
  // The set is a comma-separated list of fractions k/d; each names the trace
  // 2cos(2pi k/d) realized by the eigenvalue pair (e(k/d), e(-k/d)).
  std::vector<UnitEigenPair> pairs;
  std::vector<Cyclo> traces;
  std::vector<std::string> labels;
  size_t pos = 0;
  while (pos < config.set.size()) {
    size_t comma = config.set.find(',', pos);
    if (comma == std::string::npos) comma = config.set.size();
    const std::string item = config.set.substr(pos, comma - pos);
    pos = comma + 1;
    long long k = 0, d = 0;
    if (std::sscanf(item.c_str(), "%lld/%lld", &k, &d) != 2 || d < 1) {
      throw domain_error("relations set: expected fractions like 1/5 separated by commas, got '" +
                         item + "'");
    }
    const UnitEigenPair pair{RootOfUnity(k, d), RootOfUnity(-k, d)};
    pairs.push_back(pair);
    labels.push_back(item);
    const Cyclo t = trace_power(pair, 1);
    bool seen = false;
    for (const Cyclo& s : traces) seen = seen || s == t;
    if (!seen) traces.push_back(t);
  }
  if (pairs.empty()) throw domain_error("relations set: no traces given");

  const HeckeLinearRelation rel = build_relation(traces, config.shift);
  std::string csv = "# relation: " + rel.str() + "\n";
  csv += "pair,trace,value,holds\n";
  json rows = json::array();
  bool all_ok = true;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const Cyclo v = rel.evaluate(pairs[i]);
    const bool holds = v.is_integer() && v.integer_value() == config.shift;
    csv += std::to_string(i) + "," + labels[i] + "," + v.str() + "," + (holds ? "true" : "false") + "\n";
    rows.push_back({{"pair", i}, {"trace", labels[i]}, {"value", v.str()}, {"holds", holds}});
    all_ok = all_ok && holds;
  }

  json results;
  results["relation"] = rel.str();
  results["shift"] = config.shift;
  results["pairs"] = rows;
  results["all_exact"] = all_ok;

  RunResult out;
  out.ok = all_ok;
  out.text = render(config, csv, results);
  out.message = "custom relation on " + std::to_string(pairs.size()) + " eigenpairs: " +
                (all_ok ? "exact" : "FAILED");
  return out;
}

RunResult run_relations(const RunConfig& config) {
  if (config.set == "icosahedral") return run_relations_icosahedral(config);
  if (config.set == "random") return run_relations_random(config);
  return run_relations_custom(config);
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig serialization
// ---------------------------------------------------------------------------

RunConfig RunConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw domain_error("config must be a JSON object");

  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "command") {
        c.command = value.get<std::string>();
      } else if (key == "q") {
        c.q = value.get<i64>();
      } else if (key == "qmax") {
        c.qmax = value.get<i64>();
      } else if (key == "n") {
        c.n = value.get<i64>();
      } else if (key == "psi") {
        c.psi = value.get<i64>();
      } else if (key == "out") {
        c.out = value.get<std::string>();
      } else if (key == "format") {
        c.format = value.get<std::string>();
      } else if (key == "threads") {
        c.threads = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<u64>();
      } else if (key == "inject_fault") {
        c.inject_fault = value.get<i64>();
      } else if (key == "shift") {
        c.shift = value.get<i64>();
      } else if (key == "trials") {
        c.trials = value.get<i64>();
      } else if (key == "set") {
        c.set = value.get<std::string>();
      } else {
        throw domain_error("unknown config key '" + key + "'");
      }
    }
  } catch (const json::type_error& e) {
    throw domain_error(std::string("config value has the wrong type: ") + e.what());
  }
  return c;
}

std::string RunConfig::to_json() const { return config_json(*this).dump(); }

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

RunResult run_experiment(const RunConfig& config) {
  if (config.format != "csv" && config.format != "json") {
    throw domain_error("format must be csv or json");
  }
  if (config.threads < 1 || config.threads > 64) {
    throw domain_error("threads must be between 1 and 64");
  }

  RunResult result;
  if (config.command == "classgroup") {
    result = run_classgroup(config);
  } else if (config.command == "theta") {
    result = run_theta(config);
  } else if (config.command == "verify") {
    result = run_verify(config);
  } else if (config.command == "density") {
    result = run_density(config);
  } else if (config.command == "wirsing") {
    result = run_wirsing(config);
  } else if (config.command == "dimension") {
    result = run_dimension(config);
  } else if (config.command == "satotate") {
    result = run_satotate(config);
  } else if (config.command == "relations") {
    result = run_relations(config);
  } else {
    throw domain_error("unknown command '" + config.command +
                       "'; expected one of classgroup, theta, verify, density, wirsing, "
                       "dimension, satotate, relations");
  }

  if (!config.out.empty()) {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw resource_error("cannot open output file '" + config.out + "'");
    file << result.text;
    if (!file.good()) throw resource_error("failed writing output file '" + config.out + "'");
  }
  return result;
}

}  // namespace theta1

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
//
// Command-line front end.  Flags are assembled into the JSON configuration
// understood by t1_run, so the CLI depends only on the public C interface;
// every computation and all output formatting happens inside the library.

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta1.h"

namespace {

struct Flags {
  std::int64_t q = 0;
  std::int64_t qmax = 0;
  std::int64_t n = 0;
  std::int64_t psi = -1;
  std::string out;
  std::string format = "csv";
  int threads = 1;
  std::uint64_t seed = 20260816;
  std::int64_t inject_fault = -1;
  std::int64_t shift = 1;
  std::int64_t trials = 100;
  std::string set = "icosahedral";
};

void add_common(CLI::App* cmd, Flags* flags) {
  cmd->add_option("--out", flags->out, "Write the report to this file instead of stdout");
  cmd->add_option("--format", flags->format, "Report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--threads", flags->threads, "Worker threads for scans")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta1: weight-one theta series from imaginary-quadratic class group characters"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* classgroup = app.add_subcommand(
      "classgroup", "Reduced forms, class number, and structure of the class group");
  classgroup->add_option("--q", flags.q, "Level: a prime congruent to 3 mod 4")->required();
  add_common(classgroup, &flags);

  CLI::App* theta = app.add_subcommand("theta", "Theta series coefficients of a character");
  theta->add_option("--q", flags.q, "Level: a prime congruent to 3 mod 4")->required();
  theta->add_option("--psi", flags.psi, "Character index; -1 = one per conjugate pair")
      ->capture_default_str();
  theta->add_option("--n", flags.n, "Largest coefficient index (default 100)");
  add_common(theta, &flags);

  CLI::App* verify = app.add_subcommand(
      "verify", "Exact Hecke recurrences/multiplicativity plus coefficient bounds");
  verify->add_option("--q", flags.q, "Level: a prime congruent to 3 mod 4")->required();
  verify->add_option("--psi", flags.psi, "Character index; -1 = one per conjugate pair")
      ->capture_default_str();
  verify->add_option("--n", flags.n, "Check all identities with indices up to n (default 10000)");
  verify->add_option("--inject-fault", flags.inject_fault,
                     "Corrupt coefficient n before checking (fault-injection demo)")
      ->capture_default_str();
  add_common(verify, &flags);

  CLI::App* density = app.add_subcommand(
      "density", "Vanishing density of prime coefficients against the exact prediction");
  density->add_option("--q", flags.q, "Level: a prime congruent to 3 mod 4")->required();
  density->add_option("--psi", flags.psi, "Character index; -1 = one per conjugate pair")
      ->capture_default_str();
  density->add_option("--n", flags.n, "Prime bound (default 1000000)");
  add_common(density, &flags);

  CLI::App* wirsing = app.add_subcommand(
      "wirsing", "Nonvanishing counts #{n <= x : c_n != 0} and the log-power fit");
  wirsing->add_option("--q", flags.q, "Level: a prime congruent to 3 mod 4")->required();
  wirsing->add_option("--psi", flags.psi, "Character index; -1 = one per conjugate pair")
      ->capture_default_str();
  wirsing->add_option("--n", flags.n, "Count bound, at least 4096 (default 1000000)");
  add_common(wirsing, &flags);

  CLI::App* dimension = app.add_subcommand(
      "dimension", "Class numbers and dihedral dimensions for every level up to a bound");
  dimension->add_option("--qmax", flags.qmax, "Largest level to include")->required();
  add_common(dimension, &flags);

  CLI::App* satotate = app.add_subcommand(
      "satotate", "Prime-coefficient distribution averaged over all levels up to a bound");
  satotate->add_option("--qmax", flags.qmax, "Largest level to include")->required();
  satotate->add_option("--n", flags.n,
                       "Sample primes up to n per character; 0 uses the exact distributions "
                       "(default 0)");
  add_common(satotate, &flags);

  CLI::App* relations = app.add_subcommand(
      "relations", "Linear relations among prime-power eigenvalues from trace sets");
  relations
      ->add_option("--set", flags.set,
                   "icosahedral, random, or trace fractions like 1/5,2/5 (traces 2cos(2pi k/d))")
      ->capture_default_str();
  relations->add_option("--shift", flags.shift, "Guaranteed relation value (nonzero)")
      ->capture_default_str();
  relations->add_option("--trials", flags.trials, "Randomized trials for --set random")
      ->capture_default_str();
  relations->add_option("--seed", flags.seed, "Seed for --set random")->capture_default_str();
  add_common(relations, &flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help/--version; anything else is a usage error
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  if (cmd->get_option_no_throw("--n") != nullptr && cmd->count("--n") == 0) {
    flags.n = name == "theta" ? 100 : name == "verify" ? 10000 : name == "satotate" ? 0 : 1000000;
  }

  nlohmann::json config;
  config["command"] = name;
  config["q"] = flags.q;
  config["qmax"] = flags.qmax;
  config["n"] = flags.n;
  config["psi"] = flags.psi;
  config["out"] = flags.out;
  config["format"] = flags.format;
  config["threads"] = flags.threads;
  config["seed"] = flags.seed;
  config["inject_fault"] = flags.inject_fault;
  config["shift"] = flags.shift;
  config["trials"] = flags.trials;
  config["set"] = flags.set;

  char* text = nullptr;
  const t1_status status = t1_run(config.dump().c_str(), &text);
  if (text != nullptr) {
    if (flags.out.empty()) {
      std::fputs(text, stdout);
    } else {
      std::fprintf(stderr, "report written to %s\n", flags.out.c_str());
    }
    t1_string_free(text);
  }
  if (status == T1_OK) return 0;
  std::fprintf(stderr, "error (%s): %s\n", t1_status_name(status), t1_last_error());
  return status == T1_EDOMAIN ? 2 : 1;
}

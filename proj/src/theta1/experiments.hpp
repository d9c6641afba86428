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
// Named experiments with machine-readable output.  Every run is described by
// a RunConfig (JSON-serializable), executed deterministically, and rendered
// as CSV or JSON text that embeds the full configuration, so any output file
// is reproducible from its own header.

#pragma once

#include <string>

#include "theta1/arith.hpp"

namespace theta1 {

struct RunConfig {
  // One of: classgroup, theta, verify, density, wirsing, dimension,
  // satotate, relations.
  std::string command;

  i64 q = 0;         // level (prime, = 3 mod 4)
  i64 qmax = 0;      // level bound for scans
  i64 n = 0;         // coefficient / prime / sample bound
  i64 psi = -1;      // character index; -1 = every conjugate-pair representative
  std::string out;   // optional output path; empty writes nothing
  std::string format = "csv";  // csv | json
  int threads = 1;
  u64 seed = 20260816;     // randomized relation trials only; logged in output
  i64 inject_fault = -1;   // verify: corrupt coefficient index before checking
  i64 shift = 1;           // relations: the guaranteed value B
  i64 trials = 100;        // relations: number of randomized trials
  std::string set = "icosahedral";  // relations: icosahedral | random | "k/d,k/d,..."

  /// Parses a JSON object; unknown keys and type mismatches are domain
  /// errors so misspelled options fail loudly.
  static RunConfig from_json(const std::string& text);

  /// Canonical single-line JSON (sorted keys, all fields present).
  std::string to_json() const;
};

struct RunResult {
  bool ok = true;       // false when a verification-style command found a failure
  std::string text;     // full CSV or JSON report
  std::string message;  // one human-readable summary line
};

/// Executes the experiment named by config.command.  Invalid configurations
/// throw domain_error; verification failures are reported through ok rather
/// than thrown.  If config.out is nonempty the report text is also written
/// there.  Identical configs produce byte-identical text for every thread
/// count.
RunResult run_experiment(const RunConfig& config);

}  // namespace theta1

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

#include <stdexcept>
#include <string>

namespace theta1 {

/// Invalid mathematical input: a precondition on an argument's value was
/// violated (composite level, even discriminant, index out of range, ...).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested computation exceeds a hard resource limit that the library
/// enforces up front (bound too large, coefficient table would not fit).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed.  This indicates a bug in the
/// library, never bad user input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Throws internal_error when `cond` is false.  Used for invariants that are
/// cheap enough to keep enabled in release builds.
inline void check_internal(bool cond, const char* message) {
  if (!cond) throw internal_error(message);
}

}  // namespace theta1

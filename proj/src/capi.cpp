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

#include "theta1.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "theta1/bqf.hpp"
#include "theta1/characters.hpp"
#include "theta1/errors.hpp"
#include "theta1/experiments.hpp"
#include "theta1/theta.hpp"

struct t1_classgroup {
  std::shared_ptr<const theta1::ClassGroup> impl;
};

struct t1_theta {
  theta1::ThetaSeries series;
};

namespace {

thread_local std::string g_last_error;

t1_status fail(t1_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/// Runs fn, translating the library's exception taxonomy to status codes and
/// clearing the per-thread error on success.
template <typename Fn>
t1_status guarded(Fn&& fn) {
  try {
    const t1_status status = fn();
    if (status == T1_OK) g_last_error.clear();
    return status;
  } catch (const theta1::domain_error& e) {
    return fail(T1_EDOMAIN, e.what());
  } catch (const theta1::resource_error& e) {
    return fail(T1_ERESOURCE, e.what());
  } catch (const theta1::internal_error& e) {
    return fail(T1_EINTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(T1_ERESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(T1_EINTERNAL, std::string("unexpected exception: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* t1_status_name(t1_status status) {
  switch (status) {
    case T1_OK:
      return "T1_OK";
    case T1_EDOMAIN:
      return "T1_EDOMAIN";
    case T1_ERESOURCE:
      return "T1_ERESOURCE";
    case T1_EINTERNAL:
      return "T1_EINTERNAL";
    case T1_EVERIFY:
      return "T1_EVERIFY";
    case T1_EBUFFER:
      return "T1_EBUFFER";
  }
  return "T1_UNKNOWN";
}

const char* t1_version(void) { return "1.0.0"; }

const char* t1_last_error(void) { return g_last_error.c_str(); }

t1_status t1_run(const char* config_json, char** out_text) {
  if (config_json == nullptr || out_text == nullptr) return fail(T1_EDOMAIN, "null argument");
  *out_text = nullptr;
  return guarded([&]() -> t1_status {
    const theta1::RunConfig config = theta1::RunConfig::from_json(config_json);
    const theta1::RunResult result = theta1::run_experiment(config);
    char* buffer = static_cast<char*>(std::malloc(result.text.size() + 1));
    if (buffer == nullptr) return fail(T1_ERESOURCE, "out of memory");
    std::memcpy(buffer, result.text.c_str(), result.text.size() + 1);
    *out_text = buffer;
    if (!result.ok) return fail(T1_EVERIFY, result.message);
    return T1_OK;
  });
}

void t1_string_free(char* text) { std::free(text); }

t1_status t1_classgroup_create(int64_t q, t1_classgroup** out) {
  if (out == nullptr) return fail(T1_EDOMAIN, "null argument");
  *out = nullptr;
  return guarded([&]() -> t1_status {
    auto handle = std::make_unique<t1_classgroup>();
    handle->impl = theta1::ClassGroup::create(q);
    *out = handle.release();
    return T1_OK;
  });
}

void t1_classgroup_free(t1_classgroup* group) { delete group; }

int64_t t1_classgroup_h(const t1_classgroup* group) {
  return group == nullptr ? 0 : group->impl->h();
}

t1_status t1_classgroup_divisors(const t1_classgroup* group, int64_t* out, size_t cap,
                                 size_t* out_count) {
  if (group == nullptr || out_count == nullptr) return fail(T1_EDOMAIN, "null argument");
  const auto& divisors = group->impl->divisors();
  *out_count = divisors.size();
  if (cap < divisors.size() || (out == nullptr && !divisors.empty())) {
    return fail(T1_EBUFFER,
                "need space for " + std::to_string(divisors.size()) + " divisors, have " +
                    std::to_string(cap));
  }
  for (size_t i = 0; i < divisors.size(); ++i) out[i] = divisors[i];
  g_last_error.clear();
  return T1_OK;
}

t1_status t1_classgroup_form(const t1_classgroup* group, int64_t index, int64_t* a, int64_t* b,
                             int64_t* c) {
  if (group == nullptr || a == nullptr || b == nullptr || c == nullptr) {
    return fail(T1_EDOMAIN, "null argument");
  }
  return guarded([&]() -> t1_status {
    if (index < 0 || index >= group->impl->h()) {
      throw theta1::domain_error("class index out of range");
    }
    const theta1::QuadraticForm f = group->impl->form(static_cast<int>(index));
    *a = f.a;
    *b = f.b;
    *c = f.c;
    return T1_OK;
  });
}

t1_status t1_theta_create(const t1_classgroup* group, int64_t psi_index, int64_t n_max,
                          t1_theta** out) {
  if (group == nullptr || out == nullptr) return fail(T1_EDOMAIN, "null argument");
  *out = nullptr;
  return guarded([&]() -> t1_status {
    if (psi_index < 0 || psi_index >= group->impl->h()) {
      throw theta1::domain_error("character index out of range");
    }
    const auto chars = theta1::all_characters(group->impl);
    theta1::ThetaSeries series =
        theta1::theta_coefficients(chars[static_cast<size_t>(psi_index)], n_max);
    *out = new t1_theta{std::move(series)};
    return T1_OK;
  });
}

void t1_theta_free(t1_theta* theta) { delete theta; }

t1_status t1_theta_coefficient(const t1_theta* theta, int64_t n, double* re, double* im) {
  if (theta == nullptr) return fail(T1_EDOMAIN, "null argument");
  return guarded([&]() -> t1_status {
    const auto z = theta->series.coefficient(n).embed();
    if (re != nullptr) *re = static_cast<double>(z.real());
    if (im != nullptr) *im = static_cast<double>(z.imag());
    return T1_OK;
  });
}

t1_status t1_theta_verify(const t1_theta* theta) {
  if (theta == nullptr) return fail(T1_EDOMAIN, "null argument");
  return guarded([&]() -> t1_status {
    const theta1::HeckeReport hecke = theta1::verify_hecke(theta->series);
    if (!hecke.ok) {
      const theta1::HeckeViolation& v = *hecke.first;
      if (v.kind == theta1::HeckeViolation::Kind::kPrimePower) {
        return fail(T1_EVERIFY, "Hecke recurrence violated at p=" + std::to_string(v.p) +
                                    " k=" + std::to_string(v.k));
      }
      return fail(T1_EVERIFY, "multiplicativity violated at m=" + std::to_string(v.m) +
                                  " n=" + std::to_string(v.n));
    }
    const theta1::RamanujanReport ram = theta1::ramanujan_check(theta->series);
    if (!ram.prime_bound_ok) {
      return fail(T1_EVERIFY,
                  "prime coefficient bound violated at p=" + std::to_string(ram.argmax_prime));
    }
    if (!ram.divisor_bound_ok) {
      return fail(T1_EVERIFY, "divisor-count bound violated at n=" +
                                  std::to_string(ram.first_divisor_violation));
    }
    return T1_OK;
  });
}

}  // extern "C"

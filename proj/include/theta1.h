/* Copyright 2026 The theta1 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * C interface to the theta1 library: dihedral weight-one theta series from
 * imaginary-quadratic class group characters, with exact verification and
 * statistics.  All functions are thread-safe; error messages are per-thread.
 */

#ifndef THETA1_H_
#define THETA1_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum t1_status {
  T1_OK = 0,
  T1_EDOMAIN = 1,   /* invalid argument or configuration */
  T1_ERESOURCE = 2, /* resource limit exceeded or I/O failure */
  T1_EINTERNAL = 3, /* a library invariant failed (a bug in theta1) */
  T1_EVERIFY = 4,   /* a verification run completed and found a violation */
  T1_EBUFFER = 5    /* caller-provided buffer too small */
} t1_status;

/* Stable name of a status code, e.g. "T1_EDOMAIN". */
const char* t1_status_name(t1_status status);

/* Library version as "major.minor.patch". */
const char* t1_version(void);

/* Message describing the most recent failure on the calling thread; the
 * empty string when the last call succeeded.  The pointer stays valid until
 * the next theta1 call on the same thread. */
const char* t1_last_error(void);

/* ---------------------------------------------------------------------- */
/* Whole experiments through one JSON-configured entry point               */
/* ---------------------------------------------------------------------- */

/* Runs the experiment described by config_json — the same schema the CLI
 * uses, e.g. {"command":"verify","q":23,"n":10000} — and stores the rendered
 * report in *out_text (release with t1_string_free).  Identical configs
 * yield byte-identical reports for every thread count.  Returns T1_EVERIFY
 * when the run completed but a verification check failed; the report text is
 * still produced in that case. */
t1_status t1_run(const char* config_json, char** out_text);

/* Releases a string returned by t1_run.  NULL is allowed. */
void t1_string_free(char* text);

/* ---------------------------------------------------------------------- */
/* Granular handles                                                        */
/* ---------------------------------------------------------------------- */

typedef struct t1_classgroup t1_classgroup;
typedef struct t1_theta t1_theta;

/* Class group of the imaginary quadratic field of discriminant -q, for q a
 * prime with q = 3 (mod 4).  On success *out owns the handle. */
t1_status t1_classgroup_create(int64_t q, t1_classgroup** out);
void t1_classgroup_free(t1_classgroup* group);

/* Class number h, or 0 for a NULL handle. */
int64_t t1_classgroup_h(const t1_classgroup* group);

/* Invariant factors d_1 | d_2 | ... | d_r of the class group (each > 1;
 * r = 0 for the trivial group).  Always stores the count in *out_count;
 * fills `out` and returns T1_OK when cap >= count, otherwise returns
 * T1_EBUFFER without writing past cap. */
t1_status t1_classgroup_divisors(const t1_classgroup* group, int64_t* out, size_t cap,
                                 size_t* out_count);

/* Reduced quadratic form (a, b, c) representing the class with the given
 * index; index 0 is the principal class. */
t1_status t1_classgroup_form(const t1_classgroup* group, int64_t index, int64_t* a, int64_t* b,
                             int64_t* c);

/* Theta series of the class group character with the given index (in the
 * library's lexicographic enumeration of all h characters; index 0 is the
 * trivial character, which is rejected as real).  Coefficients are computed
 * up to n_max. */
t1_status t1_theta_create(const t1_classgroup* group, int64_t psi_index, int64_t n_max,
                          t1_theta** out);
void t1_theta_free(t1_theta* theta);

/* Complex embedding of the coefficient c_n. re/im may each be NULL. */
t1_status t1_theta_coefficient(const t1_theta* theta, int64_t n, double* re, double* im);

/* Exact Hecke recurrence/multiplicativity verification plus the numerical
 * |c_p| <= 2 and |c_n| <= tau(n) bounds.  T1_OK when every identity holds;
 * T1_EVERIFY with a witness in t1_last_error otherwise. */
t1_status t1_theta_verify(const t1_theta* theta);

#ifdef __cplusplus
}
#endif

#endif /* THETA1_H_ */

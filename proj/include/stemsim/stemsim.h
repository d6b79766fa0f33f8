// Copyright 2026 The stemsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the stemsim library.
 *
 * Objects are opaque handles created by *_new / *_load style functions and
 * released with the matching *_free. Every fallible call returns a
 * stemsim_status; on failure a description of the most recent error on the
 * calling thread is available from stemsim_last_error(). Strings returned
 * through char** out-parameters are heap allocated and must be released with
 * stemsim_string_free().
 *
 * Stem-indexed arrays have 16 entries in row-major (a,b) order with rows and
 * columns in A,C,G,T order.
 */

#ifndef STEMSIM_STEMSIM_H_
#define STEMSIM_STEMSIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STEMSIM_BUILDING_LIBRARY)
#    define STEMSIM_API __declspec(dllexport)
#  else
#    define STEMSIM_API __declspec(dllimport)
#  endif
#else
#  define STEMSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stemsim_status {
  STEMSIM_OK = 0,
  STEMSIM_ERR_INVALID_ARGUMENT = 1,
  STEMSIM_ERR_PARSE = 2,
  STEMSIM_ERR_VALIDATION = 3,
  STEMSIM_ERR_LENGTH_MISMATCH = 4,
  STEMSIM_ERR_ZERO_MARGINAL = 5,
  STEMSIM_ERR_NOT_CONVERGED = 6,
  STEMSIM_ERR_TOO_LARGE = 7,
  STEMSIM_ERR_INVALID_CODE = 8,
  STEMSIM_ERR_IO = 9,
  STEMSIM_ERR_INTERNAL = 10
} stemsim_status;

typedef enum stemsim_rate_regime {
  STEMSIM_RATE_ZERO = 0,
  STEMSIM_RATE_POSITIVE = 1,
  STEMSIM_RATE_INDETERMINATE = 2
} stemsim_rate_regime;

typedef struct stemsim_weights stemsim_weights;
typedef struct stemsim_report stemsim_report;
typedef struct stemsim_code stemsim_code;

STEMSIM_API const char* stemsim_version(void);
STEMSIM_API const char* stemsim_last_error(void);
STEMSIM_API const char* stemsim_status_name(stemsim_status status);
STEMSIM_API void stemsim_string_free(char* s);

/* ---- strands ---------------------------------------------------------- */

/* Writes the reverse complement of `strand` (uppercase) into `out`, which
 * must hold strlen(strand) + 1 bytes. */
STEMSIM_API stemsim_status stemsim_reverse_complement(const char* strand,
                                                      char* out,
                                                      size_t out_size);
STEMSIM_API stemsim_status stemsim_is_self_reverse_complementary(
    const char* strand, int* out);

/* ---- weight tables ---------------------------------------------------- */

/* `name` is a builtin id such as "Unified1998" (case-insensitive). */
STEMSIM_API stemsim_status stemsim_weights_builtin(const char* name,
                                                   stemsim_weights** out);
STEMSIM_API stemsim_status stemsim_weights_load(const char* path,
                                                stemsim_weights** out);
/* "builtin:<id>" or a file path. */
STEMSIM_API stemsim_status stemsim_weights_resolve(const char* source,
                                                   stemsim_weights** out);
STEMSIM_API stemsim_status stemsim_weights_from_grid(const double grid[16],
                                                     double scale,
                                                     const char* name,
                                                     stemsim_weights** out);
STEMSIM_API stemsim_status stemsim_weights_relative(const stemsim_weights* w,
                                                    stemsim_weights** out);
STEMSIM_API void stemsim_weights_free(stemsim_weights* w);
STEMSIM_API stemsim_status stemsim_weights_values(const stemsim_weights* w,
                                                  double grid[16],
                                                  double* scale);
STEMSIM_API const char* stemsim_weights_name(const stemsim_weights* w);
STEMSIM_API stemsim_status stemsim_weights_min(const stemsim_weights* w,
                                               double* out);
STEMSIM_API size_t stemsim_builtin_count(void);
STEMSIM_API const char* stemsim_builtin_name(size_t index);

/* ---- similarity ------------------------------------------------------- */

STEMSIM_API stemsim_status stemsim_similarity(const stemsim_weights* w,
                                              const char* x, const char* y,
                                              double* out);
STEMSIM_API stemsim_status stemsim_distance(const stemsim_weights* w,
                                            const char* x, const char* y,
                                            double* out);
STEMSIM_API stemsim_status stemsim_duplex_energy(const stemsim_weights* w,
                                                 const char* x, const char* y,
                                                 double* out);

/* ---- critical distance ------------------------------------------------ */

STEMSIM_API stemsim_status stemsim_objective(const stemsim_weights* w,
                                             const double p[16], double* out);
/* p must satisfy equal marginals; writes initial[4] and transitions[16]. */
STEMSIM_API stemsim_status stemsim_conditional_model(const double p[16],
                                                     double initial[4],
                                                     double transitions[16]);
STEMSIM_API stemsim_status stemsim_markov_condition(
    const double transitions[16], int* out);

/* tolerance <= 0 selects the default (1e-9). */
STEMSIM_API stemsim_status stemsim_maximize_critical(const stemsim_weights* w,
                                                     double tolerance,
                                                     stemsim_report** out);
STEMSIM_API void stemsim_report_free(stemsim_report* r);
STEMSIM_API double stemsim_report_t_value(const stemsim_report* r);
STEMSIM_API stemsim_status stemsim_report_distribution(const stemsim_report* r,
                                                       double p[16]);
/* Bit i set when stem i is forbidden. */
STEMSIM_API uint16_t stemsim_report_forbidden_mask(const stemsim_report* r);
/* "L4", "L6", "none" or "other". */
STEMSIM_API const char* stemsim_report_forbidden_label(const stemsim_report* r);
STEMSIM_API int stemsim_report_regular(const stemsim_report* r);
STEMSIM_API int stemsim_report_markov_ok(const stemsim_report* r);
STEMSIM_API size_t stemsim_report_iterations(const stemsim_report* r);
STEMSIM_API stemsim_status stemsim_report_to_text(const stemsim_report* r,
                                                  char** out);
STEMSIM_API stemsim_status stemsim_report_to_json(const stemsim_report* r,
                                                  char** out);
STEMSIM_API stemsim_status stemsim_report_from_json(const char* json,
                                                    stemsim_report** out);

/* witness may be NULL. */
STEMSIM_API stemsim_status stemsim_classify_rate(const stemsim_weights* w,
                                                 double d,
                                                 const double* witness,
                                                 stemsim_rate_regime* out);

/* ---- codes ------------------------------------------------------------ */

STEMSIM_API stemsim_status stemsim_code_from_strings(const char* const* words,
                                                     size_t count,
                                                     stemsim_code** out);
STEMSIM_API stemsim_status stemsim_code_load(const char* path,
                                             stemsim_code** out);
STEMSIM_API void stemsim_code_free(stemsim_code* c);
STEMSIM_API size_t stemsim_code_size(const stemsim_code* c);
STEMSIM_API size_t stemsim_code_length(const stemsim_code* c);
/* Valid until the code is freed. NULL when out of range. */
STEMSIM_API const char* stemsim_code_word(const stemsim_code* c, size_t index);
STEMSIM_API stemsim_status stemsim_code_to_text(const stemsim_code* c,
                                                char** out);

STEMSIM_API stemsim_status stemsim_code_min_distance(const stemsim_weights* w,
                                                     const stemsim_code* c,
                                                     double* out);
/* report (may be NULL) receives one line per violation. */
STEMSIM_API stemsim_status stemsim_code_verify(const stemsim_weights* w,
                                               const stemsim_code* c, double D,
                                               int* valid, double* min_distance,
                                               char** report);
STEMSIM_API stemsim_status stemsim_code_repetition(size_t n,
                                                   stemsim_code** out);
/* Samples from the chain given by initial[4] and transitions[16]. */
STEMSIM_API stemsim_status stemsim_code_generate_markov(
    const stemsim_weights* w, const double initial[4],
    const double transitions[16], size_t n, double D, size_t trials,
    uint64_t seed, stemsim_code** out);
/* limit == 0 selects 4^6. */
STEMSIM_API stemsim_status stemsim_code_search(const stemsim_weights* w,
                                               size_t n, double D, size_t limit,
                                               stemsim_code** out, int* exact);
STEMSIM_API stemsim_status stemsim_rate_estimate(size_t code_size, size_t n,
                                                 double* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* STEMSIM_STEMSIM_H_ */

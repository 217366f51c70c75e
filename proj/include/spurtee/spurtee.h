/* Copyright 2026 The spurtee Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the spurtee library. Every call returns a status code; on
 * failure stee_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * stee_free_string(). */

#ifndef SPURTEE_SPURTEE_H
#define SPURTEE_SPURTEE_H

#include <stddef.h>
#include <stdint.h>

#if defined(STEE_BUILDING_LIBRARY)
#define STEE_API __attribute__((visibility("default")))
#else
#define STEE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stee_model stee_model;

typedef enum stee_status {
  STEE_OK = 0,
  STEE_ERR_INTERNAL = 1,
  STEE_ERR_VALIDATION = 2,
  STEE_ERR_RESOURCE_CAP = 3,
  STEE_ERR_NUMERICAL = 4
} stee_status;

typedef enum stee_format { STEE_FORMAT_JSON = 0, STEE_FORMAT_CSV = 1 } stee_format;

typedef struct stee_options {
  uint64_t seed;
  uint64_t cap_amplitudes;
  uint32_t workers;
  double tol_rank;
  double tol_span;
  double tol_conditional;
  double tol_saturation;
  double tol_cmi;
  double tol_logical;
} stee_options;

/* Fills in the library defaults. */
STEE_API void stee_options_init(stee_options* options);

/* Model spec strings: paulitwirl:identity, paulitwirl:haar[:seed],
 * paulitwirl:matrix:<file>, product_trivial, identity_to_b, cluster,
 * stabilizer:<tableau file>, custom:<channel json file>. */
STEE_API stee_status stee_model_open(const char* spec, const stee_options* options, stee_model** out);
STEE_API void stee_model_close(stee_model* model);
STEE_API stee_status stee_model_describe(const stee_model* model, char** json_out);
/* Tableau text of a Clifford model. */
STEE_API stee_status stee_model_tableau(const stee_model* model, char** text_out);

STEE_API stee_status stee_analyze(const stee_model* model, const stee_options* options, char** json_out);

/* On STEE_ERR_RESOURCE_CAP the output still holds every completed row; rows
 * that hit the cap carry nan values. */
STEE_API stee_status stee_ring_scan(const char* spec, const uint64_t* ls, size_t n_ls, const uint64_t* seeds,
                                    size_t n_seeds, const stee_options* options, stee_format format,
                                    char** out);

/* support_csv lists region tokens: B, E, C, B_k, E_k or factor labels. */
STEE_API stee_status stee_logical(const stee_model* model, const char* op, uint64_t n, const char* support_csv,
                                  const stee_options* options, char** json_out);

STEE_API stee_status stee_stab(const stee_model* model, const stee_options* options, char** json_out);
/* Draws random Clifford isometries until `saturated_target` of them pass the
 * saturation pre-filter; the report lists every draw. */
STEE_API stee_status stee_stab_random_batch(uint64_t saturated_target, const stee_options* options, char** json_out);

/* Entropy in bits of a Hermitian unit-trace matrix given as interleaved
 * (re, im) doubles in row-major order. */
STEE_API stee_status stee_entropy_bits(const double* interleaved, size_t dim, double* bits_out);

STEE_API const char* stee_last_error(void);
STEE_API void stee_free_string(char* s);
STEE_API const char* stee_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SPURTEE_SPURTEE_H */

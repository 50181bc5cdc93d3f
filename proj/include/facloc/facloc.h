/* Copyright 2026 The facloc Authors.
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

/* C interface to facloc: single-facility location on the line with outliers.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every function returning char* through an out-parameter
 * transfers ownership; release with facloc_string_free. Numbers cross the
 * boundary as strings ("p/q" or decimal literals) so nothing is rounded.
 * `digits` < 0 requests exact "p/q" output, otherwise fixed-point rendering.
 *
 * On failure a function returns a non-zero status and facloc_last_error()
 * describes it. The message is thread-local and valid until the next call on
 * the same thread.
 */
#ifndef FACLOC_FACLOC_H_
#define FACLOC_FACLOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FACLOC_BUILDING_LIBRARY)
#define FACLOC_API __attribute__((visibility("default")))
#else
#define FACLOC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum facloc_status {
  FACLOC_OK = 0,
  FACLOC_ERR_INVALID_INPUT = 1,
  FACLOC_ERR_DOMAIN = 2,
  FACLOC_ERR_LIMIT = 3,
  FACLOC_ERR_INTERNAL = 4,
  FACLOC_ERR_NULL_ARGUMENT = 5
} facloc_status;

typedef enum facloc_objective {
  FACLOC_UTILITARIAN = 0,
  FACLOC_EGALITARIAN = 1
} facloc_objective;

typedef struct facloc_instance facloc_instance;
typedef struct facloc_mechanism facloc_mechanism;

FACLOC_API const char* facloc_version(void);
FACLOC_API const char* facloc_last_error(void);
FACLOC_API void facloc_string_free(char* s);

FACLOC_API facloc_status facloc_parse_objective(const char* name, facloc_objective* out);

/* Instances. */
FACLOC_API facloc_status facloc_instance_parse(const char* json, facloc_instance** out);
FACLOC_API facloc_status facloc_instance_create(const char* const* locations, size_t n, int z,
                                                const char* prediction, facloc_instance** out);
FACLOC_API void facloc_instance_free(facloc_instance* instance);
FACLOC_API facloc_status facloc_instance_size(const facloc_instance* instance, int* n);
FACLOC_API facloc_status facloc_instance_outliers(const facloc_instance* instance, int* z);
FACLOC_API facloc_status facloc_instance_set_outliers(facloc_instance* instance, int z);
/* NULL clears the prediction. */
FACLOC_API facloc_status facloc_instance_set_prediction(facloc_instance* instance,
                                                        const char* prediction);
/* *has is 0 when the document named no objective. */
FACLOC_API facloc_status facloc_instance_objective(const facloc_instance* instance, int* has,
                                                   facloc_objective* objective);
FACLOC_API facloc_status facloc_instance_to_json(const facloc_instance* instance, char** out);

/* Mechanisms: a bare name ("left_median") or a JSON tag ({"mech":"kth","k":2}). */
FACLOC_API facloc_status facloc_mechanism_parse(const char* text, facloc_mechanism** out);
FACLOC_API void facloc_mechanism_free(facloc_mechanism* mechanism);
FACLOC_API facloc_status facloc_mechanism_to_json(const facloc_mechanism* mechanism, char** out);

/* Operations. Results are JSON documents. */
FACLOC_API facloc_status facloc_eval_cost(const facloc_instance* instance, const char* y,
                                          facloc_objective objective, int digits, char** out);
FACLOC_API facloc_status facloc_solve(const facloc_instance* instance, facloc_objective objective,
                                      int brute_force, int digits, char** out);
FACLOC_API facloc_status facloc_run(const facloc_mechanism* mechanism,
                                    const facloc_instance* instance, facloc_objective objective,
                                    int digits, char** out, int* within_bound);
FACLOC_API facloc_status facloc_verify_sp(const facloc_mechanism* mechanism,
                                          const facloc_instance* instance, int digits, char** out,
                                          int* violation_found);
/* config_json: {"mech", "objective", "n", "z", "model", "family", "family_params",
 * "prediction", "seed", "count", "workers", "rows", "check_sp"}. csv_out may be NULL. */
FACLOC_API facloc_status facloc_sweep(const char* config_json, int digits, char** json_out,
                                      char** csv_out, int* all_ok);
FACLOC_API facloc_status facloc_bounds(int n_min, int n_max, int digits, char** out);
FACLOC_API facloc_status facloc_reproduce(const char* target, int64_t sweep_count, uint64_t seed,
                                          int workers, int digits, char** out, int* ok);
FACLOC_API facloc_status facloc_generate_random(int n, int z, const char* model, uint64_t seed,
                                                facloc_instance** out);
/* params_json: {"n", "z", "variant", "delta", "d", "d1", "d2", "d3", "beta"}; may be NULL. */
FACLOC_API facloc_status facloc_generate_family(const char* family, const char* params_json,
                                                facloc_instance** out);
FACLOC_API facloc_status facloc_replay(const facloc_mechanism* mechanism, const char* family,
                                       const char* params_json, int digits, char** out,
                                       int* unchanged);

#ifdef __cplusplus
}
#endif

#endif /* FACLOC_FACLOC_H_ */

/*
 * Copyright 2026 The prgain Authors
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

/*
 * C interface to libprgain: privacy-gain driven multi-iterative
 * k-anonymization of CSV microdata, k-anonymity verification and Naive Bayes
 * utility comparison.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a prg_status; on
 * failure prg_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** are
 * heap allocated and released with prg_string_free().
 */

#ifndef PRGAIN_PRGAIN_H_
#define PRGAIN_PRGAIN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PRGAIN_BUILDING_LIBRARY)
#define PRGAIN_API __declspec(dllexport)
#else
#define PRGAIN_API __declspec(dllimport)
#endif
#else
#define PRGAIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum prg_status {
  PRG_OK = 0,
  PRG_ERR_INVALID = 1,         /* bad input, config or argument */
  PRG_ERR_IMPOSSIBLE = 2,      /* fewer tuples than k */
  PRG_ERR_VERIFY_FAILED = 3,   /* table is not k-anonymous */
  PRG_ERR_IO = 4,              /* file could not be read or written */
  PRG_ERR_INTERNAL = 5
} prg_status;

typedef enum prg_residual_policy {
  PRG_RESIDUAL_FROM_CONFIG = -1,
  PRG_RESIDUAL_DROP = 0,
  PRG_RESIDUAL_KEEP = 1,
  PRG_RESIDUAL_SUPPRESS = 2
} prg_residual_policy;

typedef struct prg_config prg_config;
typedef struct prg_table prg_table;
typedef struct prg_result prg_result;

typedef struct prg_anonymize_options {
  int k;               /* <= 0: use the config's k */
  int residual_policy; /* a prg_residual_policy value */
  int max_branches;    /* < 0: use the config's cap; 0: unlimited */
  int record_all_branches;
  int record_timing;   /* 0 reports wall_time_ms as 0 */
} prg_anonymize_options;

PRGAIN_API const char* prg_version(void);
PRGAIN_API const char* prg_last_error(void);
PRGAIN_API void prg_string_free(char* s);

PRGAIN_API prg_status prg_config_load(const char* json_path, prg_config** out);
PRGAIN_API prg_status prg_config_parse(const char* json_text, prg_config** out);
PRGAIN_API void prg_config_free(prg_config* config);
PRGAIN_API int prg_config_k(const prg_config* config);
PRGAIN_API size_t prg_config_num_quasi_identifiers(const prg_config* config);
/* NULL when the config names no class attribute. */
PRGAIN_API const char* prg_config_class_attr(const prg_config* config);

/* Loads a CSV with a header row; no roles are assigned yet. */
PRGAIN_API prg_status prg_table_load(const char* csv_path, prg_table** out);
PRGAIN_API void prg_table_free(prg_table* table);
PRGAIN_API size_t prg_table_num_rows(const prg_table* table);
PRGAIN_API size_t prg_table_num_columns(const prg_table* table);
PRGAIN_API prg_status prg_table_write(const prg_table* table,
                                      const char* csv_path);

PRGAIN_API void prg_anonymize_options_init(prg_anonymize_options* options);

/* Applies the config's roles, drops identifier columns and runs the search. */
PRGAIN_API prg_status prg_anonymize(const prg_table* table,
                                    const prg_config* config,
                                    const prg_anonymize_options* options,
                                    prg_result** out);
PRGAIN_API void prg_result_free(prg_result* result);
PRGAIN_API double prg_result_privacy_achieved(const prg_result* result);
PRGAIN_API size_t prg_result_residual_count(const prg_result* result);
/* The released table, per the result's residual policy. */
PRGAIN_API prg_status prg_result_write_csv(const prg_result* result,
                                           const char* csv_path);
PRGAIN_API prg_status prg_result_report_json(const prg_result* result,
                                             char** out_json);

/* PRG_OK when every class of the config's quasi-identifiers has at least k
 * rows (k <= 0 uses the config's k), PRG_ERR_VERIFY_FAILED otherwise. The
 * JSON report is written in both cases when out_json is non-NULL. */
PRGAIN_API prg_status prg_verify(const prg_table* table,
                                 const prg_config* config, int k,
                                 char** out_json);

/* Naive Bayes accuracy on both tables under the same seeded split
 * (split == 1.0 trains and tests on the full table). When binning_config is
 * non-NULL its interval quasi-identifiers are binned to level 1 first. */
PRGAIN_API prg_status prg_evaluate(const prg_table* original,
                                   const prg_table* anonymized,
                                   const char* class_attr, double split,
                                   uint64_t seed, double alpha,
                                   const prg_config* binning_config,
                                   int record_timing, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRGAIN_PRGAIN_H_ */

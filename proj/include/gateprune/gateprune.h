/* Copyright 2026 The gateprune authors
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
 */

/* Public C API of libgateprune.
 *
 * Handles are opaque; every constructor has a matching _free. Functions
 * return GP_OK (0) on success and a negative status otherwise;
 * gp_last_error() describes the most recent failure on the calling thread.
 * Strings returned through char** outputs are heap-allocated and must be
 * released with gp_string_free().
 *
 * Conventions shared with the file formats: qubit 0 is the least significant
 * bit of a basis index; bitstrings and keep masks in JSON/CSV order gate
 * position 0 first; measurement count keys render the highest qubit first.
 */

#ifndef GATEPRUNE_GATEPRUNE_H_
#define GATEPRUNE_GATEPRUNE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GP_API __declspec(dllexport)
#else
#define GP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gp_status {
  GP_OK = 0,
  GP_ERR_INVALID_ARGUMENT = -1, /* bad parameters or malformed config */
  GP_ERR_DATA = -2,             /* bad input data or files */
  GP_ERR_INTERNAL = -3          /* broken invariant; report as a bug */
} gp_status;

typedef enum gp_entanglement {
  GP_ENTANGLE_LINEAR = 0,
  GP_ENTANGLE_FULL = 1
} gp_entanglement;

typedef struct gp_dataset gp_dataset;
typedef struct gp_circuit gp_circuit; /* a bound (optionally pruned) map */
typedef struct gp_metrics gp_metrics;
typedef struct gp_report gp_report;

/* Per-gate significance record as stored; gsi == (f + e + (1 - p)) / 3. */
typedef struct gp_gate_metrics {
  int32_t position;
  char gate[8];
  double fidelity;
  double entanglement;
  double sensitivity;
  double gsi;
} gp_gate_metrics;

typedef struct gp_hardware_opts {
  uint64_t shots;    /* >= 1 */
  int32_t tomo_qubit; /* -1 selects the default probe qubit */
  double delta;      /* sensitivity perturbation, radians; <= 0 -> 0.1 */
  int32_t use_noise; /* 0: noiseless; 1: apply p1/p2/p_ro below */
  double p1, p2, p_ro;
  uint64_t seed;
} gp_hardware_opts;

GP_API const char* gp_version(void);

/* Message for the last failing call on this thread; never NULL. */
GP_API const char* gp_last_error(void);

GP_API void gp_string_free(char* s);

/* --- datasets ------------------------------------------------------------ */

/* Loads a headered CSV; label_column NULL or "last" takes the final column.
 * Features are min-max normalized to [0,1], labels mapped to -1/+1. */
GP_API gp_status gp_dataset_load_csv(const char* path,
                                     const char* label_column,
                                     gp_dataset** out);
GP_API gp_status gp_dataset_dims(const gp_dataset* dataset, size_t* samples,
                                 size_t* features);
GP_API void gp_dataset_free(gp_dataset* dataset);

/* --- circuits ------------------------------------------------------------ */

/* Builds the ZZ feature map bound to x (length x_len == num_features),
 * x in [0,1]^n. */
GP_API gp_status gp_zz_map_build(size_t num_features,
                                 gp_entanglement entanglement, int32_t reps,
                                 const double* x, size_t x_len,
                                 gp_circuit** out);
GP_API gp_status gp_circuit_gate_count(const gp_circuit* circuit, size_t* out);
GP_API gp_status gp_circuit_num_qubits(const gp_circuit* circuit,
                                       int32_t* out);
/* keep[i] != 0 keeps gate i; len must equal the gate count. */
GP_API gp_status gp_circuit_prune(const gp_circuit* circuit,
                                  const uint8_t* keep, size_t len,
                                  gp_circuit** out);
GP_API void gp_circuit_free(gp_circuit* circuit);

/* --- gate significance ---------------------------------------------------- */

/* Exact engine. ent_qubit -1 selects the default probe; delta <= 0 -> 0.1. */
GP_API gp_status gp_gsi_exact(const gp_circuit* circuit, int32_t ent_qubit,
                              double delta, gp_metrics** out);
/* Measurement-only engine; opts may be NULL for defaults. */
GP_API gp_status gp_gsi_hardware(const gp_circuit* circuit,
                                 const gp_hardware_opts* opts,
                                 gp_metrics** out);
GP_API gp_status gp_metrics_count(const gp_metrics* metrics, size_t* out);
GP_API gp_status gp_metrics_row(const gp_metrics* metrics, size_t index,
                                gp_gate_metrics* out);
GP_API gp_status gp_metrics_range(const gp_metrics* metrics, double* low,
                                  double* high);
GP_API gp_status gp_metrics_to_csv(const gp_metrics* metrics, char** out);
GP_API gp_status gp_metrics_to_json(const gp_metrics* metrics, char** out);
GP_API void gp_metrics_free(gp_metrics* metrics);

/* Computes metrics the way the scan does: split the dataset with the config
 * seed, bind the map (mean of the training features unless bind_sample is
 * set), then run the configured engine. config_json uses the same schema as
 * the scan config file. */
GP_API gp_status gp_gsi_from_dataset(const gp_dataset* dataset,
                                     const char* config_json,
                                     gp_metrics** out);

/* --- the threshold scan --------------------------------------------------- */

GP_API gp_status gp_scan_run(const gp_dataset* dataset,
                             const char* config_json, gp_report** out);
GP_API gp_status gp_report_to_json(const gp_report* report, char** out);

typedef enum gp_report_csv_kind {
  GP_CSV_GSI = 0,
  GP_CSV_CANDIDATES = 1,
  GP_CSV_RANKINGS = 2
} gp_report_csv_kind;

GP_API gp_status gp_report_csv(const gp_report* report,
                               gp_report_csv_kind kind, char** out);
GP_API void gp_report_free(gp_report* report);

/* Renders the human-readable summary table from a serialized report. */
GP_API gp_status gp_report_render(const char* report_json, char** out);

/* --- scalability bench ---------------------------------------------------- */

/* config_json: {"engine": {...}, "delta": ..., "seed": ...,
 *               "exact_qubit_cap": ...,
 *               "bench": {"configs": ["S1","S2","S3"], "qubits": [4,...]}}.
 * Emits the bench CSV. */
GP_API gp_status gp_bench_run(const char* config_json, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GATEPRUNE_GATEPRUNE_H_ */

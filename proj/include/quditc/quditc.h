/*
 * Copyright 2026 The quditc Authors
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

/*
 * C interface to the quditc transpiler and emulator.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Every fallible call returns a qdc_status; on failure the
 * out-parameters are left untouched and qdc_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * heap-allocated and released with qdc_string_free.
 */

#ifndef QUDITC_QUDITC_H
#define QUDITC_QUDITC_H

#include <stddef.h>
#include <stdint.h>

#if defined(QDC_BUILDING_LIBRARY)
#define QDC_API __attribute__((visibility("default")))
#else
#define QDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdc_status {
  QDC_OK = 0,
  QDC_ERR_INVALID_ARGUMENT = 1,
  QDC_ERR_SCHEMA = 2,
  QDC_ERR_INDEX_OUT_OF_RANGE = 3,
  QDC_ERR_DUPLICATE_INDEX = 4,
  QDC_ERR_NON_UNITARY = 5,
  QDC_ERR_TOO_LARGE = 6,
  QDC_ERR_DIMENSION_MISMATCH = 7,
  QDC_ERR_INSUFFICIENT_QUDITS = 8,
  QDC_ERR_INCOMPATIBLE = 9,
  QDC_ERR_INSUFFICIENT_FREE_LEVELS = 10,
  QDC_ERR_NO_FEASIBLE_MAPPING = 11,
  QDC_ERR_INSUFFICIENT_ANCILLAS = 12,
  QDC_ERR_NOT_IN_IMAGE = 13,
  QDC_ERR_SUPPORT_VIOLATION = 14,
  QDC_ERR_INTERNAL = 99
} qdc_status;

typedef enum qdc_circuit_kind {
  QDC_CIRCUIT_QUBIT = 0,
  QDC_CIRCUIT_QUDIT = 1
} qdc_circuit_kind;

typedef struct qdc_circuit qdc_circuit;
typedef struct qdc_mapping qdc_mapping;
typedef struct qdc_error_model qdc_error_model;
typedef struct qdc_report qdc_report;
typedef struct qdc_state qdc_state;
typedef struct qdc_counts qdc_counts;

QDC_API const char *qdc_version(void);
/* Message of the most recent failure on this thread ("" if none). */
QDC_API const char *qdc_last_error(void);
QDC_API const char *qdc_status_name(qdc_status status);
QDC_API void qdc_string_free(char *s);

/* Circuits (qubit or qudit). Parsing also validates indices and unitarity. */
QDC_API qdc_status qdc_circuit_parse(const char *json, qdc_circuit **out);
QDC_API qdc_status qdc_circuit_to_json(const qdc_circuit *circuit, char **out);
QDC_API qdc_circuit_kind qdc_circuit_get_kind(const qdc_circuit *circuit);
/* Qubit count or qudit count. */
QDC_API size_t qdc_circuit_width(const qdc_circuit *circuit);
QDC_API size_t qdc_circuit_gate_count(const qdc_circuit *circuit);
/* Copies up to `capacity` qudit dimensions; returns the register length. */
QDC_API size_t qdc_circuit_dims(const qdc_circuit *circuit, int *dims, size_t capacity);
QDC_API void qdc_circuit_free(qdc_circuit *circuit);

/* Mappings: {"mapping_opt": [[...], ...]} bound to register dimensions. */
QDC_API qdc_status qdc_mapping_parse(const char *json, const int *dims, size_t num_dims,
                                     qdc_mapping **out);
QDC_API qdc_status qdc_mapping_trivial(int num_qubits, const int *dims, size_t num_dims,
                                       qdc_mapping **out);
QDC_API qdc_status qdc_mapping_to_json(const qdc_mapping *mapping, char **out);
QDC_API void qdc_mapping_free(qdc_mapping *mapping);

/* Error model: defaults e1 = 0.001, e2 = 0.01. */
QDC_API qdc_status qdc_error_model_default(qdc_error_model **out);
QDC_API qdc_status qdc_error_model_parse(const char *json, qdc_error_model **out);
QDC_API void qdc_error_model_free(qdc_error_model *model);

/* Lowers a qubit circuit under a fixed mapping. `model` may be NULL. */
QDC_API qdc_status qdc_transpile(const qdc_circuit *qubit_circuit, const qdc_mapping *mapping,
                                 const qdc_error_model *model, qdc_circuit **out_circuit,
                                 qdc_report **out_report);

/* Searches up to `limit` mappings (0 selects the default of 10000). Any of
 * the out-parameters may be NULL. */
QDC_API qdc_status qdc_select_mapping(const qdc_circuit *qubit_circuit, const int *dims,
                                      size_t num_dims, const qdc_error_model *model,
                                      size_t limit, qdc_mapping **out_mapping,
                                      qdc_circuit **out_circuit, qdc_report **out_report);

QDC_API qdc_status qdc_report_to_json(const qdc_report *report, char **out);
QDC_API size_t qdc_report_two_qudit_gates(const qdc_report *report);
QDC_API size_t qdc_report_single_qudit_gates(const qdc_report *report);
/* -1 when absent. */
QDC_API int64_t qdc_report_baseline_two_qubit_gates(const qdc_report *report);
QDC_API double qdc_report_fidelity_opt(const qdc_report *report);
/* Return 1 and write the value when present, 0 otherwise. */
QDC_API int qdc_report_fidelity_trivial(const qdc_report *report, double *out);
QDC_API int qdc_report_fidelity_ratio(const qdc_report *report, double *out);
QDC_API void qdc_report_free(qdc_report *report);

/* Exact emulation. Qubit circuits run directly on a (2, ..., 2) register. */
QDC_API qdc_status qdc_simulate(const qdc_circuit *circuit, qdc_state **out);
QDC_API size_t qdc_state_size(const qdc_state *state);
/* Writes |amplitude|^2 for the first `capacity` register indices. */
QDC_API size_t qdc_state_probabilities(const qdc_state *state, double *out, size_t capacity);
QDC_API void qdc_state_free(qdc_state *state);

QDC_API qdc_status qdc_sample(const qdc_state *state, uint64_t shots, uint64_t seed,
                              qdc_counts **out);
/* Fails with QDC_ERR_SUPPORT_VIOLATION when an outcome lies outside the
 * mapping image. */
QDC_API qdc_status qdc_counts_decode(const qdc_counts *counts, const qdc_mapping *mapping,
                                     qdc_counts **out);
QDC_API uint64_t qdc_counts_shots(const qdc_counts *counts);
QDC_API size_t qdc_counts_distinct(const qdc_counts *counts);
/* Occurrences of `key` (0 if never observed). */
QDC_API uint64_t qdc_counts_get(const qdc_counts *counts, const char *key);
QDC_API qdc_status qdc_counts_to_json(const qdc_counts *counts, char **out);
/* {"shots", "seed", "generator", "qudit_res", "qubit_res"} */
QDC_API qdc_status qdc_simulation_result_to_json(const qdc_counts *qudit_counts,
                                                 const qdc_counts *qubit_counts, char **out);
QDC_API void qdc_counts_free(qdc_counts *counts);

#ifdef __cplusplus
}
#endif

#endif /* QUDITC_QUDITC_H */

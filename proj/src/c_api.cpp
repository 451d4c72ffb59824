// Copyright 2026 The quditc Authors
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

#include "quditc/quditc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "quditc/circuit.hpp"
#include "quditc/cost_model.hpp"
#include "quditc/json_io.hpp"
#include "quditc/mapping.hpp"
#include "quditc/postprocess.hpp"
#include "quditc/statevector.hpp"
#include "quditc/transpiler.hpp"

struct qdc_circuit {
  quditc::AnyCircuit value;
};
struct qdc_mapping {
  quditc::Mapping value;
};
struct qdc_error_model {
  quditc::ErrorModel value;
};
struct qdc_report {
  quditc::TranspileReport value;
};
struct qdc_state {
  quditc::QuantumState value;
};
struct qdc_counts {
  quditc::Counts value;
};

namespace {

thread_local std::string g_last_error;

qdc_status fail(qdc_status status, const std::string &message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
qdc_status guarded(F &&body) {
  try {
    g_last_error.clear();
    body();
    return QDC_OK;
  } catch (const quditc::Error &e) {
    return fail(static_cast<qdc_status>(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(QDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(QDC_ERR_INTERNAL, e.what());
  }
}

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const quditc::Json &doc) { return doc.dump(2); }

const quditc::QubitCircuit &require_qubit(const qdc_circuit *c) {
  const auto *q = std::get_if<quditc::QubitCircuit>(&c->value);
  if (!q) throw quditc::Error(quditc::ErrorCode::InvalidArgument, "expected a qubit circuit");
  return *q;
}

std::vector<int> dims_from(const int *dims, size_t n) {
  if (n == 0 || !dims) throw quditc::Error(quditc::ErrorCode::InvalidArgument, "empty dims");
  return std::vector<int>(dims, dims + n);
}

#define QDC_REQUIRE(cond)                                                     \
  do {                                                                        \
    if (!(cond)) return fail(QDC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char *qdc_version(void) { return "0.1.0"; }

const char *qdc_last_error(void) { return g_last_error.c_str(); }

const char *qdc_status_name(qdc_status status) {
  if (status == QDC_OK) return "OK";
  if (status == QDC_ERR_INTERNAL) return "Internal";
  static thread_local std::string name;
  name = std::string(quditc::to_string(static_cast<quditc::ErrorCode>(status)));
  return name.c_str();
}

void qdc_string_free(char *s) { std::free(s); }

qdc_status qdc_circuit_parse(const char *json, qdc_circuit **out) {
  QDC_REQUIRE(json && out);
  return guarded([&] {
    auto circuit = quditc::parse_circuit(quditc::parse_json_text(json));
    std::visit([](const auto &c) { quditc::require_valid(c); }, circuit);
    *out = new qdc_circuit{std::move(circuit)};
  });
}

qdc_status qdc_circuit_to_json(const qdc_circuit *circuit, char **out) {
  QDC_REQUIRE(circuit && out);
  return guarded([&] { *out = copy_string(dump(quditc::to_json(circuit->value))); });
}

qdc_circuit_kind qdc_circuit_get_kind(const qdc_circuit *circuit) {
  return std::holds_alternative<quditc::QuditCircuit>(circuit->value) ? QDC_CIRCUIT_QUDIT
                                                                       : QDC_CIRCUIT_QUBIT;
}

size_t qdc_circuit_width(const qdc_circuit *circuit) {
  if (const auto *q = std::get_if<quditc::QubitCircuit>(&circuit->value)) {
    return static_cast<size_t>(q->num_qubits());
  }
  return std::get<quditc::QuditCircuit>(circuit->value).dims().size();
}

size_t qdc_circuit_gate_count(const qdc_circuit *circuit) {
  return std::visit([](const auto &c) { return c.gates().size(); }, circuit->value);
}

size_t qdc_circuit_dims(const qdc_circuit *circuit, int *dims, size_t capacity) {
  std::vector<int> d;
  if (const auto *q = std::get_if<quditc::QuditCircuit>(&circuit->value)) {
    d = q->dims();
  } else {
    d.assign(static_cast<size_t>(std::get<quditc::QubitCircuit>(circuit->value).num_qubits()), 2);
  }
  for (size_t i = 0; i < d.size() && i < capacity && dims; ++i) dims[i] = d[i];
  return d.size();
}

void qdc_circuit_free(qdc_circuit *circuit) { delete circuit; }

qdc_status qdc_mapping_parse(const char *json, const int *dims, size_t num_dims,
                             qdc_mapping **out) {
  QDC_REQUIRE(json && out);
  return guarded([&] {
    auto groups = quditc::parse_mapping_groups(quditc::parse_json_text(json));
    *out = new qdc_mapping{quditc::Mapping(std::move(groups), dims_from(dims, num_dims))};
  });
}

qdc_status qdc_mapping_trivial(int num_qubits, const int *dims, size_t num_dims,
                               qdc_mapping **out) {
  QDC_REQUIRE(out);
  return guarded([&] {
    *out = new qdc_mapping{quditc::trivial_mapping(num_qubits, dims_from(dims, num_dims))};
  });
}

qdc_status qdc_mapping_to_json(const qdc_mapping *mapping, char **out) {
  QDC_REQUIRE(mapping && out);
  return guarded(
      [&] { *out = copy_string(dump(quditc::mapping_to_json(mapping->value.groups()))); });
}

void qdc_mapping_free(qdc_mapping *mapping) { delete mapping; }

qdc_status qdc_error_model_default(qdc_error_model **out) {
  QDC_REQUIRE(out);
  return guarded([&] { *out = new qdc_error_model{}; });
}

qdc_status qdc_error_model_parse(const char *json, qdc_error_model **out) {
  QDC_REQUIRE(json && out);
  return guarded([&] {
    *out = new qdc_error_model{quditc::parse_error_model(quditc::parse_json_text(json))};
  });
}

void qdc_error_model_free(qdc_error_model *model) { delete model; }

qdc_status qdc_transpile(const qdc_circuit *qubit_circuit, const qdc_mapping *mapping,
                         const qdc_error_model *model, qdc_circuit **out_circuit,
                         qdc_report **out_report) {
  QDC_REQUIRE(qubit_circuit && mapping);
  return guarded([&] {
    const auto &circuit = require_qubit(qubit_circuit);
    const quditc::ErrorModel em = model ? model->value : quditc::ErrorModel{};
    auto lowered = quditc::transpile(circuit, mapping->value);
    auto report = quditc::make_report(circuit, mapping->value, lowered, em);
    if (out_report) *out_report = new qdc_report{std::move(report)};
    if (out_circuit) *out_circuit = new qdc_circuit{std::move(lowered)};
  });
}

qdc_status qdc_select_mapping(const qdc_circuit *qubit_circuit, const int *dims,
                              size_t num_dims, const qdc_error_model *model, size_t limit,
                              qdc_mapping **out_mapping, qdc_circuit **out_circuit,
                              qdc_report **out_report) {
  QDC_REQUIRE(qubit_circuit);
  return guarded([&] {
    const quditc::ErrorModel em = model ? model->value : quditc::ErrorModel{};
    auto selection =
        quditc::select_mapping(require_qubit(qubit_circuit), dims_from(dims, num_dims), em,
                               limit == 0 ? quditc::kDefaultSearchLimit : limit);
    if (out_mapping) *out_mapping = new qdc_mapping{selection.mapping};
    if (out_report) *out_report = new qdc_report{selection.report};
    if (out_circuit) *out_circuit = new qdc_circuit{std::move(selection.circuit)};
  });
}

qdc_status qdc_report_to_json(const qdc_report *report, char **out) {
  QDC_REQUIRE(report && out);
  return guarded([&] { *out = copy_string(dump(quditc::to_json(report->value))); });
}

size_t qdc_report_two_qudit_gates(const qdc_report *report) {
  return report->value.two_qudit_gates;
}

size_t qdc_report_single_qudit_gates(const qdc_report *report) {
  return report->value.single_qudit_gates;
}

int64_t qdc_report_baseline_two_qubit_gates(const qdc_report *report) {
  const auto &b = report->value.baseline_two_qubit_gates;
  return b ? static_cast<int64_t>(*b) : -1;
}

double qdc_report_fidelity_opt(const qdc_report *report) { return report->value.fidelity_opt; }

int qdc_report_fidelity_trivial(const qdc_report *report, double *out) {
  const auto &f = report->value.fidelity_trivial;
  if (f && out) *out = *f;
  return f ? 1 : 0;
}

int qdc_report_fidelity_ratio(const qdc_report *report, double *out) {
  const auto &f = report->value.fidelity_ratio;
  if (f && out) *out = *f;
  return f ? 1 : 0;
}

void qdc_report_free(qdc_report *report) { delete report; }

qdc_status qdc_simulate(const qdc_circuit *circuit, qdc_state **out) {
  QDC_REQUIRE(circuit && out);
  return guarded([&] {
    auto state = std::visit([](const auto &c) { return quditc::run(c); }, circuit->value);
    *out = new qdc_state{std::move(state)};
  });
}

size_t qdc_state_size(const qdc_state *state) { return state->value.size(); }

size_t qdc_state_probabilities(const qdc_state *state, double *out, size_t capacity) {
  const auto amps = state->value.amplitudes();
  size_t i = 0;
  for (; i < amps.size() && i < capacity && out; ++i) out[i] = std::norm(amps[i]);
  return i;
}

void qdc_state_free(qdc_state *state) { delete state; }

qdc_status qdc_sample(const qdc_state *state, uint64_t shots, uint64_t seed, qdc_counts **out) {
  QDC_REQUIRE(state && out);
  return guarded([&] { *out = new qdc_counts{quditc::sample(state->value, shots, seed)}; });
}

qdc_status qdc_counts_decode(const qdc_counts *counts, const qdc_mapping *mapping,
                             qdc_counts **out) {
  QDC_REQUIRE(counts && mapping && out);
  return guarded(
      [&] { *out = new qdc_counts{quditc::decode_counts(counts->value, mapping->value)}; });
}

uint64_t qdc_counts_shots(const qdc_counts *counts) { return counts->value.shots; }

size_t qdc_counts_distinct(const qdc_counts *counts) { return counts->value.table.size(); }

uint64_t qdc_counts_get(const qdc_counts *counts, const char *key) {
  if (!key) return 0;
  auto it = counts->value.table.find(key);
  return it == counts->value.table.end() ? 0 : it->second;
}

qdc_status qdc_counts_to_json(const qdc_counts *counts, char **out) {
  QDC_REQUIRE(counts && out);
  return guarded([&] { *out = copy_string(dump(quditc::to_json(counts->value))); });
}

qdc_status qdc_simulation_result_to_json(const qdc_counts *qudit_counts,
                                         const qdc_counts *qubit_counts, char **out) {
  QDC_REQUIRE(qudit_counts && qubit_counts && out);
  return guarded([&] {
    *out = copy_string(
        dump(quditc::simulation_result_to_json(qudit_counts->value, qubit_counts->value)));
  });
}

void qdc_counts_free(qdc_counts *counts) { delete counts; }

}  // extern "C"

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

#pragma once

// JSON documents exchanged between pipeline stages.
//
//   circuit:  {"kind": "qubit", "n": 5, "gates": [...]}
//             {"kind": "qudit", "dims": [4, 4], "gates": [...]}
//   qubit gate: {"kind": "h"|"x"|"y"|"z"|"s"|"t"|"rx"|"ry"|"rz"|"u1"|"cnot"|"cz"|"mcx",
//                "qubits": [...], "angle": radians (rx/ry/rz), "matrix": (u1)}
//               mcx lists its controls first and the target last.
//   qudit gate: {"kind": "local", "qudit": j, "matrix": ...}
//               {"kind": "ctrl", "control": a, "levels": [...], "target": b, "matrix": ...}
//   matrix:   row-major list of rows of [re, im] pairs.
//   mapping:  {"mapping_opt": [[1, 3], [0], [2], [4]]}
//   error model: {"e1": 0.001, "e2": 0.01, "overrides": {"ctrl": 0.02}}
//
// Parse failures throw Error(Schema) whose message starts with a JSON pointer
// to the offending field.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "quditc/circuit.hpp"
#include "quditc/cost_model.hpp"
#include "quditc/mapping.hpp"
#include "quditc/statevector.hpp"

namespace quditc {

using Json = nlohmann::json;
using AnyCircuit = std::variant<QubitCircuit, QuditCircuit>;

Json to_json(const QubitCircuit &circuit);
Json to_json(const QuditCircuit &circuit);
Json to_json(const AnyCircuit &circuit);

// Structural parse only; call validate() for index and unitarity checks.
AnyCircuit parse_circuit(const Json &doc);

Json matrix_to_json(const Matrix &m);
Matrix parse_matrix(const Json &doc, const std::string &path);

Json mapping_to_json(const std::vector<Group> &groups);
// Reads the "mapping_opt" member; a full transpile report is accepted too.
std::vector<Group> parse_mapping_groups(const Json &doc);

Json to_json(const ErrorModel &model);
ErrorModel parse_error_model(const Json &doc);

Json to_json(const TranspileReport &report);
TranspileReport parse_report(const Json &doc);

// {"shots", "seed", "generator", "counts"}
Json to_json(const Counts &counts);
// {"shots", "seed", "generator", "qudit_res", "qubit_res"}
Json simulation_result_to_json(const Counts &qudit, const Counts &qubit);

// Throws Schema on malformed text.
Json parse_json_text(std::string_view text);

}  // namespace quditc

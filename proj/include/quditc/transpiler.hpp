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

// Lowering of qubit circuits onto a qudit register.
//
// Single-qubit gates become one single-qudit gate on the carrier qudit. A
// CNOT or CZ between co-resident qubits is a single-qudit permutation/phase;
// across qudits it is one level-set-controlled gate. A multi-controlled X is
// lowered through a flag ladder: controls sharing a qudit merge into one
// level-set condition, and the satisfied condition of each carrier is pushed
// into a free level of the next one, so K carrier qudits cost 2K - 1
// two-qudit gates.

#include <cstddef>
#include <span>
#include <vector>

#include "quditc/circuit.hpp"
#include "quditc/cost_model.hpp"
#include "quditc/mapping.hpp"

namespace quditc {

// d x d unitary acting as I^{(x)position} (x) u (x) I^{(x)(group_size-1-position)}
// on the first 2^group_size levels and as identity on the free levels.
Matrix embed_single_qubit(const Matrix &u, int position, int group_size, int dim);

Local1D lower_single_qubit_gate(const QubitGate &gate, const Mapping &mapping);
std::vector<QuditGate> lower_cnot(int control, int target, const Mapping &mapping);
std::vector<QuditGate> lower_cz(int control, int target, const Mapping &mapping);

// Flag-ladder lowering. Throws InsufficientFreeLevels when more than one
// carrier lacks room for its flag levels.
std::vector<QuditGate> lower_mcx(std::span<const int> controls, int target,
                                 const Mapping &mapping);

// Number of distinct qudits carrying controls, excluding the target's qudit.
int carrier_count(std::span<const int> controls, int target, const Mapping &mapping);

QuditCircuit transpile(const QubitCircuit &circuit, const Mapping &mapping);

// Clean ancillas the baseline needs: max over MCX gates of (controls - 2).
int required_ancillas(const QubitCircuit &circuit);

// Qubit-only lowering to 1-qubit gates and CNOTs on n + ancillas qubits.
// Ancillas are qubits n..n+ancillas-1 and are restored to |0>.
QubitCircuit baseline_qubit_lowering(const QubitCircuit &circuit, int ancillas);

std::size_t count_two_qubit_gates(const QubitCircuit &circuit);

struct MappingSelection {
  Mapping mapping;
  QuditCircuit circuit;
  TranspileReport report;
};

// Exhaustive search over enumerate_mappings(n, dims, limit), maximizing the
// estimated fidelity. Ties go to fewer two-qudit gates, then to the earlier
// mapping. The trivial mapping is always evaluated when m >= n.
MappingSelection select_mapping(const QubitCircuit &circuit, const std::vector<int> &dims,
                                const ErrorModel &model,
                                std::size_t limit = kDefaultSearchLimit);

// Report for an already chosen mapping.
TranspileReport make_report(const QubitCircuit &circuit, const Mapping &mapping,
                            const QuditCircuit &lowered, const ErrorModel &model);

}  // namespace quditc

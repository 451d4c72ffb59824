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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quditc/circuit.hpp"
#include "quditc/mapping.hpp"

namespace quditc {

// Per-gate Pauli error rates. Overrides are keyed by qudit gate kind
// ("local" or "ctrl") and take precedence over e1/e2.
struct ErrorModel {
  double e1 = 0.001;  // single-qudit gate
  double e2 = 0.01;   // two-qudit gate
  std::map<std::string, double> overrides;

  // Throws InvalidArgument unless every rate lies in [0, 1) and every
  // override key is a known gate kind.
  void validate() const;
  double rate(const QuditGate &gate) const;
};

struct GateCounts {
  std::size_t single_qudit = 0;
  std::size_t two_qudit = 0;

  friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

struct FidelityEstimate {
  double value = 1.0;
  GateCounts counts;
};

GateCounts count_gates(const QuditCircuit &circuit);

// prod_i (1 - e(U_i)), accumulated in circuit order.
FidelityEstimate estimate_fidelity(const QuditCircuit &circuit, const ErrorModel &model);

struct TranspileReport {
  std::vector<Group> mapping;
  std::size_t two_qudit_gates = 0;
  std::size_t single_qudit_gates = 0;
  std::optional<std::size_t> baseline_two_qubit_gates;
  double fidelity_opt = 1.0;
  std::optional<double> fidelity_trivial;
  std::optional<double> fidelity_ratio;  // fidelity_opt / fidelity_trivial
};

TranspileReport compare(const std::vector<Group> &mapping, const FidelityEstimate &opt,
                        const std::optional<FidelityEstimate> &trivial,
                        std::optional<std::size_t> baseline_two_qubit_gates);

}  // namespace quditc

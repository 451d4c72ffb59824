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

#include "quditc/cost_model.hpp"

namespace quditc {

namespace {

void check_rate(const std::string &name, double e) {
  if (!(e >= 0.0 && e < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "error rate " + name + " = " + std::to_string(e) + " outside [0, 1)");
  }
}

}  // namespace

void ErrorModel::validate() const {
  check_rate("e1", e1);
  check_rate("e2", e2);
  for (const auto &[kind, e] : overrides) {
    if (kind != "local" && kind != "ctrl") {
      throw Error(ErrorCode::InvalidArgument, "unknown gate kind in overrides: " + kind);
    }
    check_rate(kind, e);
  }
}

double ErrorModel::rate(const QuditGate &gate) const {
  const bool two = is_two_qudit(gate);
  if (auto it = overrides.find(two ? "ctrl" : "local"); it != overrides.end()) {
    return it->second;
  }
  return two ? e2 : e1;
}

GateCounts count_gates(const QuditCircuit &circuit) {
  GateCounts counts;
  for (const auto &gate : circuit.gates()) {
    if (is_two_qudit(gate)) {
      ++counts.two_qudit;
    } else {
      ++counts.single_qudit;
    }
  }
  return counts;
}

FidelityEstimate estimate_fidelity(const QuditCircuit &circuit, const ErrorModel &model) {
  FidelityEstimate estimate;
  for (const auto &gate : circuit.gates()) estimate.value *= 1.0 - model.rate(gate);
  estimate.counts = count_gates(circuit);
  return estimate;
}

TranspileReport compare(const std::vector<Group> &mapping, const FidelityEstimate &opt,
                        const std::optional<FidelityEstimate> &trivial,
                        std::optional<std::size_t> baseline_two_qubit_gates) {
  TranspileReport report;
  report.mapping = mapping;
  report.two_qudit_gates = opt.counts.two_qudit;
  report.single_qudit_gates = opt.counts.single_qudit;
  report.baseline_two_qubit_gates = baseline_two_qubit_gates;
  report.fidelity_opt = opt.value;
  if (trivial) {
    report.fidelity_trivial = trivial->value;
    report.fidelity_ratio = opt.value / trivial->value;
  }
  return report;
}

}  // namespace quditc

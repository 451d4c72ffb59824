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

#include "quditc/transpiler.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace quditc {

namespace {

// Permutation on `dim` levels flipping `flip_mask` on every encoded level
// whose `cond_mask` bits are all set.
Matrix conditional_flip(int dim, int encoded, int flip_mask, int cond_mask) {
  std::vector<int> image(static_cast<std::size_t>(dim));
  std::iota(image.begin(), image.end(), 0);
  for (int level = 0; level < encoded; ++level) {
    if ((level & cond_mask) == cond_mask) {
      image[static_cast<std::size_t>(level)] = level ^ flip_mask;
    }
  }
  return permutation_matrix(image);
}

// Diagonal with -1 on every encoded level whose `mask` bits are all set.
Matrix conditional_phase(int dim, int encoded, int mask) {
  Matrix m = Matrix::Identity(dim, dim);
  for (int level = 0; level < encoded; ++level) {
    if ((level & mask) == mask) m(level, level) = -1.0;
  }
  return m;
}

std::vector<int> levels_with_mask(int encoded, int mask) {
  std::vector<int> levels;
  for (int level = 0; level < encoded; ++level) {
    if ((level & mask) == mask) levels.push_back(level);
  }
  return levels;
}

// Swaps from[k] <-> to[k] on `dim` levels.
Matrix level_swaps(int dim, const std::vector<int> &from, const std::vector<int> &to) {
  std::vector<int> image(static_cast<std::size_t>(dim));
  std::iota(image.begin(), image.end(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) {
    image[static_cast<std::size_t>(from[k])] = to[k];
    image[static_cast<std::size_t>(to[k])] = from[k];
  }
  return permutation_matrix(image);
}

int dim_of(const Mapping &mapping, int qudit) {
  return mapping.dims()[static_cast<std::size_t>(qudit)];
}

struct Carrier {
  int qudit;
  int mask;                  // resident control bits
  std::vector<int> levels;   // encoded levels with every resident control set
  std::vector<int> free;     // free levels
};

// Controls grouped by qudit, target's qudit excluded, ascending qudit index.
std::vector<Carrier> collect_carriers(std::span<const int> controls, int target,
                                      const Mapping &mapping, int &folded_mask) {
  const int target_qudit = mapping.qudit_of(target);
  folded_mask = 0;
  std::map<int, int> masks;
  for (int c : controls) {
    const int q = mapping.qudit_of(c);
    if (q == target_qudit) {
      folded_mask |= mapping.bit_mask(c);
    } else {
      masks[q] |= mapping.bit_mask(c);
    }
  }
  const LevelBudget budget = mapping.level_budget();
  std::vector<Carrier> carriers;
  for (const auto &[q, mask] : masks) {
    carriers.push_back(Carrier{q, mask, levels_with_mask(mapping.encoded_levels(q), mask),
                               budget.free_levels[static_cast<std::size_t>(q)]});
  }
  return carriers;
}

void check_gate_qubits(std::span<const int> qubits, const Mapping &mapping) {
  for (int q : qubits) {
    if (q < 0 || q >= mapping.num_qubits()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "qubit " + std::to_string(q) + " not covered by the mapping");
    }
  }
  std::vector<int> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicateIndex, "repeated qubit in gate");
  }
}

// Accumulates native gates for one circuit under a fixed mapping.
class LoweringContext {
 public:
  explicit LoweringContext(const Mapping &mapping) : mapping_(mapping) {}

  void lower(const QubitGate &gate) {
    if (is_single_qubit(gate)) {
      gates_.emplace_back(lower_single_qubit_gate(gate, mapping_));
    } else if (const auto *g = std::get_if<Cnot>(&gate)) {
      append(lower_cnot(g->control, g->target, mapping_));
    } else if (const auto *g = std::get_if<Cz>(&gate)) {
      append(lower_cz(g->control, g->target, mapping_));
    } else {
      const auto &m = std::get<Mcx>(gate);
      append(lower_mcx(m.controls, m.target, mapping_));
    }
  }

  std::vector<QuditGate> take() { return std::move(gates_); }

 private:
  void append(std::vector<QuditGate> more) {
    for (auto &g : more) gates_.push_back(std::move(g));
  }

  const Mapping &mapping_;
  std::vector<QuditGate> gates_;
};

}  // namespace

Matrix embed_single_qubit(const Matrix &u, int position, int group_size, int dim) {
  Matrix out = Matrix::Identity(dim, dim);
  const int encoded = 1 << group_size;
  const int mask = 1 << (group_size - 1 - position);
  for (int r = 0; r < encoded; ++r) {
    for (int c = 0; c < encoded; ++c) {
      if ((r & ~mask) != (c & ~mask)) {
        out(r, c) = 0.0;
        continue;
      }
      out(r, c) = u((r & mask) ? 1 : 0, (c & mask) ? 1 : 0);
    }
  }
  return out;
}

Local1D lower_single_qubit_gate(const QubitGate &gate, const Mapping &mapping) {
  const Matrix u = single_qubit_matrix(gate);
  const int q = gate_qubits(gate).front();
  check_gate_qubits(std::span<const int>(&q, 1), mapping);
  const int j = mapping.qudit_of(q);
  return Local1D{j, embed_single_qubit(u, mapping.position_of(q), mapping.group_size(j),
                                       dim_of(mapping, j))};
}

std::vector<QuditGate> lower_cnot(int control, int target, const Mapping &mapping) {
  const int pair[] = {control, target};
  check_gate_qubits(pair, mapping);
  const int qc = mapping.qudit_of(control);
  const int qt = mapping.qudit_of(target);
  const int flip = mapping.bit_mask(target);
  if (qc == qt) {
    return {Local1D{qt, conditional_flip(dim_of(mapping, qt), mapping.encoded_levels(qt),
                                         flip, mapping.bit_mask(control))}};
  }
  return {CtrlEmbedded{
      qc, levels_with_mask(mapping.encoded_levels(qc), mapping.bit_mask(control)), qt,
      conditional_flip(dim_of(mapping, qt), mapping.encoded_levels(qt), flip, 0)}};
}

std::vector<QuditGate> lower_cz(int control, int target, const Mapping &mapping) {
  const int pair[] = {control, target};
  check_gate_qubits(pair, mapping);
  const int qc = mapping.qudit_of(control);
  const int qt = mapping.qudit_of(target);
  if (qc == qt) {
    return {Local1D{qt, conditional_phase(dim_of(mapping, qt), mapping.encoded_levels(qt),
                                          mapping.bit_mask(control) | mapping.bit_mask(target))}};
  }
  return {CtrlEmbedded{
      qc, levels_with_mask(mapping.encoded_levels(qc), mapping.bit_mask(control)), qt,
      conditional_phase(dim_of(mapping, qt), mapping.encoded_levels(qt),
                        mapping.bit_mask(target))}};
}

int carrier_count(std::span<const int> controls, int target, const Mapping &mapping) {
  int folded = 0;
  return static_cast<int>(collect_carriers(controls, target, mapping, folded).size());
}

std::vector<QuditGate> lower_mcx(std::span<const int> controls, int target,
                                 const Mapping &mapping) {
  if (controls.empty()) {
    throw Error(ErrorCode::InvalidArgument, "mcx needs at least one control");
  }
  std::vector<int> qubits(controls.begin(), controls.end());
  qubits.push_back(target);
  check_gate_qubits(qubits, mapping);

  int folded = 0;
  std::vector<Carrier> carriers = collect_carriers(controls, target, mapping, folded);
  const int tq = mapping.qudit_of(target);
  const Matrix target_op = conditional_flip(dim_of(mapping, tq), mapping.encoded_levels(tq),
                                            mapping.bit_mask(target), folded);
  if (carriers.empty()) return {Local1D{tq, target_op}};

  // A carrier without room for flags can only head the ladder, where its own
  // level set serves as the condition.
  const auto lacks_room = [](const Carrier &c) { return c.free.size() < c.levels.size(); };
  const auto cramped = std::count_if(carriers.begin(), carriers.end(), lacks_room);
  if (cramped > 1) {
    throw Error(ErrorCode::InsufficientFreeLevels,
                std::to_string(cramped) +
                    " control qudits lack free levels for the flag ladder");
  }
  std::stable_partition(carriers.begin(), carriers.end(), lacks_room);

  std::vector<QuditGate> compute;
  std::vector<int> condition = carriers.front().levels;
  for (std::size_t i = 1; i < carriers.size(); ++i) {
    const Carrier &prev = carriers[i - 1];
    const Carrier &cur = carriers[i];
    std::vector<int> flags(cur.free.begin(),
                           cur.free.begin() + static_cast<std::ptrdiff_t>(cur.levels.size()));
    compute.emplace_back(CtrlEmbedded{prev.qudit, condition, cur.qudit,
                                      level_swaps(dim_of(mapping, cur.qudit), cur.levels, flags)});
    condition = std::move(flags);
  }

  std::vector<QuditGate> out = compute;
  out.emplace_back(CtrlEmbedded{carriers.back().qudit, condition, tq, target_op});
  out.insert(out.end(), compute.rbegin(), compute.rend());
  return out;
}

QuditCircuit transpile(const QubitCircuit &circuit, const Mapping &mapping) {
  require_valid(circuit);
  if (circuit.num_qubits() != mapping.num_qubits()) {
    throw Error(ErrorCode::InvalidArgument,
                "mapping covers " + std::to_string(mapping.num_qubits()) +
                    " qubits, circuit has " + std::to_string(circuit.num_qubits()));
  }
  LoweringContext ctx(mapping);
  const auto &gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      ctx.lower(gates[i]);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::InsufficientFreeLevels) throw;
      throw Error(e.code(), "gate " + std::to_string(i) + ": " + e.what());
    }
  }
  return QuditCircuit(mapping.dims(), ctx.take());
}

int required_ancillas(const QubitCircuit &circuit) {
  int need = 0;
  for (const auto &gate : circuit.gates()) {
    if (const auto *m = std::get_if<Mcx>(&gate)) {
      need = std::max(need, static_cast<int>(m->controls.size()) - 2);
    }
  }
  return need;
}

namespace {

void append_toffoli(std::vector<QubitGate> &out, int a, int b, int t) {
  const auto h = [](int q) { return QubitGate{Named1Q{NamedGate::H, q}}; };
  const auto tt = [](int q) { return QubitGate{Named1Q{NamedGate::T, q}}; };
  const auto tdg = [](int q) { return QubitGate{Generic1Q{gates::tdg(), q}}; };
  const auto cx = [](int c, int x) { return QubitGate{Cnot{c, x}}; };
  out.insert(out.end(), {h(t), cx(b, t), tdg(t), cx(a, t), tt(t), cx(b, t), tdg(t),
                         cx(a, t), tt(b), tt(t), h(t), cx(a, b), tt(a), tdg(b), cx(a, b)});
}

}  // namespace

QubitCircuit baseline_qubit_lowering(const QubitCircuit &circuit, int ancillas) {
  require_valid(circuit);
  if (ancillas < 0) throw Error(ErrorCode::InvalidArgument, "negative ancilla count");
  const int n = circuit.num_qubits();
  std::vector<QubitGate> out;
  for (const auto &gate : circuit.gates()) {
    if (is_single_qubit(gate) || std::holds_alternative<Cnot>(gate)) {
      out.push_back(gate);
      continue;
    }
    if (const auto *cz = std::get_if<Cz>(&gate)) {
      out.emplace_back(Named1Q{NamedGate::H, cz->target});
      out.emplace_back(Cnot{cz->control, cz->target});
      out.emplace_back(Named1Q{NamedGate::H, cz->target});
      continue;
    }
    const auto &mcx = std::get<Mcx>(gate);
    const auto &c = mcx.controls;
    const int k = static_cast<int>(c.size());
    if (k == 1) {
      out.emplace_back(Cnot{c[0], mcx.target});
      continue;
    }
    if (k == 2) {
      append_toffoli(out, c[0], c[1], mcx.target);
      continue;
    }
    if (ancillas < k - 2) {
      throw Error(ErrorCode::InsufficientAncillas,
                  "mcx with " + std::to_string(k) + " controls needs " +
                      std::to_string(k - 2) + " clean ancillas, have " +
                      std::to_string(ancillas));
    }
    // a_0 = c_0 & c_1, a_i = c_{i+1} & a_{i-1}, target ^= c_{k-1} & a_{k-3}.
    std::vector<std::array<int, 3>> ladder;
    ladder.push_back({c[0], c[1], n});
    for (int i = 1; i <= k - 3; ++i) ladder.push_back({c[static_cast<std::size_t>(i + 1)], n + i - 1, n + i});
    for (const auto &[a, b, t] : ladder) append_toffoli(out, a, b, t);
    append_toffoli(out, c[static_cast<std::size_t>(k - 1)], n + k - 3, mcx.target);
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
      append_toffoli(out, (*it)[0], (*it)[1], (*it)[2]);
    }
  }
  return QubitCircuit(n + ancillas, std::move(out));
}

std::size_t count_two_qubit_gates(const QubitCircuit &circuit) {
  return static_cast<std::size_t>(std::count_if(
      circuit.gates().begin(), circuit.gates().end(),
      [](const QubitGate &g) { return !is_single_qubit(g); }));
}

namespace {

std::size_t baseline_count(const QubitCircuit &circuit) {
  return count_two_qubit_gates(baseline_qubit_lowering(circuit, required_ancillas(circuit)));
}

std::optional<FidelityEstimate> trivial_estimate(const QubitCircuit &circuit,
                                                 const std::vector<int> &dims,
                                                 const ErrorModel &model,
                                                 std::optional<Mapping> *mapping_out = nullptr,
                                                 std::optional<QuditCircuit> *lowered_out = nullptr) {
  if (dims.size() < static_cast<std::size_t>(circuit.num_qubits())) return std::nullopt;
  try {
    Mapping trivial = trivial_mapping(circuit.num_qubits(), dims);
    QuditCircuit lowered = transpile(circuit, trivial);
    FidelityEstimate f = estimate_fidelity(lowered, model);
    if (mapping_out) *mapping_out = std::move(trivial);
    if (lowered_out) *lowered_out = std::move(lowered);
    return f;
  } catch (const Error &e) {
    if (e.code() == ErrorCode::InsufficientFreeLevels) return std::nullopt;
    throw;
  }
}

}  // namespace

TranspileReport make_report(const QubitCircuit &circuit, const Mapping &mapping,
                            const QuditCircuit &lowered, const ErrorModel &model) {
  model.validate();
  return compare(mapping.groups(), estimate_fidelity(lowered, model),
                 trivial_estimate(circuit, mapping.dims(), model), baseline_count(circuit));
}

MappingSelection select_mapping(const QubitCircuit &circuit, const std::vector<int> &dims,
                                const ErrorModel &model, std::size_t limit) {
  require_valid(circuit);
  model.validate();

  struct Best {
    Mapping mapping;
    QuditCircuit circuit;
    FidelityEstimate estimate;
  };
  std::optional<Best> best;
  const auto better = [](const FidelityEstimate &a, const FidelityEstimate &b) {
    if (a.value != b.value) return a.value > b.value;
    return a.counts.two_qudit < b.counts.two_qudit;
  };

  for_each_mapping(circuit.num_qubits(), dims, limit, [&](const Mapping &mapping) {
    try {
      QuditCircuit lowered = transpile(circuit, mapping);
      FidelityEstimate f = estimate_fidelity(lowered, model);
      if (!best || better(f, best->estimate)) {
        best.emplace(Best{mapping, std::move(lowered), f});
      }
    } catch (const Error &e) {
      if (e.code() != ErrorCode::InsufficientFreeLevels) throw;
    }
    return true;
  });

  // The search may have been truncated before reaching the trivial mapping;
  // keep it in play so the result never falls below the qubit-style layout.
  std::optional<Mapping> trivial;
  std::optional<QuditCircuit> trivial_lowered;
  const auto f_trivial = trivial_estimate(circuit, dims, model, &trivial, &trivial_lowered);
  if (f_trivial && (!best || better(*f_trivial, best->estimate))) {
    best.emplace(Best{*trivial, *trivial_lowered, *f_trivial});
  }

  if (!best) {
    throw Error(ErrorCode::NoFeasibleMapping,
                "no enumerated mapping admits a lowering of every gate");
  }
  TranspileReport report =
      compare(best->mapping.groups(), best->estimate, f_trivial, baseline_count(circuit));
  return MappingSelection{std::move(best->mapping), std::move(best->circuit), std::move(report)};
}

}  // namespace quditc

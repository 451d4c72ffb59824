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

// Circuit intermediate representation.
//
// Basis convention: a register with dimensions (d_0, ..., d_{m-1}) is indexed
// in mixed radix with qudit 0 as the most significant digit. A qubit register
// is the special case d_j = 2, so bit string "x_0 x_1 ... x_{n-1}" has index
// sum_i x_i 2^{n-1-i}. Matrices are dense in that basis order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quditc/error.hpp"
#include "quditc/matrix.hpp"

namespace quditc {

enum class NamedGate { H, X, Y, Z, S, T };
enum class Axis { X, Y, Z };

struct Named1Q {
  NamedGate name;
  int qubit;
};

struct Rot1Q {
  Axis axis;
  double angle;  // radians
  int qubit;
};

struct Generic1Q {
  Matrix matrix;  // 2x2
  int qubit;
};

struct Cnot {
  int control;
  int target;
};

struct Cz {
  int control;
  int target;
};

// Multi-controlled X ("generalized Toffoli").
struct Mcx {
  std::vector<int> controls;
  int target;
};

using QubitGate = std::variant<Named1Q, Rot1Q, Generic1Q, Cnot, Cz, Mcx>;

bool operator==(const QubitGate &a, const QubitGate &b);

// Qubits touched by the gate; for Mcx the controls come first, target last.
std::vector<int> gate_qubits(const QubitGate &gate);
bool is_single_qubit(const QubitGate &gate);
// 2x2 matrix of a single-qubit gate. Throws InvalidArgument otherwise.
Matrix single_qubit_matrix(const QubitGate &gate);
// Dense operator on gate_qubits(gate), first listed qubit most significant.
Matrix gate_operator(const QubitGate &gate);

class QubitCircuit {
 public:
  explicit QubitCircuit(int num_qubits, std::vector<QubitGate> gates = {})
      : num_qubits_(num_qubits), gates_(std::move(gates)) {}

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<QubitGate> &gates() const noexcept { return gates_; }

  friend bool operator==(const QubitCircuit &a, const QubitCircuit &b) {
    return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
  }

 private:
  int num_qubits_;
  std::vector<QubitGate> gates_;
};

// Single-qudit unitary on qudit `qudit`.
struct Local1D {
  int qudit;
  Matrix matrix;
};

// Applies `matrix` to `target` iff `control` is in one of `levels`.
struct CtrlEmbedded {
  int control;
  std::vector<int> levels;
  int target;
  Matrix matrix;
};

using QuditGate = std::variant<Local1D, CtrlEmbedded>;

bool operator==(const QuditGate &a, const QuditGate &b);

inline bool is_two_qudit(const QuditGate &gate) {
  return std::holds_alternative<CtrlEmbedded>(gate);
}

class QuditCircuit {
 public:
  explicit QuditCircuit(std::vector<int> dims, std::vector<QuditGate> gates = {})
      : dims_(std::move(dims)), gates_(std::move(gates)) {}

  const std::vector<int> &dims() const noexcept { return dims_; }
  int num_qudits() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<QuditGate> &gates() const noexcept { return gates_; }
  // Product of dims; saturates at SIZE_MAX.
  std::size_t total_dimension() const noexcept;

  friend bool operator==(const QuditCircuit &a, const QuditCircuit &b) {
    return a.dims_ == b.dims_ && a.gates_ == b.gates_;
  }

 private:
  std::vector<int> dims_;
  std::vector<QuditGate> gates_;
};

struct ValidationIssue {
  ErrorCode code;
  std::optional<std::size_t> gate_index;  // empty for register-level problems
  std::string message;
};

// Empty optional means the circuit is valid.
using ValidationResult = std::optional<ValidationIssue>;

ValidationResult validate(const QubitCircuit &circuit);
ValidationResult validate(const QuditCircuit &circuit);

// Throw Error carrying the first issue, if any.
void require_valid(const QubitCircuit &circuit);
void require_valid(const QuditCircuit &circuit);

inline constexpr int kMaxDenseQubits = 12;
inline constexpr std::size_t kMaxDenseDimension = 4096;

// Product U_B ... U_1 of the embedded gate unitaries. Throws TooLarge beyond
// kMaxDenseQubits.
Matrix qubit_unitary(const QubitCircuit &circuit);

// Same for qudit circuits, guarded by kMaxDenseDimension.
Matrix qudit_unitary(const QuditCircuit &circuit);

// U_circ * columns, where `columns` has total_dimension() rows. Lets callers
// act on a subspace without materialising the full unitary.
Matrix apply_to_columns(const QuditCircuit &circuit, Matrix columns);

}  // namespace quditc

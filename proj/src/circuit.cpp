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

#include "quditc/circuit.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace quditc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Matrix named_matrix(NamedGate name) {
  switch (name) {
    case NamedGate::H:
      return gates::h();
    case NamedGate::X:
      return gates::x();
    case NamedGate::Y:
      return gates::y();
    case NamedGate::Z:
      return gates::z();
    case NamedGate::S:
      return gates::s();
    case NamedGate::T:
      return gates::t();
  }
  return gates::x();
}

Matrix rotation_matrix(Axis axis, double angle) {
  switch (axis) {
    case Axis::X:
      return gates::rx(angle);
    case Axis::Y:
      return gates::ry(angle);
    case Axis::Z:
      return gates::rz(angle);
  }
  return gates::rz(angle);
}

// Left-multiplies `columns` by `op` acting on `sites` of a register with
// `dims` (identity elsewhere). The first site is the most significant digit
// of op's basis.
void left_apply(Matrix &columns, const std::vector<int> &dims,
                const std::vector<int> &sites, const Matrix &op) {
  const std::size_t m = dims.size();
  std::vector<std::size_t> stride(m, 1);
  for (std::size_t j = m; j-- > 1;) {
    stride[j - 1] = stride[j] * static_cast<std::size_t>(dims[j]);
  }
  const std::size_t total = stride[0] * static_cast<std::size_t>(dims[0]);

  std::size_t local = 1;
  for (int s : sites) local *= static_cast<std::size_t>(dims[s]);
  std::vector<std::size_t> offset(local, 0);
  for (std::size_t k = 0; k < local; ++k) {
    std::size_t rem = k;
    for (std::size_t p = sites.size(); p-- > 0;) {
      const auto d = static_cast<std::size_t>(dims[sites[p]]);
      offset[k] += (rem % d) * stride[sites[p]];
      rem /= d;
    }
  }

  const auto cols = columns.cols();
  Matrix block(static_cast<Eigen::Index>(local), cols);
  for (std::size_t base = 0; base < total; ++base) {
    bool at_origin = true;
    for (int s : sites) {
      if ((base / stride[s]) % static_cast<std::size_t>(dims[s]) != 0) {
        at_origin = false;
        break;
      }
    }
    if (!at_origin) continue;
    for (std::size_t k = 0; k < local; ++k) {
      block.row(static_cast<Eigen::Index>(k)) =
          columns.row(static_cast<Eigen::Index>(base + offset[k]));
    }
    const Matrix out = op * block;
    for (std::size_t k = 0; k < local; ++k) {
      columns.row(static_cast<Eigen::Index>(base + offset[k])) =
          out.row(static_cast<Eigen::Index>(k));
    }
  }
}

Matrix ctrl_operator(const CtrlEmbedded &g, int control_dim) {
  const auto db = g.matrix.rows();
  const Eigen::Index size = control_dim * db;
  Matrix op = Matrix::Identity(size, size);
  for (int level : g.levels) {
    op.block(level * db, level * db, db, db) = g.matrix;
  }
  return op;
}

std::string describe_gate(std::size_t index) {
  return "gate " + std::to_string(index);
}

ValidationIssue issue(ErrorCode code, std::optional<std::size_t> gate,
                      std::string message) {
  return ValidationIssue{code, gate, std::move(message)};
}

}  // namespace

bool operator==(const QubitGate &a, const QubitGate &b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const Named1Q &x) {
            const auto &y = std::get<Named1Q>(b);
            return x.name == y.name && x.qubit == y.qubit;
          },
          [&](const Rot1Q &x) {
            const auto &y = std::get<Rot1Q>(b);
            return x.axis == y.axis && x.angle == y.angle && x.qubit == y.qubit;
          },
          [&](const Generic1Q &x) {
            const auto &y = std::get<Generic1Q>(b);
            return x.qubit == y.qubit && exactly_equal(x.matrix, y.matrix);
          },
          [&](const Cnot &x) {
            const auto &y = std::get<Cnot>(b);
            return x.control == y.control && x.target == y.target;
          },
          [&](const Cz &x) {
            const auto &y = std::get<Cz>(b);
            return x.control == y.control && x.target == y.target;
          },
          [&](const Mcx &x) {
            const auto &y = std::get<Mcx>(b);
            return x.controls == y.controls && x.target == y.target;
          },
      },
      a);
}

bool operator==(const QuditGate &a, const QuditGate &b) {
  if (a.index() != b.index()) return false;
  if (const auto *x = std::get_if<Local1D>(&a)) {
    const auto &y = std::get<Local1D>(b);
    return x->qudit == y.qudit && exactly_equal(x->matrix, y.matrix);
  }
  const auto &x = std::get<CtrlEmbedded>(a);
  const auto &y = std::get<CtrlEmbedded>(b);
  return x.control == y.control && x.levels == y.levels &&
         x.target == y.target && exactly_equal(x.matrix, y.matrix);
}

std::vector<int> gate_qubits(const QubitGate &gate) {
  return std::visit(
      overloaded{
          [](const Named1Q &g) { return std::vector<int>{g.qubit}; },
          [](const Rot1Q &g) { return std::vector<int>{g.qubit}; },
          [](const Generic1Q &g) { return std::vector<int>{g.qubit}; },
          [](const Cnot &g) { return std::vector<int>{g.control, g.target}; },
          [](const Cz &g) { return std::vector<int>{g.control, g.target}; },
          [](const Mcx &g) {
            std::vector<int> q = g.controls;
            q.push_back(g.target);
            return q;
          },
      },
      gate);
}

bool is_single_qubit(const QubitGate &gate) {
  return std::holds_alternative<Named1Q>(gate) ||
         std::holds_alternative<Rot1Q>(gate) ||
         std::holds_alternative<Generic1Q>(gate);
}

Matrix single_qubit_matrix(const QubitGate &gate) {
  if (const auto *g = std::get_if<Named1Q>(&gate)) return named_matrix(g->name);
  if (const auto *g = std::get_if<Rot1Q>(&gate)) {
    return rotation_matrix(g->axis, g->angle);
  }
  if (const auto *g = std::get_if<Generic1Q>(&gate)) return g->matrix;
  throw Error(ErrorCode::InvalidArgument, "not a single-qubit gate");
}

Matrix gate_operator(const QubitGate &gate) {
  if (is_single_qubit(gate)) return single_qubit_matrix(gate);
  if (std::holds_alternative<Cnot>(gate)) {
    const int image[] = {0, 1, 3, 2};
    return permutation_matrix(image);
  }
  if (std::holds_alternative<Cz>(gate)) {
    Matrix op = Matrix::Identity(4, 4);
    op(3, 3) = -1.0;
    return op;
  }
  const auto &mcx = std::get<Mcx>(gate);
  const int k = static_cast<int>(mcx.controls.size());
  const int size = 1 << (k + 1);
  const int all_controls = (1 << k) - 1;
  std::vector<int> image(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    image[static_cast<std::size_t>(j)] = (j >> 1) == all_controls ? (j ^ 1) : j;
  }
  return permutation_matrix(image);
}

std::size_t QuditCircuit::total_dimension() const noexcept {
  std::size_t total = 1;
  for (int d : dims_) {
    if (d <= 0) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d)) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= static_cast<std::size_t>(d);
  }
  return total;
}

ValidationResult validate(const QubitCircuit &circuit) {
  const int n = circuit.num_qubits();
  if (n < 1) {
    return issue(ErrorCode::InvalidArgument, std::nullopt,
                 "qubit count must be at least 1");
  }
  const auto &gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto &gate = gates[i];
    if (const auto *mcx = std::get_if<Mcx>(&gate); mcx && mcx->controls.empty()) {
      return issue(ErrorCode::InvalidArgument, i,
                   describe_gate(i) + ": mcx needs at least one control");
    }
    std::vector<int> qubits = gate_qubits(gate);
    for (int q : qubits) {
      if (q < 0 || q >= n) {
        return issue(ErrorCode::IndexOutOfRange, i,
                     describe_gate(i) + ": qubit " + std::to_string(q) +
                         " outside [0, " + std::to_string(n) + ")");
      }
    }
    std::sort(qubits.begin(), qubits.end());
    if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
      return issue(ErrorCode::DuplicateIndex, i,
                   describe_gate(i) + ": repeated qubit index");
    }
    if (const auto *g = std::get_if<Generic1Q>(&gate)) {
      if (g->matrix.rows() != 2 || g->matrix.cols() != 2) {
        return issue(ErrorCode::DimensionMismatch, i,
                     describe_gate(i) + ": u1 matrix must be 2x2");
      }
      if (!is_unitary(g->matrix, kInputUnitaryTol)) {
        return issue(ErrorCode::NonUnitaryMatrix, i,
                     describe_gate(i) + ": u1 matrix is not unitary");
      }
    }
  }
  return std::nullopt;
}

ValidationResult validate(const QuditCircuit &circuit) {
  const auto &dims = circuit.dims();
  if (dims.empty()) {
    return issue(ErrorCode::InvalidArgument, std::nullopt,
                 "register needs at least one qudit");
  }
  for (int d : dims) {
    if (d < 2) {
      return issue(ErrorCode::InvalidArgument, std::nullopt,
                   "qudit dimension " + std::to_string(d) + " is below 2");
    }
  }
  const int m = circuit.num_qudits();
  const auto in_range = [m](int j) { return j >= 0 && j < m; };
  const auto &gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto check_matrix = [&](const Matrix &u, int qudit) -> ValidationResult {
      const int d = dims[static_cast<std::size_t>(qudit)];
      if (u.rows() != d || u.cols() != d) {
        return issue(ErrorCode::DimensionMismatch, i,
                     describe_gate(i) + ": matrix size does not match qudit " +
                         std::to_string(qudit) + " of dimension " + std::to_string(d));
      }
      if (!is_unitary(u, kInputUnitaryTol)) {
        return issue(ErrorCode::NonUnitaryMatrix, i,
                     describe_gate(i) + ": matrix is not unitary");
      }
      return std::nullopt;
    };
    if (const auto *g = std::get_if<Local1D>(&gates[i])) {
      if (!in_range(g->qudit)) {
        return issue(ErrorCode::IndexOutOfRange, i,
                     describe_gate(i) + ": qudit index out of range");
      }
      if (auto bad = check_matrix(g->matrix, g->qudit)) return bad;
      continue;
    }
    const auto &g = std::get<CtrlEmbedded>(gates[i]);
    if (!in_range(g.control) || !in_range(g.target)) {
      return issue(ErrorCode::IndexOutOfRange, i,
                   describe_gate(i) + ": qudit index out of range");
    }
    if (g.control == g.target) {
      return issue(ErrorCode::DuplicateIndex, i,
                   describe_gate(i) + ": control and target coincide");
    }
    if (g.levels.empty()) {
      return issue(ErrorCode::InvalidArgument, i,
                   describe_gate(i) + ": control level set is empty");
    }
    const int dc = dims[static_cast<std::size_t>(g.control)];
    for (int level : g.levels) {
      if (level < 0 || level >= dc) {
        return issue(ErrorCode::IndexOutOfRange, i,
                     describe_gate(i) + ": control level " + std::to_string(level) +
                         " outside [0, " + std::to_string(dc) + ")");
      }
    }
    std::vector<int> sorted = g.levels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return issue(ErrorCode::DuplicateIndex, i,
                   describe_gate(i) + ": repeated control level");
    }
    if (auto bad = check_matrix(g.matrix, g.target)) return bad;
  }
  return std::nullopt;
}

void require_valid(const QubitCircuit &circuit) {
  if (auto bad = validate(circuit)) throw Error(bad->code, bad->message);
}

void require_valid(const QuditCircuit &circuit) {
  if (auto bad = validate(circuit)) throw Error(bad->code, bad->message);
}

Matrix qubit_unitary(const QubitCircuit &circuit) {
  const int n = circuit.num_qubits();
  if (n > kMaxDenseQubits) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) +
                                         " qubits exceed the dense limit of " +
                                         std::to_string(kMaxDenseQubits));
  }
  require_valid(circuit);
  const std::vector<int> dims(static_cast<std::size_t>(n), 2);
  const Eigen::Index size = Eigen::Index{1} << n;
  Matrix u = Matrix::Identity(size, size);
  for (const auto &gate : circuit.gates()) {
    left_apply(u, dims, gate_qubits(gate), gate_operator(gate));
  }
  return u;
}

Matrix apply_to_columns(const QuditCircuit &circuit, Matrix columns) {
  require_valid(circuit);
  const auto &dims = circuit.dims();
  if (static_cast<std::size_t>(columns.rows()) != circuit.total_dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "column block height does not match the register dimension");
  }
  for (const auto &gate : circuit.gates()) {
    if (const auto *g = std::get_if<Local1D>(&gate)) {
      left_apply(columns, dims, {g->qudit}, g->matrix);
    } else {
      const auto &c = std::get<CtrlEmbedded>(gate);
      left_apply(columns, dims, {c.control, c.target},
                 ctrl_operator(c, dims[static_cast<std::size_t>(c.control)]));
    }
  }
  return columns;
}

Matrix qudit_unitary(const QuditCircuit &circuit) {
  const std::size_t total = circuit.total_dimension();
  if (total > kMaxDenseDimension) {
    std::ostringstream msg;
    msg << "register dimension " << total << " exceeds the dense limit of "
        << kMaxDenseDimension;
    throw Error(ErrorCode::TooLarge, msg.str());
  }
  require_valid(circuit);
  const auto size = static_cast<Eigen::Index>(total);
  return apply_to_columns(circuit, Matrix::Identity(size, size));
}

}  // namespace quditc

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

#include "quditc/statevector.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace quditc {

QuantumState::QuantumState(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "register needs a qudit");
  std::size_t total = 1;
  for (int d : dims_) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "qudit dimension below 2");
    if (total > kMaxStateDimension / static_cast<std::size_t>(d)) {
      throw Error(ErrorCode::TooLarge, "state dimension exceeds 2^24 amplitudes");
    }
    total *= static_cast<std::size_t>(d);
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t j = dims_.size(); j-- > 1;) {
    strides_[j - 1] = strides_[j] * static_cast<std::size_t>(dims_[j]);
  }
  amplitudes_.assign(total, Complex(0.0, 0.0));
  amplitudes_[0] = 1.0;
}

std::size_t QuantumState::index_of(std::span<const int> digits) const {
  if (digits.size() != dims_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "digit string length does not match register");
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (digits[j] < 0 || digits[j] >= dims_[j]) {
      throw Error(ErrorCode::IndexOutOfRange, "digit outside qudit range");
    }
    index += static_cast<std::size_t>(digits[j]) * strides_[j];
  }
  return index;
}

std::vector<int> QuantumState::digits_of(std::size_t index) const {
  std::vector<int> digits(dims_.size());
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    digits[j] = static_cast<int>((index / strides_[j]) % static_cast<std::size_t>(dims_[j]));
  }
  return digits;
}

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const auto &a : amplitudes_) total += std::norm(a);
  return total;
}

QuantumState init_state(std::vector<int> dims) { return QuantumState(std::move(dims)); }

namespace {

void check_qudit(const QuantumState &state, int qudit) {
  if (qudit < 0 || static_cast<std::size_t>(qudit) >= state.dims().size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qudit " + std::to_string(qudit) + " not in register");
  }
}

void check_matrix(const QuantumState &state, int qudit, const Matrix &u) {
  const int d = state.dims()[static_cast<std::size_t>(qudit)];
  if (u.rows() != d || u.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                    " for qudit of dimension " + std::to_string(d));
  }
}

// Applies u along the stride of `qudit` for every fiber whose base index
// passes `keep`. Each amplitude is read and written exactly once.
template <class Keep>
void apply_on_fibers(QuantumState &state, int qudit, const Matrix &u, Keep keep) {
  auto amps = state.amplitudes();
  const auto d = static_cast<std::size_t>(state.dims()[static_cast<std::size_t>(qudit)]);
  const std::size_t s = state.stride(qudit);
  const std::size_t block = d * s;
  std::vector<Complex> in(d), out(d);
  for (std::size_t hi = 0; hi < amps.size(); hi += block) {
    for (std::size_t lo = 0; lo < s; ++lo) {
      const std::size_t base = hi + lo;
      if (!keep(base)) continue;
      for (std::size_t k = 0; k < d; ++k) in[k] = amps[base + k * s];
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < d; ++k) {
          acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) * in[k];
        }
        out[r] = acc;
      }
      for (std::size_t k = 0; k < d; ++k) amps[base + k * s] = out[k];
    }
  }
}

}  // namespace

void apply_gate(QuantumState &state, const QuditGate &gate) {
  if (const auto *g = std::get_if<Local1D>(&gate)) {
    check_qudit(state, g->qudit);
    check_matrix(state, g->qudit, g->matrix);
    apply_on_fibers(state, g->qudit, g->matrix, [](std::size_t) { return true; });
    return;
  }
  const auto &g = std::get<CtrlEmbedded>(gate);
  check_qudit(state, g.control);
  check_qudit(state, g.target);
  if (g.control == g.target) {
    throw Error(ErrorCode::DuplicateIndex, "control and target coincide");
  }
  check_matrix(state, g.target, g.matrix);
  const int dc = state.dims()[static_cast<std::size_t>(g.control)];
  std::vector<bool> active(static_cast<std::size_t>(dc), false);
  for (int level : g.levels) {
    if (level < 0 || level >= dc) {
      throw Error(ErrorCode::IndexOutOfRange, "control level outside qudit range");
    }
    active[static_cast<std::size_t>(level)] = true;
  }
  const std::size_t cs = state.stride(g.control);
  const auto cd = static_cast<std::size_t>(dc);
  apply_on_fibers(state, g.target, g.matrix,
                  [&](std::size_t base) { return active[(base / cs) % cd]; });
}

void apply_multi_controlled_x(QuantumState &state, std::span<const int> controls, int target) {
  check_qudit(state, target);
  std::size_t control_bits = 0;
  for (int c : controls) {
    check_qudit(state, c);
    if (state.dims()[static_cast<std::size_t>(c)] != 2) {
      throw Error(ErrorCode::DimensionMismatch, "multi-controlled X needs qubit controls");
    }
    control_bits |= state.stride(c);
  }
  if (state.dims()[static_cast<std::size_t>(target)] != 2) {
    throw Error(ErrorCode::DimensionMismatch, "multi-controlled X needs a qubit target");
  }
  const std::size_t t = state.stride(target);
  if (control_bits & t) throw Error(ErrorCode::DuplicateIndex, "target is also a control");
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & control_bits) == control_bits && !(i & t)) std::swap(amps[i], amps[i | t]);
  }
}

QuantumState run(const QuditCircuit &circuit) {
  require_valid(circuit);
  QuantumState state(circuit.dims());
  for (const auto &gate : circuit.gates()) apply_gate(state, gate);
  return state;
}

QuantumState run(const QubitCircuit &circuit) {
  require_valid(circuit);
  QuantumState state(std::vector<int>(static_cast<std::size_t>(circuit.num_qubits()), 2));
  for (const auto &gate : circuit.gates()) {
    if (is_single_qubit(gate)) {
      apply_gate(state, Local1D{gate_qubits(gate).front(), single_qubit_matrix(gate)});
    } else if (const auto *g = std::get_if<Cnot>(&gate)) {
      apply_gate(state, CtrlEmbedded{g->control, {1}, g->target, gates::x()});
    } else if (const auto *g = std::get_if<Cz>(&gate)) {
      apply_gate(state, CtrlEmbedded{g->control, {1}, g->target, gates::z()});
    } else {
      const auto &m = std::get<Mcx>(gate);
      apply_multi_controlled_x(state, m.controls, m.target);
    }
  }
  return state;
}

std::vector<double> exact_distribution(const QuantumState &state) {
  std::vector<double> p;
  p.reserve(state.size());
  for (const auto &a : state.amplitudes()) p.push_back(std::norm(a));
  return p;
}

std::string outcome_key(std::span<const int> digits, std::span<const int> dims) {
  const bool compact = std::all_of(dims.begin(), dims.end(), [](int d) { return d <= 10; });
  std::string key;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (compact) {
      key.push_back(static_cast<char>('0' + digits[j]));
    } else {
      if (j > 0) key.push_back('-');
      key += std::to_string(digits[j]);
    }
  }
  return key;
}

std::vector<int> parse_outcome_key(const std::string &key, std::span<const int> dims) {
  const bool compact = std::all_of(dims.begin(), dims.end(), [](int d) { return d <= 10; });
  std::vector<int> digits;
  if (compact) {
    for (char ch : key) {
      if (ch < '0' || ch > '9') {
        throw Error(ErrorCode::Schema, "outcome key '" + key + "' has a non-digit");
      }
      digits.push_back(ch - '0');
    }
  } else {
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, '-')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::Schema, "outcome key '" + key + "' is malformed");
      }
      digits.push_back(std::stoi(part));
    }
  }
  if (digits.size() != dims.size()) {
    throw Error(ErrorCode::Schema, "outcome key '" + key + "' has the wrong length");
  }
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (digits[j] >= dims[j]) {
      throw Error(ErrorCode::Schema, "outcome key '" + key + "' exceeds a qudit dimension");
    }
  }
  return digits;
}

Counts sample(const QuantumState &state, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorCode::InvalidArgument, "shots must be at least 1");
  const auto p = exact_distribution(state);
  std::vector<double> cdf(p.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= kProbabilityFloor) total += p[i];
    cdf[i] = total;
  }
  std::mt19937_64 rng(seed);
  std::map<std::size_t, std::uint64_t> hits;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto index = static_cast<std::size_t>(it - cdf.begin());
    if (index >= cdf.size()) index = cdf.size() - 1;
    ++hits[index];
  }
  Counts counts;
  counts.dims = state.dims();
  counts.shots = shots;
  counts.seed = seed;
  counts.generator = kSamplerGenerator;
  for (const auto &[index, n] : hits) {
    counts.table[outcome_key(state.digits_of(index), state.dims())] = n;
  }
  return counts;
}

}  // namespace quditc

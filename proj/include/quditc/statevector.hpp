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

// Dense state-vector emulation of qudit registers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quditc/circuit.hpp"

namespace quditc {

inline constexpr std::size_t kMaxStateDimension = std::size_t{1} << 24;

// Probabilities below this are treated as exactly zero when sampling or
// checking support.
inline constexpr double kProbabilityFloor = 1e-15;

class QuantumState {
 public:
  // |0...0> on `dims`. Throws InvalidArgument for empty/short dims and
  // TooLarge beyond kMaxStateDimension.
  explicit QuantumState(std::vector<int> dims);

  const std::vector<int> &dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  // Distance of the place value of qudit j, i.e. prod_{k>j} d_k.
  std::size_t stride(int qudit) const { return strides_[static_cast<std::size_t>(qudit)]; }

  std::size_t index_of(std::span<const int> digits) const;
  std::vector<int> digits_of(std::size_t index) const;
  double norm_squared() const;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<Complex> amplitudes_;
};

QuantumState init_state(std::vector<int> dims);

// In-place application. Throws DimensionMismatch / IndexOutOfRange when the
// gate does not fit the register.
void apply_gate(QuantumState &state, const QuditGate &gate);

// X on `target` when every control qudit is at level 1 (qubit registers).
void apply_multi_controlled_x(QuantumState &state, std::span<const int> controls, int target);

QuantumState run(const QuditCircuit &circuit);

// Direct emulation of a qubit circuit on dims (2, ..., 2).
QuantumState run(const QubitCircuit &circuit);

// |amplitude|^2 in register index order.
std::vector<double> exact_distribution(const QuantumState &state);

inline constexpr const char *kSamplerGenerator = "mt19937_64";

struct Counts {
  std::vector<int> dims;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::map<std::string, std::uint64_t> table;

  friend bool operator==(const Counts &, const Counts &) = default;
};

// Outcome key: one character per qudit when every d <= 10, otherwise
// dash-separated decimal digits.
std::string outcome_key(std::span<const int> digits, std::span<const int> dims);
std::vector<int> parse_outcome_key(const std::string &key, std::span<const int> dims);

// N inverse-CDF draws in index order, one 53-bit uniform per shot.
Counts sample(const QuantumState &state, std::uint64_t shots, std::uint64_t seed);

}  // namespace quditc

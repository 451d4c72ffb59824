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

// Qubit-to-qudit mappings.
//
// A mapping assigns each qubit to exactly one qudit. Qudit j holds the ordered
// group (q_0, ..., q_{k-1}); a qubit basis state is stored in qudit j at level
// bin(x_{q_0} ... x_{q_{k-1}}) with q_0 as the most significant bit. Levels at
// or above 2^k are free and may serve as ancillary flags.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "quditc/error.hpp"

namespace quditc {

using Group = std::vector<int>;

struct LevelBudget {
  std::vector<int> free_count;               // d_j - 2^{m_j}
  std::vector<std::vector<int>> free_levels;  // {2^{m_j}, ..., d_j - 1}
};

class Mapping {
 public:
  // Throws InvalidArgument unless `groups` partitions {0..n-1} with
  // 2^{|group_j|} <= dims[j] and groups.size() == dims.size().
  Mapping(std::vector<Group> groups, std::vector<int> dims);

  int num_qubits() const noexcept { return num_qubits_; }
  int num_qudits() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<Group> &groups() const noexcept { return groups_; }
  const std::vector<int> &dims() const noexcept { return dims_; }

  int qudit_of(int qubit) const { return qudit_of_[static_cast<std::size_t>(qubit)]; }
  // Bit position inside the group, 0 being the most significant.
  int position_of(int qubit) const { return position_of_[static_cast<std::size_t>(qubit)]; }
  int group_size(int qudit) const {
    return static_cast<int>(groups_[static_cast<std::size_t>(qudit)].size());
  }
  // 2^{m_j}: the number of levels used by the encoding.
  int encoded_levels(int qudit) const { return 1 << group_size(qudit); }
  // Level mask selecting `qubit` inside its qudit's encoded level.
  int bit_mask(int qubit) const {
    return 1 << (group_size(qudit_of(qubit)) - 1 - position_of(qubit));
  }

  LevelBudget level_budget() const;

  // Index-level encoding: qubit index (qubit 0 MSB) to register index
  // (qudit 0 MSB).
  std::uint64_t encode_index(std::uint64_t x) const;

  friend bool operator==(const Mapping &a, const Mapping &b) {
    return a.groups_ == b.groups_ && a.dims_ == b.dims_;
  }

 private:
  std::vector<Group> groups_;
  std::vector<int> dims_;
  int num_qubits_ = 0;
  std::vector<int> qudit_of_;
  std::vector<int> position_of_;
};

// y_j = bin(x restricted to group j). `bits` has length n with values 0/1.
std::vector<int> encode_basis(std::span<const int> bits, const Mapping &mapping);

// Inverse of encode_basis. Throws NotInImage when a digit sits on a free
// level, InvalidArgument on malformed input.
std::vector<int> decode_basis(std::span<const int> digits, const Mapping &mapping);

bool image_membership(std::span<const int> digits, const Mapping &mapping);

// One qubit per qudit on levels {0,1}, remaining qudits empty.
Mapping trivial_mapping(int num_qubits, const std::vector<int> &dims);

// True when prod(dims) >= 2^n.
bool register_compatible(int num_qubits, const std::vector<int> &dims);

inline constexpr std::size_t kDefaultSearchLimit = 10000;

// Visits every mapping of n qubits onto dims (ordered groups, capacity
// respected) in lexicographic order of the group lists, stopping after
// `limit` mappings or when `visit` returns false. Throws Incompatible when
// prod(dims) < 2^n. Returns the number visited.
std::size_t for_each_mapping(int num_qubits, const std::vector<int> &dims,
                             std::size_t limit,
                             const std::function<bool(const Mapping &)> &visit);

std::vector<Mapping> enumerate_mappings(int num_qubits, const std::vector<int> &dims,
                                        std::size_t limit = kDefaultSearchLimit);

}  // namespace quditc

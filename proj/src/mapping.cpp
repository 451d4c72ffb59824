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

#include "quditc/mapping.hpp"

#include <cmath>
#include <string>

namespace quditc {

namespace {

// Largest group a qudit of dimension d can hold.
int capacity(int d) {
  int k = 0;
  while ((2 << k) <= d) ++k;
  return k;
}

}  // namespace

Mapping::Mapping(std::vector<Group> groups, std::vector<int> dims)
    : groups_(std::move(groups)), dims_(std::move(dims)) {
  if (groups_.size() != dims_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "mapping has " + std::to_string(groups_.size()) + " groups for " +
                    std::to_string(dims_.size()) + " qudits");
  }
  for (const auto &g : groups_) num_qubits_ += static_cast<int>(g.size());
  qudit_of_.assign(static_cast<std::size_t>(num_qubits_), -1);
  position_of_.assign(static_cast<std::size_t>(num_qubits_), -1);
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    const int d = dims_[j];
    if (d < 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "qudit " + std::to_string(j) + " has dimension below 2");
    }
    const auto &g = groups_[j];
    if (static_cast<int>(g.size()) > capacity(d)) {
      throw Error(ErrorCode::InvalidArgument,
                  "qudit " + std::to_string(j) + " of dimension " + std::to_string(d) +
                      " cannot hold " + std::to_string(g.size()) + " qubits");
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      const int q = g[k];
      if (q < 0 || q >= num_qubits_) {
        throw Error(ErrorCode::InvalidArgument,
                    "qubit " + std::to_string(q) + " outside [0, " +
                        std::to_string(num_qubits_) + ")");
      }
      if (qudit_of_[static_cast<std::size_t>(q)] != -1) {
        throw Error(ErrorCode::InvalidArgument,
                    "qubit " + std::to_string(q) + " assigned twice");
      }
      qudit_of_[static_cast<std::size_t>(q)] = static_cast<int>(j);
      position_of_[static_cast<std::size_t>(q)] = static_cast<int>(k);
    }
  }
}

LevelBudget Mapping::level_budget() const {
  LevelBudget budget;
  for (int j = 0; j < num_qudits(); ++j) {
    const int used = encoded_levels(j);
    const int d = dims_[static_cast<std::size_t>(j)];
    budget.free_count.push_back(d - used);
    std::vector<int> levels;
    for (int l = used; l < d; ++l) levels.push_back(l);
    budget.free_levels.push_back(std::move(levels));
  }
  return budget;
}

std::uint64_t Mapping::encode_index(std::uint64_t x) const {
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    std::uint64_t digit = 0;
    for (int q : groups_[j]) {
      const auto bit = (x >> (num_qubits_ - 1 - q)) & 1U;
      digit = (digit << 1) | bit;
    }
    index = index * static_cast<std::uint64_t>(dims_[j]) + digit;
  }
  return index;
}

std::vector<int> encode_basis(std::span<const int> bits, const Mapping &mapping) {
  if (static_cast<int>(bits.size()) != mapping.num_qubits()) {
    throw Error(ErrorCode::InvalidArgument, "bit string length does not match mapping");
  }
  std::vector<int> digits;
  digits.reserve(mapping.groups().size());
  for (const auto &group : mapping.groups()) {
    int digit = 0;
    for (int q : group) digit = (digit << 1) | (bits[static_cast<std::size_t>(q)] & 1);
    digits.push_back(digit);
  }
  return digits;
}

std::vector<int> decode_basis(std::span<const int> digits, const Mapping &mapping) {
  if (static_cast<int>(digits.size()) != mapping.num_qudits()) {
    throw Error(ErrorCode::InvalidArgument, "digit string length does not match mapping");
  }
  std::vector<int> bits(static_cast<std::size_t>(mapping.num_qubits()), 0);
  for (int j = 0; j < mapping.num_qudits(); ++j) {
    const int y = digits[static_cast<std::size_t>(j)];
    if (y < 0 || y >= mapping.dims()[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::InvalidArgument,
                  "digit " + std::to_string(y) + " invalid for qudit " + std::to_string(j));
    }
    if (y >= mapping.encoded_levels(j)) {
      throw Error(ErrorCode::NotInImage,
                  "qudit " + std::to_string(j) + " at free level " + std::to_string(y));
    }
    const auto &group = mapping.groups()[static_cast<std::size_t>(j)];
    const int k = static_cast<int>(group.size());
    for (int p = 0; p < k; ++p) {
      bits[static_cast<std::size_t>(group[static_cast<std::size_t>(p)])] = (y >> (k - 1 - p)) & 1;
    }
  }
  return bits;
}

bool image_membership(std::span<const int> digits, const Mapping &mapping) {
  if (static_cast<int>(digits.size()) != mapping.num_qudits()) return false;
  for (int j = 0; j < mapping.num_qudits(); ++j) {
    const int y = digits[static_cast<std::size_t>(j)];
    if (y < 0 || y >= mapping.encoded_levels(j)) return false;
  }
  return true;
}

Mapping trivial_mapping(int num_qubits, const std::vector<int> &dims) {
  if (static_cast<int>(dims.size()) < num_qubits) {
    throw Error(ErrorCode::InsufficientQudits,
                std::to_string(dims.size()) + " qudits cannot host " +
                    std::to_string(num_qubits) + " qubits one-to-one");
  }
  std::vector<Group> groups(dims.size());
  for (int q = 0; q < num_qubits; ++q) groups[static_cast<std::size_t>(q)] = {q};
  return Mapping(std::move(groups), dims);
}

bool register_compatible(int num_qubits, const std::vector<int> &dims) {
  double log2_size = 0.0;
  for (int d : dims) {
    if (d < 1) return false;
    log2_size += std::log2(static_cast<double>(d));
  }
  // Exact integer comparison when it fits.
  if (num_qubits < 63 && log2_size < 62.0) {
    std::uint64_t size = 1;
    for (int d : dims) size *= static_cast<std::uint64_t>(d);
    return size >= (std::uint64_t{1} << num_qubits);
  }
  return log2_size >= static_cast<double>(num_qubits);
}

namespace {

class MappingEnumerator {
 public:
  MappingEnumerator(int n, const std::vector<int> &dims, std::size_t limit,
                    const std::function<bool(const Mapping &)> &visit)
      : n_(n), dims_(dims), limit_(limit), visit_(visit),
        used_(static_cast<std::size_t>(n), false), groups_(dims.size()) {
    for (int d : dims) capacity_.push_back(capacity(d));
    suffix_capacity_.assign(dims.size() + 1, 0);
    for (std::size_t j = dims.size(); j-- > 0;) {
      suffix_capacity_[j] = suffix_capacity_[j + 1] + capacity_[j];
    }
  }

  std::size_t run() {
    if (limit_ > 0) place_group(0, 0);
    return count_;
  }

 private:
  // Returns false once enumeration must stop.
  bool place_group(std::size_t j, int placed) {
    if (j == dims_.size()) {
      if (placed != n_) return true;
      ++count_;
      const bool more = visit_(Mapping(groups_, dims_));
      return more && count_ < limit_;
    }
    return extend_group(j, placed);
  }

  // Pre-order walk over duplicate-free sequences of unused qubits, which is
  // lexicographic order on the group.
  bool extend_group(std::size_t j, int placed) {
    const int remaining = n_ - placed;
    if (remaining <= suffix_capacity_[j + 1]) {
      if (!place_group(j + 1, placed)) return false;
    }
    if (static_cast<int>(groups_[j].size()) == capacity_[j]) return true;
    for (int q = 0; q < n_; ++q) {
      if (used_[static_cast<std::size_t>(q)]) continue;
      used_[static_cast<std::size_t>(q)] = true;
      groups_[j].push_back(q);
      const bool keep_going = extend_group(j, placed + 1);
      groups_[j].pop_back();
      used_[static_cast<std::size_t>(q)] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  const std::vector<int> &dims_;
  std::size_t limit_;
  const std::function<bool(const Mapping &)> &visit_;
  std::vector<bool> used_;
  std::vector<Group> groups_;
  std::vector<int> capacity_;
  std::vector<int> suffix_capacity_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_mapping(int num_qubits, const std::vector<int> &dims,
                             std::size_t limit,
                             const std::function<bool(const Mapping &)> &visit) {
  if (num_qubits < 1 || dims.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need at least one qubit and one qudit");
  }
  for (int d : dims) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "qudit dimension below 2");
  }
  if (!register_compatible(num_qubits, dims)) {
    throw Error(ErrorCode::Incompatible,
                "register too small: prod(dims) < 2^" + std::to_string(num_qubits));
  }
  return MappingEnumerator(num_qubits, dims, limit, visit).run();
}

std::vector<Mapping> enumerate_mappings(int num_qubits, const std::vector<int> &dims,
                                        std::size_t limit) {
  std::vector<Mapping> out;
  for_each_mapping(num_qubits, dims, limit, [&](const Mapping &m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace quditc

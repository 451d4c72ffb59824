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

// Test-only oracles and generators. Nothing here calls into the lowering
// passes, so the checks built on top stay independent of them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quditc/circuit.hpp"
#include "quditc/mapping.hpp"

namespace quditc::oracle {

inline std::string read_text(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline QubitCircuit five_qubit_reference() {
  return QubitCircuit(5, {Cnot{1, 3}, Named1Q{NamedGate::H, 0}, Named1Q{NamedGate::H, 1},
                          Named1Q{NamedGate::H, 2}, Named1Q{NamedGate::H, 3},
                          Mcx{{0, 1, 2, 3}, 4}});
}

inline std::vector<Group> five_qubit_groups() { return {{1, 3}, {0}, {2}, {4}}; }

// Register index of phi(x), computed straight from the group lists.
inline std::uint64_t oracle_encode(std::uint64_t x, const std::vector<Group> &groups,
                                   const std::vector<int> &dims, int n) {
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    int digit = 0;
    for (int q : groups[j]) digit = 2 * digit + static_cast<int>((x >> (n - 1 - q)) & 1U);
    index = index * static_cast<std::uint64_t>(dims[j]) + static_cast<std::uint64_t>(digit);
  }
  return index;
}

// Isometry V with V |x> = |phi(x)>.
inline Matrix isometry(const std::vector<Group> &groups, const std::vector<int> &dims, int n) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(total), Eigen::Index{1} << n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    v(static_cast<Eigen::Index>(oracle_encode(x, groups, dims, n)),
      static_cast<Eigen::Index>(x)) = 1.0;
  }
  return v;
}

// max-abs(a - e^{i theta} b), theta fitted on the largest-magnitude entry of b.
inline double phase_fitted_distance(const Matrix &a, const Matrix &b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const Complex phase = a(r, c) / b(r, c);
  const Complex unit = std::abs(phase) > 0 ? phase / std::abs(phase) : Complex(1.0, 0.0);
  return (a - unit * b).cwiseAbs().maxCoeff();
}

// Every mapping by brute force: each qubit picks a qudit, each group takes
// every internal order; capacity filtered, sorted, deduplicated.
inline std::vector<std::vector<Group>> brute_force_mappings(int n, const std::vector<int> &dims) {
  const int m = static_cast<int>(dims.size());
  std::set<std::vector<Group>> found;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Group> groups(static_cast<std::size_t>(m));
    for (int q = 0; q < n; ++q) groups[static_cast<std::size_t>(assign[static_cast<std::size_t>(q)])].push_back(q);
    bool fits = true;
    for (int j = 0; j < m; ++j) {
      if ((1 << groups[static_cast<std::size_t>(j)].size()) > dims[static_cast<std::size_t>(j)]) fits = false;
    }
    if (fits) {
      // Odometer over the permutations of every group.
      std::vector<Group> perm = groups;
      for (auto &g : perm) std::sort(g.begin(), g.end());
      while (true) {
        found.insert(perm);
        int j = m - 1;
        while (j >= 0 && !std::next_permutation(perm[static_cast<std::size_t>(j)].begin(),
                                                perm[static_cast<std::size_t>(j)].end())) {
          --j;
        }
        if (j < 0) break;
      }
    }
    int q = 0;
    while (q < n && ++assign[static_cast<std::size_t>(q)] == m) assign[static_cast<std::size_t>(q++)] = 0;
    if (q == n) break;
  }
  return {found.begin(), found.end()};
}

// Uniformly shuffled partition of n qubits onto dims respecting capacity, or
// empty when the draw fails.
inline std::vector<Group> random_groups(std::mt19937_64 &rng, int n, const std::vector<int> &dims) {
  std::vector<int> slots;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    int cap = 0;
    while ((2 << cap) <= dims[j]) ++cap;
    for (int k = 0; k < cap; ++k) slots.push_back(static_cast<int>(j));
  }
  if (static_cast<int>(slots.size()) < n) return {};
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) qubits[static_cast<std::size_t>(q)] = q;
  std::shuffle(qubits.begin(), qubits.end(), rng);
  std::vector<Group> groups(dims.size());
  for (int i = 0; i < n; ++i) {
    groups[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])].push_back(qubits[static_cast<std::size_t>(i)]);
  }
  return groups;
}

inline int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Distinct qubits drawn from [0, n).
inline std::vector<int> distinct_qubits(std::mt19937_64 &rng, int n, int count) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(count));
  return all;
}

// Gates from {H, X, T, CNOT, CZ, MCX}.
inline QubitCircuit random_circuit(std::mt19937_64 &rng, int n, int gate_count) {
  std::vector<QubitGate> gates;
  for (int i = 0; i < gate_count; ++i) {
    const int kind = uniform_int(rng, 0, n >= 2 ? 5 : 2);
    if (kind <= 2) {
      const NamedGate name = kind == 0 ? NamedGate::H : kind == 1 ? NamedGate::X : NamedGate::T;
      gates.emplace_back(Named1Q{name, uniform_int(rng, 0, n - 1)});
    } else if (kind <= 4) {
      const auto q = distinct_qubits(rng, n, 2);
      if (kind == 3) {
        gates.emplace_back(Cnot{q[0], q[1]});
      } else {
        gates.emplace_back(Cz{q[0], q[1]});
      }
    } else {
      const int k = uniform_int(rng, 1, n - 1);
      auto q = distinct_qubits(rng, n, k + 1);
      const int target = q.back();
      q.pop_back();
      gates.emplace_back(Mcx{q, target});
    }
  }
  return QubitCircuit(n, std::move(gates));
}

inline Matrix random_unitary(std::mt19937_64 &rng, int d) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) a(r, c) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(d, d);
}

}  // namespace quditc::oracle

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

// Pull-back of qudit read-out through the inverse mapping and consistency
// checks between qudit and qubit output distributions.

#include <span>
#include <vector>

#include "quditc/mapping.hpp"
#include "quditc/statevector.hpp"

namespace quditc {

// Re-keys qudit outcomes as qubit bit strings. Throws SupportViolation naming
// every key outside image(mapping) together with its count.
Counts decode_counts(const Counts &counts, const Mapping &mapping);

// p_qb(x) = p_qd(phi(x)) for every x in {0,1}^n, qubit index order.
std::vector<double> pull_back(std::span<const double> qudit_distribution,
                              const Mapping &mapping);

// Probability mass on register indices outside image(mapping).
double off_image_mass(std::span<const double> qudit_distribution, const Mapping &mapping);

struct ConsistencyReport {
  double max_difference = 0.0;  // max over image of |p_qd(y) - p_qb(phi^-1(y))|
  double off_image_mass = 0.0;
  bool pass = false;            // both figures within tolerance
};

ConsistencyReport verify_consistency(std::span<const double> qudit_distribution,
                                     std::span<const double> qubit_distribution,
                                     const Mapping &mapping, double tol);

// 1/2 sum |p - q|. Throws DimensionMismatch on differing lengths.
double total_variation_distance(std::span<const double> p, std::span<const double> q);

}  // namespace quditc

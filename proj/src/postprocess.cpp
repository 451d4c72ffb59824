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

#include "quditc/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace quditc {

namespace {

std::size_t register_size(const Mapping &mapping) {
  std::size_t total = 1;
  for (int d : mapping.dims()) total *= static_cast<std::size_t>(d);
  return total;
}

void check_length(std::span<const double> p, std::size_t expected, const char *what) {
  if (p.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has " + std::to_string(p.size()) +
                    " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

Counts decode_counts(const Counts &counts, const Mapping &mapping) {
  if (counts.dims != mapping.dims()) {
    throw Error(ErrorCode::DimensionMismatch, "counts register does not match the mapping");
  }
  const std::vector<int> qubit_dims(static_cast<std::size_t>(mapping.num_qubits()), 2);
  Counts out;
  out.dims = qubit_dims;
  out.shots = counts.shots;
  out.seed = counts.seed;
  out.generator = counts.generator;

  std::ostringstream violations;
  std::uint64_t violating = 0;
  for (const auto &[key, n] : counts.table) {
    const auto digits = parse_outcome_key(key, counts.dims);
    if (!image_membership(digits, mapping)) {
      violations << (violating++ ? ", " : "") << key << " x" << n;
      continue;
    }
    const auto bits = decode_basis(digits, mapping);
    auto [it, inserted] = out.table.emplace(outcome_key(bits, qubit_dims), n);
    if (!inserted) {
      // An injective mapping never sends two keys to one bit string.
      throw Error(ErrorCode::InvalidArgument, "two outcomes decode to " + it->first);
    }
  }
  if (violating) {
    throw Error(ErrorCode::SupportViolation,
                "outcomes outside the mapping image: " + violations.str());
  }
  return out;
}

std::vector<double> pull_back(std::span<const double> qudit_distribution,
                              const Mapping &mapping) {
  check_length(qudit_distribution, register_size(mapping), "qudit distribution");
  const std::uint64_t size = std::uint64_t{1} << mapping.num_qubits();
  std::vector<double> out(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    out[x] = qudit_distribution[mapping.encode_index(x)];
  }
  return out;
}

double off_image_mass(std::span<const double> qudit_distribution, const Mapping &mapping) {
  check_length(qudit_distribution, register_size(mapping), "qudit distribution");
  // Sum the complement directly; 1 - sum(image) would lose the small tail.
  std::vector<bool> in_image(qudit_distribution.size(), false);
  const std::uint64_t size = std::uint64_t{1} << mapping.num_qubits();
  for (std::uint64_t x = 0; x < size; ++x) in_image[mapping.encode_index(x)] = true;
  double off = 0.0;
  for (std::size_t i = 0; i < qudit_distribution.size(); ++i) {
    if (!in_image[i]) off += qudit_distribution[i];
  }
  return off;
}

ConsistencyReport verify_consistency(std::span<const double> qudit_distribution,
                                     std::span<const double> qubit_distribution,
                                     const Mapping &mapping, double tol) {
  check_length(qubit_distribution, std::size_t{1} << mapping.num_qubits(), "qubit distribution");
  const auto pulled = pull_back(qudit_distribution, mapping);
  ConsistencyReport report;
  for (std::size_t x = 0; x < pulled.size(); ++x) {
    report.max_difference =
        std::max(report.max_difference, std::abs(pulled[x] - qubit_distribution[x]));
  }
  report.off_image_mass = off_image_mass(qudit_distribution, mapping);
  report.pass = report.max_difference <= tol && report.off_image_mass <= tol;
  return report;
}

double total_variation_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "distributions differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

}  // namespace quditc

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

#include <random>

#include <gtest/gtest.h>

#include "quditc/transpiler.hpp"
#include "support/oracles.hpp"

using namespace quditc;

namespace {

const std::vector<int> kQuarts = {4, 4, 4, 4};

Counts make_counts(std::vector<int> dims, std::map<std::string, std::uint64_t> table) {
  Counts c;
  c.dims = std::move(dims);
  for (const auto &[k, n] : table) c.shots += n;
  c.seed = 5;
  c.generator = kSamplerGenerator;
  c.table = std::move(table);
  return c;
}

}  // namespace

TEST(decode_counts, reference_examples) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  EXPECT_EQ(decode_counts(make_counts(kQuarts, {{"3111", 10}}), m).table,
            (std::map<std::string, std::uint64_t>{{"11111", 10}}));
  const auto zeros = decode_counts(make_counts(kQuarts, {{"0000", 5}}), m);
  EXPECT_EQ(zeros.table, (std::map<std::string, std::uint64_t>{{"00000", 5}}));
  EXPECT_EQ(zeros.dims, std::vector<int>(5, 2));
  EXPECT_EQ(zeros.shots, 5u);
  EXPECT_EQ(zeros.seed, 5u);
}

TEST(decode_counts, free_level_is_support_violation) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  try {
    decode_counts(make_counts(kQuarts, {{"0200", 1}, {"0000", 3}}), m);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SupportViolation);
    EXPECT_NE(std::string(e.what()).find("0200 x1"), std::string::npos);
  }
}

TEST(verify_consistency, identical_distributions) {
  const Mapping m = trivial_mapping(2, {2, 2});
  const std::vector<double> p = {0.25, 0.25, 0.5, 0.0};
  const auto report = verify_consistency(p, p, m, 1e-9);
  EXPECT_EQ(report.max_difference, 0.0);
  EXPECT_EQ(report.off_image_mass, 0.0);
  EXPECT_TRUE(report.pass);
}

TEST(verify_consistency, reference_circuit) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const auto c = oracle::five_qubit_reference();
  const auto p_qd = exact_distribution(run(transpile(c, m)));
  const auto p_qb = exact_distribution(run(c));
  const auto report = verify_consistency(p_qd, p_qb, m, 1e-9);
  EXPECT_LE(report.max_difference, 1e-9);
  EXPECT_LE(report.off_image_mass, 1e-12);
  EXPECT_TRUE(report.pass);
  EXPECT_LE(total_variation_distance(pull_back(p_qd, m), p_qb), 1e-9);
}

TEST(verify_consistency, dropped_gate_fails) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const auto c = oracle::five_qubit_reference();
  auto gates = transpile(c, m).gates();
  // Drop one step of the ladder: a flag is left on a free level.
  gates.erase(gates.begin() + 5);
  const auto p_qd = exact_distribution(run(QuditCircuit(kQuarts, gates)));
  const auto report = verify_consistency(p_qd, exact_distribution(run(c)), m, 1e-9);
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.max_difference + report.off_image_mass, 1e-3);

  auto no_h = transpile(c, m).gates();
  no_h.erase(no_h.begin() + 1);
  const auto p_no_h = exact_distribution(run(QuditCircuit(kQuarts, no_h)));
  const auto local = verify_consistency(p_no_h, exact_distribution(run(c)), m, 1e-9);
  EXPECT_FALSE(local.pass);
  EXPECT_GT(local.max_difference, 1e-3);
}

TEST(off_image_mass, counts_free_levels) {
  const Mapping m({{0}}, {3});
  const std::vector<double> p = {0.5, 0.2, 0.3};
  EXPECT_NEAR(off_image_mass(p, m), 0.3, 1e-15);
  EXPECT_EQ(pull_back(p, m), (std::vector<double>{0.5, 0.2}));
}

TEST(total_variation_distance, examples) {
  const std::vector<double> p = {0.5, 0.5};
  EXPECT_EQ(total_variation_distance(p, p), 0.0);
  EXPECT_EQ(total_variation_distance(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 1.0}), 1.0);
  EXPECT_NEAR(total_variation_distance(p, std::vector<double>{0.75, 0.25}), 0.25, 1e-15);
  EXPECT_THROW(total_variation_distance(p, std::vector<double>{1.0}), Error);
}

TEST(postprocess_property, decode_inverts_synthetic_counts) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 6);
    std::vector<int> dims;
    const int mq = oracle::uniform_int(rng, 1, 5);
    for (int j = 0; j < mq; ++j) dims.push_back(oracle::uniform_int(rng, 2, 9));
    const auto groups = oracle::random_groups(rng, n, dims);
    if (groups.empty()) continue;
    const Mapping m(groups, dims);

    std::map<std::string, std::uint64_t> qubit_table;
    std::map<std::string, std::uint64_t> qudit_table;
    const std::vector<int> qubit_dims(static_cast<std::size_t>(n), 2);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      if (oracle::uniform_int(rng, 0, 2) == 0) continue;
      std::vector<int> bits(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) bits[static_cast<std::size_t>(q)] = static_cast<int>((x >> (n - 1 - q)) & 1U);
      const auto count = static_cast<std::uint64_t>(oracle::uniform_int(rng, 1, 1000));
      qubit_table[outcome_key(bits, qubit_dims)] = count;
      qudit_table[outcome_key(encode_basis(bits, m), dims)] = count;
    }
    const Counts qudit = make_counts(dims, qudit_table);
    const Counts decoded = decode_counts(qudit, m);
    EXPECT_EQ(decoded.table, qubit_table);
    EXPECT_EQ(decoded.shots, qudit.shots);
  }
}

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

#include "quditc/transpiler.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace quditc;

namespace {

const std::vector<int> kQuarts = {4, 4, 4, 4};

std::size_t two_qudit_count(const std::vector<QuditGate> &gates) {
  return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), is_two_qudit));
}

// max-abs(V^dag U_qd V - e^{i theta} U_qb).
double image_distance(const QubitCircuit &qubit, const QuditCircuit &qudit, const Mapping &m) {
  const Matrix v = oracle::isometry(m.groups(), m.dims(), m.num_qubits());
  const Matrix restricted = v.adjoint() * apply_to_columns(qudit, v);
  return oracle::phase_fitted_distance(restricted, qubit_unitary(qubit));
}

// Largest amplitude left outside image(phi) over all encoded inputs.
double leaked_amplitude(const QuditCircuit &qudit, const Mapping &m) {
  const Matrix v = oracle::isometry(m.groups(), m.dims(), m.num_qubits());
  const Matrix out = apply_to_columns(qudit, v);
  std::vector<bool> in_image(static_cast<std::size_t>(out.rows()), false);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.num_qubits()); ++x) {
    in_image[m.encode_index(x)] = true;
  }
  double worst = 0.0;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    if (in_image[static_cast<std::size_t>(r)]) continue;
    worst = std::max(worst, out.row(r).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<int> random_dims(std::mt19937_64 &rng, int n, int lo, int hi, std::size_t max_total) {
  while (true) {
    std::vector<int> dims;
    const int m = oracle::uniform_int(rng, 1, n);
    std::size_t total = 1;
    for (int j = 0; j < m; ++j) {
      dims.push_back(oracle::uniform_int(rng, lo, hi));
      total *= static_cast<std::size_t>(dims.back());
    }
    if (total <= max_total && total >= (std::size_t{1} << n)) return dims;
  }
}

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(embed_single_qubit, x_on_qutrit) {
  const int image[] = {1, 0, 2};
  EXPECT_TRUE(exactly_equal(embed_single_qubit(gates::x(), 0, 1, 3), permutation_matrix(image)));
}

TEST(embed_single_qubit, h_high_bit_of_ququart) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix expected(4, 4);
  expected << r, 0, r, 0, 0, r, 0, r, r, 0, -r, 0, 0, r, 0, -r;
  EXPECT_LT((embed_single_qubit(gates::h(), 0, 2, 4) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(embed_single_qubit, z_low_bit_with_free_level) {
  Matrix expected = Matrix::Zero(5, 5);
  const double diag[] = {1, -1, 1, -1, 1};
  for (int i = 0; i < 5; ++i) expected(i, i) = diag[i];
  EXPECT_TRUE(exactly_equal(embed_single_qubit(gates::z(), 1, 2, 5), expected));
}

TEST(lower_single_qubit_gate, targets_carrier_qudit) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const Local1D g = lower_single_qubit_gate(Named1Q{NamedGate::X, 3}, m);
  EXPECT_EQ(g.qudit, 0);
  const int image[] = {1, 0, 3, 2};
  EXPECT_TRUE(exactly_equal(g.matrix, permutation_matrix(image)));
}

TEST(lower_cnot, co_resident_is_local_permutation) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const auto gates = lower_cnot(1, 3, m);
  ASSERT_EQ(gates.size(), 1u);
  const auto *local = std::get_if<Local1D>(&gates[0]);
  ASSERT_NE(local, nullptr);
  const int image[] = {0, 1, 3, 2};
  EXPECT_EQ(local->qudit, 0);
  EXPECT_TRUE(exactly_equal(local->matrix, permutation_matrix(image)));
  EXPECT_EQ(two_qudit_count(gates), 0u);
}

TEST(lower_cnot, across_single_qubit_qudits) {
  const Mapping m({{0}, {1}, {2}}, {4, 4, 4});
  const auto gates = lower_cnot(0, 2, m);
  ASSERT_EQ(gates.size(), 1u);
  const auto &g = std::get<CtrlEmbedded>(gates[0]);
  EXPECT_EQ(g.control, 0);
  EXPECT_EQ(g.target, 2);
  EXPECT_EQ(g.levels, (std::vector<int>{1}));
  const int image[] = {1, 0, 2, 3};
  EXPECT_TRUE(exactly_equal(g.matrix, permutation_matrix(image)));
}

TEST(lower_cnot, control_is_high_bit_of_pair) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const auto gates = lower_cnot(1, 0, m);
  ASSERT_EQ(gates.size(), 1u);
  const auto &g = std::get<CtrlEmbedded>(gates[0]);
  EXPECT_EQ(g.control, 0);
  EXPECT_EQ(g.levels, (std::vector<int>{2, 3}));
  EXPECT_EQ(g.target, 1);
}

TEST(lower_cz, co_resident_is_phase) {
  const Mapping m({{0, 1}}, {5});
  const auto gates = lower_cz(0, 1, m);
  const auto &g = std::get<Local1D>(gates.at(0));
  Matrix expected = Matrix::Identity(5, 5);
  expected(3, 3) = -1.0;
  EXPECT_TRUE(exactly_equal(g.matrix, expected));
}

TEST(lower_mcx, reference_toffoli_uses_five_gates) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const int controls[] = {0, 1, 2, 3};
  const auto gates = lower_mcx(controls, 4, m);
  EXPECT_EQ(gates.size(), 5u);
  EXPECT_EQ(two_qudit_count(gates), 5u);
  EXPECT_EQ(carrier_count(controls, 4, m), 3);
  // The pair qudit has no free level and heads the ladder on level 3; the
  // other carriers use level 2 as their flag.
  const auto &first = std::get<CtrlEmbedded>(gates[0]);
  EXPECT_EQ(first.control, 0);
  EXPECT_EQ(first.levels, (std::vector<int>{3}));
  const auto &apply = std::get<CtrlEmbedded>(gates[2]);
  EXPECT_EQ(apply.target, 3);
  EXPECT_EQ(apply.levels, (std::vector<int>{2}));
  EXPECT_EQ(gates[0], gates[4]);
  EXPECT_EQ(gates[1], gates[3]);

  const QuditCircuit lowered(kQuarts, gates);
  const QubitCircuit reference(5, {Mcx{{0, 1, 2, 3}, 4}});
  EXPECT_LE(image_distance(reference, lowered, m), 1e-8);
  EXPECT_LE(leaked_amplitude(lowered, m), 1e-9);
}

TEST(lower_mcx, qutrit_toffoli_matches_dense_oracle) {
  const Mapping m = trivial_mapping(3, {3, 3, 3});
  const int controls[] = {0, 1};
  const auto gates = lower_mcx(controls, 2, m);
  EXPECT_EQ(two_qudit_count(gates), 3u);
  const QuditCircuit lowered({3, 3, 3}, gates);

  Matrix toffoli = Matrix::Identity(8, 8);
  toffoli(6, 6) = toffoli(7, 7) = 0.0;
  toffoli(6, 7) = toffoli(7, 6) = 1.0;
  const Matrix v = oracle::isometry(m.groups(), m.dims(), 3);
  const Matrix u = qudit_unitary(lowered);
  EXPECT_LT((v.adjoint() * u * v - toffoli).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((u * v - v * toffoli).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(lower_mcx, single_control_is_one_gate) {
  const Mapping m = trivial_mapping(2, {4, 4});
  const int controls[] = {0};
  const auto gates = lower_mcx(controls, 1, m);
  ASSERT_EQ(gates.size(), 1u);
  EXPECT_EQ(gates, lower_cnot(0, 1, m));
}

TEST(lower_mcx, controls_folded_into_target_qudit) {
  const Mapping m({{0, 1, 2}}, {8});
  const int controls[] = {0, 1};
  const auto gates = lower_mcx(controls, 2, m);
  ASSERT_EQ(gates.size(), 1u);
  EXPECT_EQ(two_qudit_count(gates), 0u);
  const QubitCircuit reference(3, {Mcx{{0, 1}, 2}});
  EXPECT_LE(image_distance(reference, QuditCircuit({8}, gates), m), 1e-12);
}

TEST(lower_mcx, two_cramped_carriers_fail) {
  const Mapping m({{0, 1}, {2, 3}, {4}}, {4, 4, 2});
  const int controls[] = {0, 1, 2, 3};
  EXPECT_EQ(code_of([&] { lower_mcx(controls, 4, m); }), ErrorCode::InsufficientFreeLevels);
}

TEST(transpile, reference_circuit_has_five_two_qudit_gates) {
  const Mapping m(oracle::five_qubit_groups(), kQuarts);
  const QuditCircuit lowered = transpile(oracle::five_qubit_reference(), m);
  EXPECT_EQ(two_qudit_count(lowered.gates()), 5u);
  EXPECT_EQ(lowered.gates().size(), 10u);
  EXPECT_EQ(two_qudit_count(transpile(QubitCircuit(5, {Cnot{1, 3}}), m).gates()), 0u);
}

TEST(transpile, empty_circuit) {
  const QuditCircuit lowered = transpile(QubitCircuit(2), trivial_mapping(2, {3, 3}));
  EXPECT_TRUE(lowered.gates().empty());
  EXPECT_EQ(lowered.dims(), (std::vector<int>{3, 3}));
}

TEST(transpile, bell_inside_one_ququart) {
  const Mapping m({{0, 1}}, {4});
  const QuditCircuit lowered = transpile(QubitCircuit(2, {Named1Q{NamedGate::H, 0}, Cnot{0, 1}}), m);
  ASSERT_EQ(lowered.gates().size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Local1D>(lowered.gates()[0]));
  EXPECT_TRUE(std::holds_alternative<Local1D>(lowered.gates()[1]));
}

TEST(transpile, width_mismatch) {
  EXPECT_EQ(code_of([] { transpile(QubitCircuit(3), trivial_mapping(2, {3, 3})); }),
            ErrorCode::InvalidArgument);
}

TEST(baseline, mcx_four_controls_is_thirty_cnots) {
  const QubitCircuit c(5, {Mcx{{0, 1, 2, 3}, 4}});
  const QubitCircuit lowered = baseline_qubit_lowering(c, 2);
  EXPECT_EQ(lowered.num_qubits(), 7);
  EXPECT_EQ(count_two_qubit_gates(lowered), 30u);
}

TEST(baseline, reference_circuit_is_thirty_one) {
  EXPECT_EQ(required_ancillas(oracle::five_qubit_reference()), 2);
  EXPECT_EQ(count_two_qubit_gates(baseline_qubit_lowering(oracle::five_qubit_reference(), 2)), 31u);
}

TEST(baseline, toffoli_is_six_cnots) {
  const QubitCircuit c(3, {Mcx{{0, 1}, 2}});
  EXPECT_EQ(count_two_qubit_gates(baseline_qubit_lowering(c, 0)), 6u);
}

TEST(baseline, insufficient_ancillas) {
  EXPECT_EQ(code_of([] { baseline_qubit_lowering(oracle::five_qubit_reference(), 1); }),
            ErrorCode::InsufficientAncillas);
}

TEST(baseline_property, equivalent_and_restores_ancillas) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 5);
    const QubitCircuit c = oracle::random_circuit(rng, n, oracle::uniform_int(rng, 1, 8));
    const int a = required_ancillas(c);
    const QubitCircuit lowered = baseline_qubit_lowering(c, a);
    for (const auto &g : lowered.gates()) {
      EXPECT_TRUE(is_single_qubit(g) || std::holds_alternative<Cnot>(g));
    }
    const Matrix ub = qubit_unitary(lowered);
    const Matrix uq = qubit_unitary(c);
    double worst = 0.0;
    for (Eigen::Index x = 0; x < uq.cols(); ++x) {
      for (Eigen::Index r = 0; r < ub.rows(); ++r) {
        // Ancillas are the low-order qubits.
        const Eigen::Index anc = r & ((Eigen::Index{1} << a) - 1);
        const Complex expected = anc == 0 ? uq(r >> a, x) : Complex(0.0, 0.0);
        worst = std::max(worst, std::abs(ub(r, x << a) - expected));
      }
    }
    EXPECT_LE(worst, 1e-8) << "trial " << trial;
  }
}

TEST(transpiler_property, equivalent_on_image_and_restores_flags) {
  std::mt19937_64 rng(123);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 4);
    const auto dims = random_dims(rng, n, 2, 6, 4096);
    const auto groups = oracle::random_groups(rng, n, dims);
    if (groups.empty()) continue;
    const Mapping m(groups, dims);
    const QubitCircuit c = oracle::random_circuit(rng, n, oracle::uniform_int(rng, 0, 12));
    QuditCircuit lowered(dims);
    try {
      lowered = transpile(c, m);
    } catch (const Error &e) {
      ASSERT_EQ(e.code(), ErrorCode::InsufficientFreeLevels);
      continue;
    }
    EXPECT_LE(image_distance(c, lowered, m), 1e-8) << "trial " << trial;
    EXPECT_LE(leaked_amplitude(lowered, m), 1e-9) << "trial " << trial;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(transpiler_property, ladder_uses_two_k_minus_one) {
  std::mt19937_64 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 6);
    const auto dims = random_dims(rng, n, 2, 8, std::size_t{1} << 20);
    const auto groups = oracle::random_groups(rng, n, dims);
    if (groups.empty()) continue;
    const Mapping m(groups, dims);
    auto qubits = oracle::distinct_qubits(rng, n, oracle::uniform_int(rng, 2, n));
    const int target = qubits.back();
    qubits.pop_back();

    std::set<int> carriers;
    for (int c : qubits) {
      for (std::size_t j = 0; j < groups.size(); ++j) {
        const bool here = std::find(groups[j].begin(), groups[j].end(), c) != groups[j].end();
        const bool has_target =
            std::find(groups[j].begin(), groups[j].end(), target) != groups[j].end();
        if (here && !has_target) carriers.insert(static_cast<int>(j));
      }
    }
    const std::size_t k = carriers.size();
    try {
      const auto gates = lower_mcx(qubits, target, m);
      EXPECT_EQ(two_qudit_count(gates), k == 0 ? 0 : 2 * k - 1);
      ++checked;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::InsufficientFreeLevels);
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(select_mapping, reference_circuit_on_four_ququarts) {
  const QubitCircuit c = oracle::five_qubit_reference();
  const ErrorModel model;
  const auto selection = select_mapping(c, kQuarts, model);

  // Brute-force best fidelity over every mapping.
  double best = 0.0;
  for (const auto &m : enumerate_mappings(5, kQuarts, 1000000)) {
    try {
      best = std::max(best, estimate_fidelity(transpile(c, m), model).value);
    } catch (const Error &) {
    }
  }
  EXPECT_EQ(selection.report.fidelity_opt, best);
  EXPECT_EQ(selection.mapping.qudit_of(1), selection.mapping.qudit_of(3));
  EXPECT_EQ(selection.mapping.group_size(selection.mapping.qudit_of(1)), 2);
  EXPECT_LE(selection.report.two_qudit_gates, 5u);
  EXPECT_FALSE(selection.report.fidelity_trivial.has_value());
  EXPECT_EQ(selection.report.baseline_two_qubit_gates, 31u);
  EXPECT_EQ(selection.report.mapping, selection.mapping.groups());
}

TEST(select_mapping, single_cnot_goes_local) {
  const QubitCircuit c(2, {Cnot{0, 1}});
  const auto selection = select_mapping(c, {4, 4}, ErrorModel{});
  EXPECT_EQ(selection.report.two_qudit_gates, 0u);
  EXPECT_EQ(selection.mapping.qudit_of(0), selection.mapping.qudit_of(1));
  ASSERT_TRUE(selection.report.fidelity_trivial.has_value());
  EXPECT_NEAR(*selection.report.fidelity_trivial, 0.99, 1e-15);
  EXPECT_GE(selection.report.fidelity_opt, *selection.report.fidelity_trivial);
  EXPECT_EQ(selection.report.baseline_two_qubit_gates, 1u);
}

TEST(select_mapping, empty_circuit_takes_first_mapping) {
  const auto selection = select_mapping(QubitCircuit(2), {3, 3}, ErrorModel{});
  EXPECT_EQ(selection.mapping, enumerate_mappings(2, {3, 3}).front());
  EXPECT_EQ(selection.report.fidelity_opt, 1.0);
  EXPECT_EQ(selection.report.fidelity_trivial, 1.0);
}

TEST(select_mapping, incompatible_register) {
  EXPECT_EQ(code_of([] { select_mapping(oracle::five_qubit_reference(), {2, 2}, ErrorModel{}); }),
            ErrorCode::Incompatible);
}

TEST(select_mapping, no_feasible_mapping) {
  // Every layout of four controls on two ququarts leaves both carriers cramped.
  const QubitCircuit c(5, {Mcx{{0, 1, 2, 3}, 4}});
  EXPECT_EQ(code_of([&] { select_mapping(c, {4, 4, 2}, ErrorModel{}); }),
            ErrorCode::NoFeasibleMapping);
}

TEST(select_mapping, truncated_search_still_beats_trivial) {
  const QubitCircuit c(3, {Cnot{0, 2}, Cnot{1, 2}, Named1Q{NamedGate::H, 0}});
  const auto selection = select_mapping(c, {2, 2, 2, 8}, ErrorModel{}, 1);
  ASSERT_TRUE(selection.report.fidelity_trivial.has_value());
  EXPECT_GE(selection.report.fidelity_opt, *selection.report.fidelity_trivial);
}

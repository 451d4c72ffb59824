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

// quditc command-line front end: transpile, simulate, compare.
//
// Exit codes: 0 success, 1 usage or I/O failure, 2 malformed or invalid
// input, 3 infeasible request, 4 outcome outside the mapping image.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quditc/quditc.h"

namespace {

enum ExitCode { kOk = 0, kIo = 1, kInput = 2, kInfeasible = 3, kSupport = 4 };

struct Failure {
  int exit_code;
};

int exit_code_for(qdc_status status) {
  switch (status) {
    case QDC_OK:
      return kOk;
    case QDC_ERR_INCOMPATIBLE:
    case QDC_ERR_INSUFFICIENT_FREE_LEVELS:
    case QDC_ERR_NO_FEASIBLE_MAPPING:
    case QDC_ERR_INSUFFICIENT_QUDITS:
    case QDC_ERR_INSUFFICIENT_ANCILLAS:
    case QDC_ERR_TOO_LARGE:
      return kInfeasible;
    case QDC_ERR_SUPPORT_VIOLATION:
      return kSupport;
    case QDC_ERR_INTERNAL:
      return kIo;
    default:
      return kInput;
  }
}

void check(qdc_status status, const std::string &context) {
  if (status == QDC_OK) return;
  std::cerr << "quditc: " << context << ": " << qdc_last_error() << "\n";
  throw Failure{exit_code_for(status)};
}

[[noreturn]] void die(int code, const std::string &message) {
  std::cerr << "quditc: " << message << "\n";
  throw Failure{code};
}

template <class T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using Circuit = std::unique_ptr<qdc_circuit, Deleter<qdc_circuit, qdc_circuit_free>>;
using MappingPtr = std::unique_ptr<qdc_mapping, Deleter<qdc_mapping, qdc_mapping_free>>;
using ErrorModel = std::unique_ptr<qdc_error_model, Deleter<qdc_error_model, qdc_error_model_free>>;
using Report = std::unique_ptr<qdc_report, Deleter<qdc_report, qdc_report_free>>;
using State = std::unique_ptr<qdc_state, Deleter<qdc_state, qdc_state_free>>;
using Counts = std::unique_ptr<qdc_counts, Deleter<qdc_counts, qdc_counts_free>>;
using CString = std::unique_ptr<char, Deleter<char, qdc_string_free>>;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) die(kIo, "cannot write " + path);
  out << text << "\n";
  if (!out) die(kIo, "failed writing " + path);
}

std::string take(char *s) {
  CString owned(s);
  return std::string(owned.get());
}

// "4,4,4,4" or "NxD" (N qudits of dimension D).
std::vector<int> parse_dims(const std::string &text) {
  const auto number = [&](const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
      die(kInput, "bad --dims value '" + text + "'");
    }
    return std::stoi(s);
  };
  std::vector<int> dims;
  if (auto x = text.find('x'); x != std::string::npos) {
    const int count = number(text.substr(0, x));
    const int d = number(text.substr(x + 1));
    dims.assign(static_cast<std::size_t>(count), d);
  } else {
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) dims.push_back(number(part));
  }
  if (dims.empty()) die(kInput, "--dims is empty");
  return dims;
}

Circuit load_circuit(const std::string &path) {
  qdc_circuit *c = nullptr;
  check(qdc_circuit_parse(read_file(path).c_str(), &c), path);
  return Circuit(c);
}

Circuit load_qubit_circuit(const std::string &path) {
  Circuit c = load_circuit(path);
  if (qdc_circuit_get_kind(c.get()) != QDC_CIRCUIT_QUBIT) {
    die(kInput, path + ": expected a qubit circuit");
  }
  return c;
}

ErrorModel load_error_model(const std::string &path) {
  qdc_error_model *m = nullptr;
  if (path.empty()) {
    check(qdc_error_model_default(&m), "error model");
  } else {
    check(qdc_error_model_parse(read_file(path).c_str(), &m), path);
  }
  return ErrorModel(m);
}

MappingPtr load_mapping(const std::string &path, const std::vector<int> &dims) {
  qdc_mapping *m = nullptr;
  check(qdc_mapping_parse(read_file(path).c_str(), dims.data(), dims.size(), &m), path);
  return MappingPtr(m);
}

struct TranspileArgs {
  std::string circuit, dims, mapping, error_model, out_circuit, out_report;
  std::size_t search_limit = 0;
};

int cmd_transpile(const TranspileArgs &args) {
  const Circuit circuit = load_qubit_circuit(args.circuit);
  const std::vector<int> dims = parse_dims(args.dims);
  const ErrorModel model = load_error_model(args.error_model);
  qdc_circuit *lowered = nullptr;
  qdc_report *report = nullptr;
  if (!args.mapping.empty()) {
    const MappingPtr mapping = load_mapping(args.mapping, dims);
    check(qdc_transpile(circuit.get(), mapping.get(), model.get(), &lowered, &report),
          "transpile");
  } else {
    check(qdc_select_mapping(circuit.get(), dims.data(), dims.size(), model.get(),
                             args.search_limit, nullptr, &lowered, &report),
          "mapping search");
  }
  const Circuit lowered_owner(lowered);
  const Report report_owner(report);
  char *text = nullptr;
  check(qdc_circuit_to_json(lowered, &text), "serialize circuit");
  write_file(args.out_circuit, take(text));
  check(qdc_report_to_json(report, &text), "serialize report");
  write_file(args.out_report, take(text));
  std::cerr << "quditc: " << qdc_report_two_qudit_gates(report) << " two-qudit gates, baseline "
            << qdc_report_baseline_two_qubit_gates(report) << " two-qubit gates\n";
  return kOk;
}

struct SimulateArgs {
  std::string circuit, mapping, out;
  std::uint64_t shots = 0, seed = 0;
};

int cmd_simulate(const SimulateArgs &args) {
  const Circuit circuit = load_circuit(args.circuit);
  qdc_state *state = nullptr;
  check(qdc_simulate(circuit.get(), &state), "simulate");
  const State state_owner(state);
  qdc_counts *counts = nullptr;
  check(qdc_sample(state, args.shots, args.seed, &counts), "sample");
  const Counts counts_owner(counts);

  char *text = nullptr;
  if (args.mapping.empty()) {
    check(qdc_counts_to_json(counts, &text), "serialize counts");
    write_file(args.out, take(text));
    return kOk;
  }
  if (qdc_circuit_get_kind(circuit.get()) != QDC_CIRCUIT_QUDIT) {
    die(kInput, "--mapping requires a qudit circuit");
  }
  std::vector<int> dims(qdc_circuit_dims(circuit.get(), nullptr, 0));
  qdc_circuit_dims(circuit.get(), dims.data(), dims.size());
  const MappingPtr mapping = load_mapping(args.mapping, dims);
  qdc_counts *decoded = nullptr;
  check(qdc_counts_decode(counts, mapping.get(), &decoded), "post-process");
  const Counts decoded_owner(decoded);
  check(qdc_simulation_result_to_json(counts, decoded, &text), "serialize counts");
  write_file(args.out, take(text));
  return kOk;
}

struct CompareArgs {
  std::string circuit, dims, error_model;
  std::size_t search_limit = 0;
  bool json = false;
};

int cmd_compare(const CompareArgs &args) {
  const Circuit circuit = load_qubit_circuit(args.circuit);
  const std::vector<int> dims = parse_dims(args.dims);
  const ErrorModel model = load_error_model(args.error_model);
  qdc_report *report = nullptr;
  check(qdc_select_mapping(circuit.get(), dims.data(), dims.size(), model.get(),
                           args.search_limit, nullptr, nullptr, &report),
        "mapping search");
  const Report report_owner(report);
  char *text = nullptr;
  check(qdc_report_to_json(report, &text), "serialize report");
  const std::string report_json = take(text);
  if (args.json) {
    std::cout << report_json << "\n";
    return kOk;
  }
  const auto doc = nlohmann::json::parse(report_json);
  double f_trivial = 0.0;
  const bool has_trivial = qdc_report_fidelity_trivial(report, &f_trivial) != 0;
  const auto baseline = qdc_report_baseline_two_qubit_gates(report);

  std::ostringstream f_opt_text, f_trivial_text;
  f_opt_text << std::fixed << std::setprecision(6) << qdc_report_fidelity_opt(report);
  if (has_trivial) {
    f_trivial_text << std::fixed << std::setprecision(6) << f_trivial;
  } else {
    f_trivial_text << "n/a";
  }
  std::cout << "mapping: " << doc["mapping_opt"].dump() << "\n"
            << std::left << std::setw(12) << "two_qudit" << std::setw(20) << "baseline_two_qubit"
            << std::setw(12) << "F_opt" << "F_trivial\n"
            << std::setw(12) << qdc_report_two_qudit_gates(report) << std::setw(20)
            << (baseline < 0 ? std::string("n/a") : std::to_string(baseline)) << std::setw(12)
            << f_opt_text.str() << f_trivial_text.str() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Transpile qubit circuits onto qudit registers and emulate them."};
  app.require_subcommand(1);

  TranspileArgs t;
  auto *transpile = app.add_subcommand("transpile", "Lower a qubit circuit to native qudit gates");
  transpile->add_option("--circuit", t.circuit, "Qubit circuit JSON")->required();
  transpile->add_option("--dims", t.dims, "Qudit dimensions: '4,4,4,4' or '4x4'")->required();
  transpile->add_option("--mapping", t.mapping, "Fixed mapping JSON (skips the search)");
  transpile->add_option("--error-model", t.error_model, "Error model JSON");
  transpile->add_option("--search-limit", t.search_limit, "Maximum mappings to evaluate");
  transpile->add_option("--out-circuit", t.out_circuit, "Output qudit circuit JSON")->required();
  transpile->add_option("--out-report", t.out_report, "Output report JSON")->required();

  SimulateArgs s;
  auto *simulate = app.add_subcommand("simulate", "Sample a qubit or qudit circuit exactly");
  simulate->add_option("--circuit", s.circuit, "Circuit JSON")->required();
  simulate->add_option("--shots", s.shots, "Number of shots")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--seed", s.seed, "Sampler seed")->required();
  simulate->add_option("--mapping", s.mapping, "Mapping JSON; adds decoded qubit counts");
  simulate->add_option("--out", s.out, "Output counts JSON")->required();

  CompareArgs c;
  auto *compare = app.add_subcommand("compare", "Compare qudit and qubit-baseline costs");
  compare->add_option("--circuit", c.circuit, "Qubit circuit JSON")->required();
  compare->add_option("--dims", c.dims, "Qudit dimensions: '4,4,4,4' or '4x4'")->required();
  compare->add_option("--error-model", c.error_model, "Error model JSON");
  compare->add_option("--search-limit", c.search_limit, "Maximum mappings to evaluate");
  compare->add_flag("--json", c.json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIo;
  }

  try {
    if (*transpile) return cmd_transpile(t);
    if (*simulate) return cmd_simulate(s);
    return cmd_compare(c);
  } catch (const Failure &f) {
    return f.exit_code;
  } catch (const std::exception &e) {
    std::cerr << "quditc: " << e.what() << "\n";
    return kIo;
  }
}

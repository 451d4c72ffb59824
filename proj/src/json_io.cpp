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

#include "quditc/json_io.hpp"

#include <cstdint>
#include <limits>
#include <optional>

namespace quditc {

namespace {

[[noreturn]] void schema_error(const std::string &path, const std::string &what) {
  throw Error(ErrorCode::Schema, (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json &member(const Json &obj, const std::string &key, const std::string &path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "/" + key, "missing field");
  return *it;
}

void only_keys(const Json &obj, std::initializer_list<const char *> allowed,
               const std::string &path) {
  for (const auto &[key, value] : obj.items()) {
    bool known = false;
    for (const char *a : allowed) known = known || key == a;
    if (!known) schema_error(path + "/" + key, "unexpected field");
  }
}

int as_int(const Json &v, const std::string &path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    schema_error(path, "integer out of range");
  }
  return static_cast<int>(x);
}

double as_double(const Json &v, const std::string &path) {
  if (!v.is_number()) schema_error(path, "expected a number");
  return v.get<double>();
}

std::vector<int> as_int_list(const Json &v, const std::string &path) {
  if (!v.is_array()) schema_error(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_int(v[i], path + "/" + std::to_string(i)));
  }
  return out;
}

const Json &as_object(const Json &v, const std::string &path) {
  if (!v.is_object()) schema_error(path, "expected an object");
  return v;
}

std::string gate_kind(const QubitGate &gate) {
  if (const auto *g = std::get_if<Named1Q>(&gate)) {
    switch (g->name) {
      case NamedGate::H: return "h";
      case NamedGate::X: return "x";
      case NamedGate::Y: return "y";
      case NamedGate::Z: return "z";
      case NamedGate::S: return "s";
      case NamedGate::T: return "t";
    }
  }
  if (const auto *g = std::get_if<Rot1Q>(&gate)) {
    switch (g->axis) {
      case Axis::X: return "rx";
      case Axis::Y: return "ry";
      case Axis::Z: return "rz";
    }
  }
  if (std::holds_alternative<Generic1Q>(gate)) return "u1";
  if (std::holds_alternative<Cnot>(gate)) return "cnot";
  if (std::holds_alternative<Cz>(gate)) return "cz";
  return "mcx";
}

Json gate_to_json(const QubitGate &gate) {
  Json j;
  j["kind"] = gate_kind(gate);
  j["qubits"] = gate_qubits(gate);
  if (const auto *g = std::get_if<Rot1Q>(&gate)) j["angle"] = g->angle;
  if (const auto *g = std::get_if<Generic1Q>(&gate)) j["matrix"] = matrix_to_json(g->matrix);
  return j;
}

Json gate_to_json(const QuditGate &gate) {
  Json j;
  if (const auto *g = std::get_if<Local1D>(&gate)) {
    j["kind"] = "local";
    j["qudit"] = g->qudit;
    j["matrix"] = matrix_to_json(g->matrix);
    return j;
  }
  const auto &g = std::get<CtrlEmbedded>(gate);
  j["kind"] = "ctrl";
  j["control"] = g.control;
  j["levels"] = g.levels;
  j["target"] = g.target;
  j["matrix"] = matrix_to_json(g.matrix);
  return j;
}

QubitGate parse_qubit_gate(const Json &doc, const std::string &path) {
  as_object(doc, path);
  const Json &kind_doc = member(doc, "kind", path);
  if (!kind_doc.is_string()) schema_error(path + "/kind", "expected a string");
  const std::string kind = kind_doc.get<std::string>();
  const std::vector<int> q = as_int_list(member(doc, "qubits", path), path + "/qubits");
  const auto arity = [&](std::size_t n) {
    if (q.size() != n) {
      schema_error(path + "/qubits", "'" + kind + "' takes " + std::to_string(n) + " qubit(s)");
    }
  };

  static const std::pair<const char *, NamedGate> named[] = {
      {"h", NamedGate::H}, {"x", NamedGate::X}, {"y", NamedGate::Y},
      {"z", NamedGate::Z}, {"s", NamedGate::S}, {"t", NamedGate::T}};
  for (const auto &[name, value] : named) {
    if (kind == name) {
      only_keys(doc, {"kind", "qubits"}, path);
      arity(1);
      return Named1Q{value, q[0]};
    }
  }
  static const std::pair<const char *, Axis> rotations[] = {
      {"rx", Axis::X}, {"ry", Axis::Y}, {"rz", Axis::Z}};
  for (const auto &[name, axis] : rotations) {
    if (kind == name) {
      only_keys(doc, {"kind", "qubits", "angle"}, path);
      arity(1);
      return Rot1Q{axis, as_double(member(doc, "angle", path), path + "/angle"), q[0]};
    }
  }
  if (kind == "u1") {
    only_keys(doc, {"kind", "qubits", "matrix"}, path);
    arity(1);
    return Generic1Q{parse_matrix(member(doc, "matrix", path), path + "/matrix"), q[0]};
  }
  if (kind == "cnot" || kind == "cz") {
    only_keys(doc, {"kind", "qubits"}, path);
    arity(2);
    if (kind == "cnot") return Cnot{q[0], q[1]};
    return Cz{q[0], q[1]};
  }
  if (kind == "mcx") {
    only_keys(doc, {"kind", "qubits"}, path);
    if (q.size() < 2) schema_error(path + "/qubits", "'mcx' takes controls and a target");
    return Mcx{std::vector<int>(q.begin(), q.end() - 1), q.back()};
  }
  schema_error(path + "/kind", "unknown qubit gate kind '" + kind + "'");
}

QuditGate parse_qudit_gate(const Json &doc, const std::string &path) {
  as_object(doc, path);
  const Json &kind_doc = member(doc, "kind", path);
  if (!kind_doc.is_string()) schema_error(path + "/kind", "expected a string");
  const std::string kind = kind_doc.get<std::string>();
  if (kind == "local") {
    only_keys(doc, {"kind", "qudit", "matrix"}, path);
    return Local1D{as_int(member(doc, "qudit", path), path + "/qudit"),
                   parse_matrix(member(doc, "matrix", path), path + "/matrix")};
  }
  if (kind == "ctrl") {
    only_keys(doc, {"kind", "control", "levels", "target", "matrix"}, path);
    return CtrlEmbedded{as_int(member(doc, "control", path), path + "/control"),
                        as_int_list(member(doc, "levels", path), path + "/levels"),
                        as_int(member(doc, "target", path), path + "/target"),
                        parse_matrix(member(doc, "matrix", path), path + "/matrix")};
  }
  schema_error(path + "/kind", "unknown qudit gate kind '" + kind + "'");
}

const Json &gate_list(const Json &doc) {
  const Json &gates = member(doc, "gates", "");
  if (!gates.is_array()) schema_error("/gates", "expected an array");
  return gates;
}

std::optional<double> optional_number(const Json &doc, const std::string &key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return as_double(*it, "/" + key);
}

}  // namespace

Json matrix_to_json(const Matrix &m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix parse_matrix(const Json &doc, const std::string &path) {
  if (!doc.is_array() || doc.empty()) schema_error(path, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(doc.size());
  Eigen::Index cols = -1;
  Matrix m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string row_path = path + "/" + std::to_string(r);
    const Json &row = doc[static_cast<std::size_t>(r)];
    if (!row.is_array()) schema_error(row_path, "expected an array of [re, im] pairs");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      schema_error(row_path, "ragged matrix row");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const std::string entry_path = row_path + "/" + std::to_string(c);
      const Json &entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2) {
        schema_error(entry_path, "expected an [re, im] pair");
      }
      m(r, c) = Complex(as_double(entry[0], entry_path + "/0"),
                        as_double(entry[1], entry_path + "/1"));
    }
  }
  return m;
}

Json to_json(const QubitCircuit &circuit) {
  Json doc;
  doc["kind"] = "qubit";
  doc["n"] = circuit.num_qubits();
  doc["gates"] = Json::array();
  for (const auto &g : circuit.gates()) doc["gates"].push_back(gate_to_json(g));
  return doc;
}

Json to_json(const QuditCircuit &circuit) {
  Json doc;
  doc["kind"] = "qudit";
  doc["dims"] = circuit.dims();
  doc["gates"] = Json::array();
  for (const auto &g : circuit.gates()) doc["gates"].push_back(gate_to_json(g));
  return doc;
}

Json to_json(const AnyCircuit &circuit) {
  return std::visit([](const auto &c) { return to_json(c); }, circuit);
}

AnyCircuit parse_circuit(const Json &doc) {
  as_object(doc, "");
  const Json &kind_doc = member(doc, "kind", "");
  if (!kind_doc.is_string()) schema_error("/kind", "expected a string");
  const std::string kind = kind_doc.get<std::string>();
  if (kind == "qubit") {
    only_keys(doc, {"kind", "n", "gates"}, "");
    const int n = as_int(member(doc, "n", ""), "/n");
    const Json &gates = gate_list(doc);
    std::vector<QubitGate> out;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      out.push_back(parse_qubit_gate(gates[i], "/gates/" + std::to_string(i)));
    }
    return QubitCircuit(n, std::move(out));
  }
  if (kind == "qudit") {
    only_keys(doc, {"kind", "dims", "gates"}, "");
    std::vector<int> dims = as_int_list(member(doc, "dims", ""), "/dims");
    const Json &gates = gate_list(doc);
    std::vector<QuditGate> out;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      out.push_back(parse_qudit_gate(gates[i], "/gates/" + std::to_string(i)));
    }
    return QuditCircuit(std::move(dims), std::move(out));
  }
  schema_error("/kind", "expected \"qubit\" or \"qudit\"");
}

Json mapping_to_json(const std::vector<Group> &groups) {
  Json doc;
  doc["mapping_opt"] = groups;
  return doc;
}

std::vector<Group> parse_mapping_groups(const Json &doc) {
  as_object(doc, "");
  const Json &groups = member(doc, "mapping_opt", "");
  if (!groups.is_array()) schema_error("/mapping_opt", "expected an array of qubit lists");
  std::vector<Group> out;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    out.push_back(as_int_list(groups[j], "/mapping_opt/" + std::to_string(j)));
  }
  return out;
}

Json to_json(const ErrorModel &model) {
  Json doc;
  doc["e1"] = model.e1;
  doc["e2"] = model.e2;
  doc["overrides"] = Json::object();
  for (const auto &[kind, e] : model.overrides) doc["overrides"][kind] = e;
  return doc;
}

ErrorModel parse_error_model(const Json &doc) {
  as_object(doc, "");
  only_keys(doc, {"e1", "e2", "overrides"}, "");
  ErrorModel model;
  if (doc.contains("e1")) model.e1 = as_double(doc["e1"], "/e1");
  if (doc.contains("e2")) model.e2 = as_double(doc["e2"], "/e2");
  if (doc.contains("overrides")) {
    const Json &o = as_object(doc["overrides"], "/overrides");
    for (const auto &[kind, value] : o.items()) {
      model.overrides[kind] = as_double(value, "/overrides/" + kind);
    }
  }
  try {
    model.validate();
  } catch (const Error &e) {
    schema_error("", e.what());
  }
  return model;
}

Json to_json(const TranspileReport &report) {
  Json doc;
  doc["mapping_opt"] = report.mapping;
  doc["two_qudit_gates"] = report.two_qudit_gates;
  doc["single_qudit_gates"] = report.single_qudit_gates;
  doc["baseline_two_qubit_gates"] = report.baseline_two_qubit_gates
                                        ? Json(*report.baseline_two_qubit_gates)
                                        : Json(nullptr);
  doc["fidelity_opt"] = report.fidelity_opt;
  doc["fidelity_trivial"] =
      report.fidelity_trivial ? Json(*report.fidelity_trivial) : Json(nullptr);
  return doc;
}

TranspileReport parse_report(const Json &doc) {
  as_object(doc, "");
  TranspileReport report;
  report.mapping = parse_mapping_groups(doc);
  const auto count = [&](const char *key) {
    const int v = as_int(member(doc, key, ""), std::string("/") + key);
    if (v < 0) schema_error(std::string("/") + key, "negative gate count");
    return static_cast<std::size_t>(v);
  };
  report.two_qudit_gates = count("two_qudit_gates");
  report.single_qudit_gates = count("single_qudit_gates");
  if (auto it = doc.find("baseline_two_qubit_gates"); it != doc.end() && !it->is_null()) {
    report.baseline_two_qubit_gates = count("baseline_two_qubit_gates");
  }
  report.fidelity_opt = as_double(member(doc, "fidelity_opt", ""), "/fidelity_opt");
  report.fidelity_trivial = optional_number(doc, "fidelity_trivial");
  if (report.fidelity_trivial) {
    report.fidelity_ratio = report.fidelity_opt / *report.fidelity_trivial;
  }
  return report;
}

Json to_json(const Counts &counts) {
  Json doc;
  doc["shots"] = counts.shots;
  doc["seed"] = counts.seed;
  doc["generator"] = counts.generator;
  doc["counts"] = counts.table;
  return doc;
}

Json simulation_result_to_json(const Counts &qudit, const Counts &qubit) {
  Json doc;
  doc["shots"] = qudit.shots;
  doc["seed"] = qudit.seed;
  doc["generator"] = qudit.generator;
  doc["qudit_res"] = qudit.table;
  doc["qubit_res"] = qubit.table;
  return doc;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::Schema, std::string("/: malformed JSON: ") + e.what());
  }
}

}  // namespace quditc

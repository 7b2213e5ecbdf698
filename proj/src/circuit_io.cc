// Copyright 2026 The qformula Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qformula/circuit_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qformula/errors.h"

namespace qformula {

using nlohmann::json;

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
    }
}

const json &member(const json &object, const char *key, const std::string &where) {
    if (!object.is_object()) {
        throw ParseError("expected an object", 0, where);
    }
    auto it = object.find(key);
    if (it == object.end()) {
        throw ParseError(std::string("missing field '") + key + "'", 0, where);
    }
    return *it;
}

std::uint64_t unsigned_field(const json &value, const std::string &where) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw ParseError("expected a non-negative integer", 0, where);
    }
    return value.get<std::uint64_t>();
}

ComplexMatrix matrix_from_json(const json &value, const std::string &where) {
    if (!value.is_array()) {
        throw ParseError("expected an array of [re, im] pairs", 0, where);
    }
    std::size_t count = value.size();
    std::size_t dim = 1;
    while (dim * dim < count) {
        dim *= 2;
    }
    if (dim * dim != count || count == 0) {
        throw ParseError("matrix needs 4^k entries, found " + std::to_string(count), 0, where);
    }
    std::vector<Complex> entries;
    entries.reserve(count);
    for (std::size_t k = 0; k < count; k++) {
        const json &pair = value[k];
        std::string at = where + "[" + std::to_string(k) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError("expected [re, im]", 0, at);
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix(dim, dim, std::move(entries));
}

json matrix_to_json(const ComplexMatrix &m) {
    json out = json::array();
    for (const Complex &c : m.entries()) {
        out.push_back(json::array({c.real(), c.imag()}));
    }
    return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    json root = parse_json(text);
    Circuit c;
    c.num_qubits = unsigned_field(member(root, "num_qubits", "root"), "num_qubits");
    c.arity_bound = root.contains("arity_bound") ? unsigned_field(root["arity_bound"], "arity_bound") : 2;
    c.output_qubit = static_cast<Qubit>(unsigned_field(member(root, "output_qubit", "root"), "output_qubit"));

    const json &labels = member(root, "labels", "root");
    if (!labels.is_array()) {
        throw ParseError("expected an array", 0, "labels");
    }
    for (std::size_t q = 0; q < labels.size(); q++) {
        std::string where = "labels[" + std::to_string(q) + "]";
        const json &label = labels[q];
        if (label.is_object() && label.contains("var")) {
            auto j = unsigned_field(label["var"], where + ".var");
            if (j == 0) {
                throw ParseError("variable indices start at 1", 0, where + ".var");
            }
            c.labels.push_back(InputLabel::variable(static_cast<VariableIndex>(j)));
        } else if (label.is_object() && label.contains("const")) {
            auto v = unsigned_field(label["const"], where + ".const");
            if (v > 1) {
                throw ParseError("constant must be 0 or 1", 0, where + ".const");
            }
            c.labels.push_back(InputLabel::constant(v == 1));
        } else {
            throw ParseError("expected {\"var\": j} or {\"const\": 0|1}", 0, where);
        }
    }
    c.num_variables = max_variable_index(c.labels);
    if (root.contains("num_variables")) {
        c.num_variables = unsigned_field(root["num_variables"], "num_variables");
    }

    const json &gates = member(root, "gates", "root");
    if (!gates.is_array()) {
        throw ParseError("expected an array", 0, "gates");
    }
    for (std::size_t g = 0; g < gates.size(); g++) {
        std::string where = "gates[" + std::to_string(g) + "]";
        const json &entry = gates[g];
        Gate gate;
        gate.step = unsigned_field(member(entry, "step", where), where + ".step");
        const json &targets = member(entry, "targets", where);
        if (!targets.is_array()) {
            throw ParseError("expected an array", 0, where + ".targets");
        }
        for (std::size_t k = 0; k < targets.size(); k++) {
            gate.targets.push_back(
                static_cast<Qubit>(unsigned_field(targets[k], where + ".targets[" + std::to_string(k) + "]")));
        }
        gate.matrix = matrix_from_json(member(entry, "matrix", where), where + ".matrix");
        if (gate.matrix.rows() != (std::size_t{1} << std::min<std::size_t>(gate.targets.size(), 30))) {
            throw ParseError(
                "matrix dimension " + std::to_string(gate.matrix.rows()) + " does not match " +
                    std::to_string(gate.targets.size()) + " targets",
                0,
                where + ".matrix");
        }
        c.gates.push_back(std::move(gate));
    }
    return c;
}

std::string format_circuit(const Circuit &c) {
    json root = json::object();
    root["num_qubits"] = c.num_qubits;
    root["arity_bound"] = c.arity_bound;
    if (c.num_variables != max_variable_index(c.labels)) {
        root["num_variables"] = c.num_variables;
    }
    json labels = json::array();
    for (const auto &label : c.labels) {
        if (label.is_variable()) {
            labels.push_back({{"var", label.variable_index()}});
        } else {
            labels.push_back({{"const", label.constant_value() ? 1 : 0}});
        }
    }
    root["labels"] = labels;
    json gates = json::array();
    for (const auto &g : c.gates) {
        gates.push_back({{"step", g.step}, {"targets", g.targets}, {"matrix", matrix_to_json(g.matrix)}});
    }
    root["gates"] = gates;
    root["output_qubit"] = c.output_qubit;
    return root.dump(1) + "\n";
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write " + path.string());
    }
    out << text;
}

Circuit read_circuit(const std::filesystem::path &path) {
    return parse_circuit(read_text_file(path));
}

void write_circuit(const Circuit &circuit, const std::filesystem::path &path) {
    write_text_file(path, format_circuit(circuit));
}

std::vector<NamedMatrix> parse_gate_net(std::string_view text) {
    json root = parse_json(text);
    const json &gates = member(root, "gates", "root");
    if (!gates.is_array()) {
        throw ParseError("expected an array", 0, "gates");
    }
    std::vector<NamedMatrix> out;
    for (std::size_t k = 0; k < gates.size(); k++) {
        std::string where = "gates[" + std::to_string(k) + "]";
        const json &name = member(gates[k], "name", where);
        if (!name.is_string()) {
            throw ParseError("expected a string", 0, where + ".name");
        }
        out.push_back({name.get<std::string>(), matrix_from_json(member(gates[k], "matrix", where), where + ".matrix")});
    }
    return out;
}

std::string format_gate_net(const std::vector<NamedMatrix> &net) {
    json gates = json::array();
    for (const auto &entry : net) {
        gates.push_back({{"name", entry.name}, {"matrix", matrix_to_json(entry.matrix)}});
    }
    return json{{"gates", gates}}.dump(1) + "\n";
}

}  // namespace qformula

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

// JSON circuit files:
//
//   {"num_qubits": m, "arity_bound": d,
//    "labels": [{"var": j} | {"const": 0} | {"const": 1}, ...],
//    "gates": [{"step": s, "targets": [q, ...], "matrix": [[re, im], ...]}, ...],
//    "output_qubit": q}
//
// Matrices are row-major with 4^k entries for k targets. An optional "num_variables" field
// declares variables beyond the largest label index. Parsing checks shape only; circuit
// invariants are left to validate().

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qformula/circuit.h"

namespace qformula {

Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit &circuit);

Circuit read_circuit(const std::filesystem::path &path);
void write_circuit(const Circuit &circuit, const std::filesystem::path &path);

struct NamedMatrix {
    std::string name;
    ComplexMatrix matrix;
};

/// Gate-net files: {"gates": [{"name": "H", "matrix": [[re, im], ...]}, ...]}.
std::vector<NamedMatrix> parse_gate_net(std::string_view text);
std::string format_gate_net(const std::vector<NamedMatrix> &net);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace qformula

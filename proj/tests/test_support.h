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

// Helpers and independent oracles shared by the test binaries.

#pragma once

#include <string>
#include <vector>

#include "qformula/circuit.h"
#include "qformula/linalg.h"
#include "qformula/truth_table.h"

namespace qformula::testing {

ComplexMatrix gate_h();
ComplexMatrix gate_x();
ComplexMatrix gate_cnot();
ComplexMatrix gate_cz();
ComplexMatrix gate_swap();
ComplexMatrix gate_toffoli();
/// Real rotation [[c, -s], [s, c]] by angle theta / 2.
ComplexMatrix gate_ry(double theta);

Gate make_gate(std::vector<Qubit> targets, ComplexMatrix matrix, std::size_t step = 0);

/// Builds a circuit; gate steps are renumbered 1..t. num_variables is the largest label.
Circuit make_circuit(std::vector<InputLabel> labels, std::vector<Gate> gates, Qubit output, std::size_t arity_bound = 2);

/// Full 2^m x 2^m matrix of a gate, built entry by entry from the definition of the embedding.
ComplexMatrix embedded_matrix(const Gate &gate, std::size_t num_qubits);

/// Product of embedded matrices, last gate leftmost.
ComplexMatrix circuit_operator(const std::vector<Gate> &gates, std::size_t num_qubits);

/// Acceptance probability from the explicit operator.
double oracle_acceptance(const Circuit &circuit, std::uint64_t alpha);

/// Toffoli-based AND of x1 and x2 on a third wire.
Circuit and_circuit();

std::string data_path(const std::string &name);

}  // namespace qformula::testing

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

#include "test_support.h"

#include <cmath>

namespace qformula::testing {

ComplexMatrix gate_h() {
    const double h = 1 / std::sqrt(2.0);
    return {{h, h}, {h, -h}};
}

ComplexMatrix gate_x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix gate_cnot() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

ComplexMatrix gate_cz() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
}

ComplexMatrix gate_swap() {
    return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

ComplexMatrix gate_toffoli() {
    ComplexMatrix out = ComplexMatrix::identity(8);
    out(6, 6) = 0;
    out(7, 7) = 0;
    out(6, 7) = 1;
    out(7, 6) = 1;
    return out;
}

ComplexMatrix gate_ry(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return {{c, -s}, {s, c}};
}

Gate make_gate(std::vector<Qubit> targets, ComplexMatrix matrix, std::size_t step) {
    return Gate{step, std::move(targets), std::move(matrix)};
}

Circuit make_circuit(std::vector<InputLabel> labels, std::vector<Gate> gates, Qubit output, std::size_t arity_bound) {
    Circuit c;
    c.num_qubits = labels.size();
    c.num_variables = max_variable_index(labels);
    c.labels = std::move(labels);
    c.gates = std::move(gates);
    c.output_qubit = output;
    c.arity_bound = arity_bound;
    renumber_steps(c);
    return c;
}

ComplexMatrix embedded_matrix(const Gate &gate, std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t k = gate.targets.size();
    auto bit = [&](std::size_t index, Qubit q) { return (index >> (num_qubits - 1 - q)) & 1; };
    auto sub_index = [&](std::size_t index) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < k; i++) {
            s = (s << 1) | bit(index, gate.targets[i]);
        }
        return s;
    };
    ComplexMatrix out(dim, dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            bool same_elsewhere = true;
            for (Qubit q = 0; q < num_qubits; q++) {
                bool targeted = false;
                for (Qubit t : gate.targets) {
                    targeted = targeted || t == q;
                }
                if (!targeted && bit(r, q) != bit(c, q)) {
                    same_elsewhere = false;
                }
            }
            if (same_elsewhere) {
                out(r, c) = gate.matrix(sub_index(r), sub_index(c));
            }
        }
    }
    return out;
}

ComplexMatrix circuit_operator(const std::vector<Gate> &gates, std::size_t num_qubits) {
    ComplexMatrix out = ComplexMatrix::identity(std::size_t{1} << num_qubits);
    for (const Gate &g : gates) {
        out = embedded_matrix(g, num_qubits) * out;
    }
    return out;
}

double oracle_acceptance(const Circuit &circuit, std::uint64_t alpha) {
    const std::size_t m = circuit.num_qubits;
    std::size_t input = 0;
    for (std::size_t q = 0; q < m; q++) {
        const auto &label = circuit.labels[q];
        std::size_t b = label.is_variable() ? (alpha >> (circuit.num_variables - label.variable_index())) & 1
                                            : (label.constant_value() ? 1 : 0);
        input = (input << 1) | b;
    }
    ComplexMatrix u = circuit_operator(circuit.gates, m);
    double p = 0;
    for (std::size_t r = 0; r < u.rows(); r++) {
        if ((r >> (m - 1 - circuit.output_qubit)) & 1) {
            p += std::norm(u(r, input));
        }
    }
    return p;
}

Circuit and_circuit() {
    return make_circuit(
        {InputLabel::variable(1), InputLabel::variable(2), InputLabel::constant(false)},
        {make_gate({0, 1, 2}, gate_toffoli())},
        2,
        3);
}

std::string data_path(const std::string &name) {
    return std::string(QF_DATA_DIR) + "/" + name;
}

}  // namespace qformula::testing

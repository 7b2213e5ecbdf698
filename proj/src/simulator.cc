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

#include "qformula/simulator.h"

#include <cmath>
#include <sstream>

#include "qformula/errors.h"

namespace qformula {

StateVector::StateVector(std::size_t num_qubits, std::uint64_t basis_index) : num_qubits_(num_qubits) {
    if (num_qubits >= 40) {
        throw DomainError("state vector over " + std::to_string(num_qubits) + " qubits is not representable");
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0, 0});
    if (basis_index >= amplitudes_.size()) {
        throw DomainError("basis index out of range");
    }
    amplitudes_[basis_index] = 1;
}

StateVector::StateVector(std::size_t num_qubits, ComplexVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits >= 40 || amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw DomainError("state vector needs 2^" + std::to_string(num_qubits) + " amplitudes");
    }
}

double StateVector::norm() const {
    return qformula::norm(amplitudes_);
}

void apply_gate_in_place(StateVector &state, const Gate &gate) {
    const std::size_t m = state.num_qubits();
    const std::size_t k = gate.arity();
    const std::size_t dim = std::size_t{1} << k;
    if (k == 0 || gate.matrix.rows() != dim || gate.matrix.cols() != dim) {
        throw DomainError("gate at step " + std::to_string(gate.step) + " has a malformed matrix");
    }
    std::size_t target_mask = 0;
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t i = 0; i < k; i++) {
        Qubit q = gate.targets[i];
        if (q >= m) {
            throw DomainError(
                "gate at step " + std::to_string(gate.step) + " targets qubit " + std::to_string(q) + " of a " +
                std::to_string(m) + "-qubit state");
        }
        std::size_t bit = std::size_t{1} << (m - 1 - q);
        if (target_mask & bit) {
            throw DomainError("gate at step " + std::to_string(gate.step) + " repeats a target");
        }
        target_mask |= bit;
        for (std::size_t sub = 0; sub < dim; sub++) {
            if ((sub >> (k - 1 - i)) & 1) {
                offsets[sub] |= bit;
            }
        }
    }

    auto amps = state.amplitudes();
    std::vector<Complex> in(dim);
    const auto u = gate.matrix.entries();
    for (std::size_t base = 0; base < amps.size(); base++) {
        if (base & target_mask) {
            continue;
        }
        for (std::size_t s = 0; s < dim; s++) {
            in[s] = amps[base | offsets[s]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Complex acc = 0;
            const Complex *row = &u[r * dim];
            for (std::size_t s = 0; s < dim; s++) {
                acc += row[s] * in[s];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    apply_gate_in_place(state, gate);
    return state;
}

Outcome measure_qubit(const StateVector &state, Qubit qubit) {
    if (qubit >= state.num_qubits()) {
        throw DomainError("qubit " + std::to_string(qubit) + " out of range");
    }
    std::size_t bit = std::size_t{1} << (state.num_qubits() - 1 - qubit);
    Outcome out;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            out.norm1_sq += std::norm(amps[i]);
        } else {
            out.norm0_sq += std::norm(amps[i]);
        }
    }
    out.p1 = out.norm1_sq;
    return out;
}

std::uint64_t initial_basis_index(const Circuit &circuit, const Assignment &assignment) {
    if (assignment.size() != circuit.num_variables) {
        throw DomainError(
            "assignment has " + std::to_string(assignment.size()) + " bits but the circuit has " +
            std::to_string(circuit.num_variables) + " variables");
    }
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < circuit.num_qubits; q++) {
        const auto &label = circuit.labels[q];
        bool bit = label.is_variable() ? assignment[label.variable_index() - 1] != 0 : label.constant_value();
        index = (index << 1) | (bit ? 1 : 0);
    }
    return index;
}

StateVector run_on_state(const Circuit &circuit, StateVector state) {
    for (const Gate &gate : circuit.gates) {
        apply_gate_in_place(state, gate);
    }
    return state;
}

RunResult run(const Circuit &circuit, const Assignment &assignment, const SimulatorConfig &config) {
    if (circuit.num_qubits > config.max_qubits) {
        throw DomainError(
            "circuit has " + std::to_string(circuit.num_qubits) + " qubits, simulation cap is " +
            std::to_string(config.max_qubits));
    }
    if (circuit.labels.size() != circuit.num_qubits) {
        throw DomainError("circuit label count does not match its qubit count");
    }
    StateVector state(circuit.num_qubits, initial_basis_index(circuit, assignment));
    state = run_on_state(circuit, std::move(state));
    Outcome outcome = measure_qubit(state, circuit.output_qubit);
    return {std::move(state), outcome};
}

std::vector<double> acceptance_probabilities(const Circuit &circuit, const SimulatorConfig &config) {
    if (circuit.num_variables > kMaxTruthTableVariables) {
        throw DomainError("too many variables to enumerate");
    }
    std::size_t count = std::size_t{1} << circuit.num_variables;
    std::vector<double> out(count);
    for (std::uint64_t alpha = 0; alpha < count; alpha++) {
        out[alpha] = run(circuit, assignment_from_index(alpha, circuit.num_variables), config).outcome.p1;
    }
    return out;
}

std::string FunctionVerdict::str() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind) {
        case Kind::kComputes:
            return "computes";
        case Kind::kFailsAt:
            out << "fails at alpha=" << alpha << " (p=" << p << ")";
            break;
        case Kind::kUndeterminedAt:
            out << "undetermined at alpha=" << alpha << " (p=" << p << ")";
            break;
    }
    return out.str();
}

FunctionVerdict::Kind classify(double p, bool expected) {
    if (p >= 1.0 / 3.0 && p <= 2.0 / 3.0) {
        return FunctionVerdict::Kind::kUndeterminedAt;
    }
    bool accepts = p > 2.0 / 3.0;
    return accepts == expected ? FunctionVerdict::Kind::kComputes : FunctionVerdict::Kind::kFailsAt;
}

FunctionVerdict evaluate_probabilities(std::span<const double> probabilities, const TruthTable &table) {
    if (probabilities.size() != table.size()) {
        throw DomainError("truth table and circuit disagree on the number of variables");
    }
    for (std::uint64_t alpha = 0; alpha < probabilities.size(); alpha++) {
        auto kind = classify(probabilities[alpha], table[alpha]);
        if (kind != FunctionVerdict::Kind::kComputes) {
            return {kind, alpha, probabilities[alpha]};
        }
    }
    return {};
}

FunctionVerdict evaluate(const Circuit &circuit, const TruthTable &table, const SimulatorConfig &config) {
    if (table.num_variables() != circuit.num_variables) {
        throw DomainError(
            "truth table has " + std::to_string(table.num_variables()) + " variables, circuit has " +
            std::to_string(circuit.num_variables));
    }
    return evaluate_probabilities(acceptance_probabilities(circuit, config), table);
}

}  // namespace qformula

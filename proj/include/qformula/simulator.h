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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qformula/circuit.h"
#include "qformula/linalg.h"
#include "qformula/truth_table.h"

namespace qformula {

/// Dense vector of 2^m amplitudes. Qubit 0 is the most-significant bit of the basis index.
class StateVector {
   public:
    explicit StateVector(std::size_t num_qubits, std::uint64_t basis_index = 0);
    StateVector(std::size_t num_qubits, ComplexVector amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> amplitudes() {
        return amplitudes_;
    }
    double norm() const;

   private:
    std::size_t num_qubits_;
    ComplexVector amplitudes_;
};

/// Applies `gate` (embedded with identity on the other qubits) in place.
void apply_gate_in_place(StateVector &state, const Gate &gate);
StateVector apply_gate(StateVector state, const Gate &gate);

/// Decomposition of a state as |0>|A0> + |1>|A1> with respect to one qubit.
struct Outcome {
    double p1 = 0;
    double norm0_sq = 0;
    double norm1_sq = 0;
};

Outcome measure_qubit(const StateVector &state, Qubit qubit);

struct SimulatorConfig {
    std::size_t max_qubits = 20;
};

/// Basis index of |alpha>: variable wires take the assigned bit, constants their value.
std::uint64_t initial_basis_index(const Circuit &circuit, const Assignment &assignment);

struct RunResult {
    StateVector state;
    Outcome outcome;
};

/// Runs the gates in step order on |alpha> and decomposes on the output qubit.
RunResult run(const Circuit &circuit, const Assignment &assignment, const SimulatorConfig &config = {});

/// Applies every gate to an arbitrary starting state (used for entangled-input checks).
StateVector run_on_state(const Circuit &circuit, StateVector state);

/// p_alpha for every alpha in {0,1}^n, indexed with x_1 as the most-significant bit.
std::vector<double> acceptance_probabilities(const Circuit &circuit, const SimulatorConfig &config = {});

struct FunctionVerdict {
    enum class Kind { kComputes, kFailsAt, kUndeterminedAt };

    Kind kind = Kind::kComputes;
    std::uint64_t alpha = 0;
    double p = 0;

    std::string str() const;
    bool operator==(const FunctionVerdict &other) const = default;
};

/// Classifies one acceptance probability against the bounded-error thresholds.
/// Returns kComputes when p > 2/3 and f = 1, or p < 1/3 and f = 0.
FunctionVerdict::Kind classify(double p, bool expected);

/// Checks p_alpha > 2/3 where f = 1 and p_alpha < 1/3 where f = 0; reports the first alpha
/// that fails. p in [1/3, 2/3] is undetermined regardless of f.
FunctionVerdict evaluate(const Circuit &circuit, const TruthTable &table, const SimulatorConfig &config = {});
FunctionVerdict evaluate_probabilities(std::span<const double> probabilities, const TruthTable &table);

}  // namespace qformula

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
#include <random>
#include <vector>

#include "qformula/circuit.h"
#include "qformula/linalg.h"
#include "qformula/rewrite.h"

namespace qformula {

/// Normalized state with independent Gaussian amplitudes.
ComplexVector random_state(std::mt19937_64 &rng, std::size_t num_qubits);

/// Unitary from Gram-Schmidt on a Gaussian matrix.
ComplexMatrix random_unitary(std::mt19937_64 &rng, std::size_t dim);

/// Random gate: a Haar-like unitary or, with some probability, a permutation/Clifford-style gate.
Gate random_gate(std::mt19937_64 &rng, std::vector<Qubit> targets, std::size_t step);

/// Arbitrary circuit (not necessarily a formula) with variable and constant labels.
Circuit random_circuit(
    std::mt19937_64 &rng, std::size_t num_qubits, std::size_t num_gates, std::size_t max_arity, std::size_t num_variables);

struct FormulaCorpusOptions {
    std::size_t max_qubits = 12;
    /// Block-labeled wires: 1 or 2.
    std::size_t max_block_wires = 2;
    /// Companion qubits per segment: 0..max_companions.
    std::size_t max_companions = 4;
    std::size_t max_interior = 3;
    /// Gates acting on dead or unused wires only.
    std::size_t max_noise_gates = 3;
};

/// A formula over the block {x1} with two distinct restrictions of the other variables.
struct FormulaCase {
    Circuit formula;
    Block block;
    Restriction rho;
    Restriction tau;
    /// Companion counts requested for each segment, in construction order.
    std::vector<std::size_t> companion_counts;
};

/// Tree-structured formula: every segment of the x1 path tree has an interior gate.
FormulaCase random_formula_case(std::mt19937_64 &rng, const FormulaCorpusOptions &options = {});

std::vector<FormulaCase> formula_corpus(std::uint64_t seed, std::size_t count, const FormulaCorpusOptions &options = {});

}  // namespace qformula

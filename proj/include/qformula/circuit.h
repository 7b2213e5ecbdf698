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
#include <string>
#include <vector>

#include "qformula/linalg.h"

namespace qformula {

using Qubit = std::uint32_t;
/// 1-based variable index (x_1 ... x_n).
using VariableIndex = std::uint32_t;

/// What an input wire carries: a variable x_j or a constant |0>/|1>.
class InputLabel {
   public:
    static InputLabel variable(VariableIndex j) {
        return InputLabel(j, false);
    }
    static InputLabel constant(bool value) {
        return InputLabel(0, value);
    }

    bool is_variable() const {
        return variable_ != 0;
    }
    bool is_constant() const {
        return variable_ == 0;
    }
    VariableIndex variable_index() const {
        return variable_;
    }
    bool constant_value() const {
        return value_;
    }

    std::string str() const;
    bool operator==(const InputLabel &other) const = default;

   private:
    InputLabel(VariableIndex j, bool value) : variable_(j), value_(value) {
    }

    VariableIndex variable_;
    bool value_;
};

/// A unitary acting on an ordered list of target qubits. The first target indexes the
/// most-significant bit of the matrix rows and columns.
struct Gate {
    std::size_t step = 0;
    std::vector<Qubit> targets;
    ComplexMatrix matrix;

    std::size_t arity() const {
        return targets.size();
    }
    bool acts_on(Qubit q) const;
    bool operator==(const Gate &other) const = default;
};

/// Gate-list circuit over `num_qubits` wires. Qubit 0 is the most-significant bit of a basis index.
struct Circuit {
    std::size_t num_qubits = 0;
    std::size_t num_variables = 0;
    std::vector<InputLabel> labels;
    std::vector<Gate> gates;
    Qubit output_qubit = 0;
    std::size_t arity_bound = 2;

    /// Gates plus input wires.
    std::size_t size() const {
        return gates.size() + num_qubits;
    }
    bool operator==(const Circuit &other) const = default;
};

struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const {
        return issues.empty();
    }
    std::string str() const;
};

/// Lists every violated invariant; an empty report means the circuit is well-formed.
ValidationReport validate(const Circuit &circuit);

/// Throws StructuralError carrying the report when `validate` finds problems.
void require_valid(const Circuit &circuit);

/// Largest variable index mentioned by any label (0 if none).
VariableIndex max_variable_index(const std::vector<InputLabel> &labels);

/// Renumbers gate steps to 1..t in list order.
void renumber_steps(Circuit &circuit);

}  // namespace qformula

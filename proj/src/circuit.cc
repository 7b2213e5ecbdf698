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

#include "qformula/circuit.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "qformula/errors.h"

namespace qformula {

std::string InputLabel::str() const {
    if (is_variable()) {
        return "x" + std::to_string(variable_);
    }
    return value_ ? "|1>" : "|0>";
}

bool Gate::acts_on(Qubit q) const {
    return std::find(targets.begin(), targets.end(), q) != targets.end();
}

std::string ValidationReport::str() const {
    std::string out;
    for (const auto &issue : issues) {
        if (!out.empty()) {
            out += "; ";
        }
        out += issue;
    }
    return out;
}

VariableIndex max_variable_index(const std::vector<InputLabel> &labels) {
    VariableIndex n = 0;
    for (const auto &label : labels) {
        n = std::max(n, label.variable_index());
    }
    return n;
}

ValidationReport validate(const Circuit &circuit) {
    ValidationReport report;
    auto add = [&](std::string issue) { report.issues.push_back(std::move(issue)); };

    if (circuit.labels.size() != circuit.num_qubits) {
        add("expected " + std::to_string(circuit.num_qubits) + " labels, found " +
            std::to_string(circuit.labels.size()));
    }
    for (std::size_t q = 0; q < circuit.labels.size(); q++) {
        const auto &label = circuit.labels[q];
        if (label.is_variable() && label.variable_index() > circuit.num_variables) {
            add("qubit " + std::to_string(q) + " labeled x" + std::to_string(label.variable_index()) +
                " but the circuit has " + std::to_string(circuit.num_variables) + " variables");
        }
    }
    if (circuit.num_qubits == 0) {
        add("circuit has no qubits");
    } else if (circuit.output_qubit >= circuit.num_qubits) {
        add("output qubit " + std::to_string(circuit.output_qubit) + " out of range");
    }
    if (circuit.arity_bound == 0) {
        add("arity bound must be positive");
    }

    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        const Gate &gate = circuit.gates[g];
        std::string where = " at step " + std::to_string(gate.step);
        if (gate.step != g + 1) {
            add("steps must be 1..t consecutive: gate " + std::to_string(g + 1) + " has step " +
                std::to_string(gate.step));
        }
        if (gate.targets.empty()) {
            add("gate without targets" + where);
            continue;
        }
        if (gate.arity() > circuit.arity_bound) {
            add("arity exceeds bound" + where + " (" + std::to_string(gate.arity()) + " > " +
                std::to_string(circuit.arity_bound) + ")");
        }
        std::set<Qubit> seen;
        for (Qubit q : gate.targets) {
            if (q >= circuit.num_qubits) {
                add("target " + std::to_string(q) + " out of range" + where);
            }
            if (!seen.insert(q).second) {
                add("duplicate target " + std::to_string(q) + where);
            }
        }
        if (gate.arity() >= 8 * sizeof(std::size_t) - 1) {
            add("gate arity too large" + where);
            continue;
        }
        std::size_t dim = std::size_t{1} << gate.arity();
        if (gate.matrix.rows() != dim || gate.matrix.cols() != dim) {
            add("matrix dimension mismatch" + where + ": expected " + std::to_string(dim) + "x" +
                std::to_string(dim));
            continue;
        }
        bool finite = std::all_of(gate.matrix.entries().begin(), gate.matrix.entries().end(), [](const Complex &c) {
            return std::isfinite(c.real()) && std::isfinite(c.imag());
        });
        if (!finite) {
            add("non-finite matrix entry" + where);
            continue;
        }
        double defect = unitarity_defect(gate.matrix);
        if (defect > kUnitarityTolerance) {
            add("non-unitary" + where + " (defect " + std::to_string(defect) + ")");
        }
    }
    return report;
}

void require_valid(const Circuit &circuit) {
    auto report = validate(circuit);
    if (!report.ok()) {
        throw StructuralError("invalid circuit: " + report.str());
    }
}

void renumber_steps(Circuit &circuit) {
    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        circuit.gates[g].step = g + 1;
    }
}

}  // namespace qformula

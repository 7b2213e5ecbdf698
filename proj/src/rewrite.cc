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

#include <algorithm>
#include <set>
#include <string>

#include "qformula/errors.h"
#include "qformula/rewrite.h"

namespace qformula {

Circuit restrict_circuit(const Circuit &circuit, const Restriction &rho) {
    for (const auto &[j, value] : rho.values) {
        if (j == 0 || j > circuit.num_variables) {
            throw DomainError("restriction assigns unknown variable x" + std::to_string(j));
        }
        if (block_contains(rho.block, j)) {
            throw DomainError("restriction assigns block variable x" + std::to_string(j));
        }
    }
    for (VariableIndex j = 1; j <= circuit.num_variables; j++) {
        if (!block_contains(rho.block, j) && !rho.values.count(j)) {
            throw DomainError("restriction is not total: x" + std::to_string(j) + " has no value");
        }
    }
    Circuit out = circuit;
    for (auto &label : out.labels) {
        if (label.is_variable() && !block_contains(rho.block, label.variable_index())) {
            label = InputLabel::constant(rho.values.at(label.variable_index()));
        }
    }
    return out;
}

Decomposition decompose_disjoint(std::span<const Gate> gates, std::span<const Qubit> q1, std::span<const Qubit> q2) {
    std::set<Qubit> first(q1.begin(), q1.end());
    std::set<Qubit> second(q2.begin(), q2.end());
    for (Qubit q : first) {
        if (second.count(q)) {
            throw DomainError("qubit sets overlap at qubit " + std::to_string(q));
        }
    }
    Decomposition out;
    for (const Gate &gate : gates) {
        bool in_first = std::all_of(gate.targets.begin(), gate.targets.end(), [&](Qubit q) { return first.count(q); });
        bool in_second =
            std::all_of(gate.targets.begin(), gate.targets.end(), [&](Qubit q) { return second.count(q); });
        if (in_first) {
            out.first.push_back(gate);
        } else if (in_second) {
            out.second.push_back(gate);
        } else {
            throw DomainError("gate at step " + std::to_string(gate.step) + " straddles the two qubit sets");
        }
    }
    return out;
}

Circuit postpone(const Circuit &circuit, Qubit q, std::span<const Qubit> r_list) {
    std::vector<std::size_t> on_q;
    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        if (circuit.gates[g].acts_on(q)) {
            on_q.push_back(g);
        }
    }
    if (on_q.size() != r_list.size()) {
        throw StructuralError(
            std::to_string(on_q.size()) + " gates act on qubit " + std::to_string(q) + " but " +
            std::to_string(r_list.size()) + " partner qubits were given");
    }
    if (on_q.empty()) {
        return circuit;
    }
    for (std::size_t j = 0; j < on_q.size(); j++) {
        const Gate &g = circuit.gates[on_q[j]];
        bool pair = g.arity() == 2 && g.acts_on(r_list[j]) && r_list[j] != q;
        if (!pair) {
            throw StructuralError(
                "gate at step " + std::to_string(g.step) + " does not act on exactly qubit " + std::to_string(q) +
                " and qubit " + std::to_string(r_list[j]));
        }
    }

    std::size_t first = on_q.front();
    std::size_t last = on_q.back();
    std::set<Qubit> postponed;
    std::vector<Gate> kept;
    std::vector<Gate> moved;
    std::size_t next_g = 0;
    for (std::size_t g = first; g <= last; g++) {
        const Gate &gate = circuit.gates[g];
        bool touches = std::any_of(
            gate.targets.begin(), gate.targets.end(), [&](Qubit x) { return postponed.count(x) > 0; });
        if (next_g < on_q.size() && g == on_q[next_g]) {
            if (touches) {
                throw StructuralError(
                    "gate at step " + std::to_string(gate.step) + " meets a qubit that left an earlier gate on qubit " +
                    std::to_string(q));
            }
            kept.push_back(gate);
            postponed.insert(r_list[next_g]);
            next_g++;
            continue;
        }
        if (touches) {
            postponed.insert(gate.targets.begin(), gate.targets.end());
            moved.push_back(gate);
        } else {
            kept.push_back(gate);
        }
    }

    Circuit out = circuit;
    out.gates.assign(circuit.gates.begin(), circuit.gates.begin() + static_cast<std::ptrdiff_t>(first));
    out.gates.insert(out.gates.end(), kept.begin(), kept.end());
    out.gates.insert(out.gates.end(), moved.begin(), moved.end());
    out.gates.insert(
        out.gates.end(), circuit.gates.begin() + static_cast<std::ptrdiff_t>(last) + 1, circuit.gates.end());
    renumber_steps(out);
    return out;
}

}  // namespace qformula

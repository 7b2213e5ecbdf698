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

#include "qformula/random_circuits.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "qformula/errors.h"

namespace qformula {

namespace {

std::size_t uniform(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64 &rng, double p = 0.5) {
    return std::bernoulli_distribution(p)(rng);
}

ComplexMatrix structured_gate(std::mt19937_64 &rng, std::size_t arity) {
    const double h = 1 / std::sqrt(2.0);
    if (arity == 1) {
        switch (uniform(rng, 0, 3)) {
            case 0:
                return {{h, h}, {h, -h}};
            case 1:
                return {{0, 1}, {1, 0}};
            case 2:
                return {{1, 0}, {0, Complex{0, 1}}};
            default:
                return ComplexMatrix::identity(2);
        }
    }
    switch (uniform(rng, 0, 3)) {
        case 0:  // CNOT, control on the first target
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case 1:  // CZ
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
        case 2:  // SWAP
            return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        default:
            return kron(ComplexMatrix::identity(2), ComplexMatrix{{h, h}, {h, -h}});
    }
}

// Expression tree for the formula generator.
struct Node {
    bool leaf = false;
    InputLabel label = InputLabel::constant(false);
    std::vector<std::unique_ptr<Node>> children;
    // Index of the child whose wire carries the gate's output.
    std::size_t output_child = 0;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_leaf(InputLabel label) {
    auto node = std::make_unique<Node>();
    node->leaf = true;
    node->label = label;
    return node;
}

NodePtr make_gate(std::mt19937_64 &rng, std::vector<NodePtr> children) {
    auto node = std::make_unique<Node>();
    node->children = std::move(children);
    node->output_child = uniform(rng, 0, node->children.size() - 1);
    return node;
}

class FormulaBuilder {
   public:
    FormulaBuilder(std::mt19937_64 &rng, std::size_t num_other_variables)
        : rng_(rng), other_variables_(num_other_variables) {
    }

    InputLabel side_label() {
        if (other_variables_ > 0 && coin(rng_, 0.4)) {
            return InputLabel::variable(static_cast<VariableIndex>(uniform(rng_, 2, other_variables_ + 1)));
        }
        return InputLabel::constant(coin(rng_));
    }

    NodePtr side_tree(std::size_t leaves) {
        NodePtr node;
        if (leaves == 1) {
            node = make_leaf(side_label());
        } else {
            std::size_t left = uniform(rng_, 1, leaves - 1);
            std::vector<NodePtr> children;
            children.push_back(side_tree(left));
            children.push_back(side_tree(leaves - left));
            node = make_gate(rng_, std::move(children));
        }
        if (coin(rng_, 0.3)) {
            std::vector<NodePtr> children;
            children.push_back(std::move(node));
            node = make_gate(rng_, std::move(children));
        }
        return node;
    }

    /// Extends `node` by `interior` gates whose side inputs hold `companions` leaves in total.
    NodePtr segment(NodePtr node, std::size_t interior, std::size_t companions) {
        std::vector<std::size_t> share(interior, 0);
        for (std::size_t c = 0; c < companions; c++) {
            share[uniform(rng_, 0, interior - 1)]++;
        }
        for (std::size_t i = 0; i < interior; i++) {
            std::vector<NodePtr> children;
            children.push_back(std::move(node));
            if (share[i] > 0) {
                children.push_back(side_tree(share[i]));
                if (coin(rng_)) {
                    std::swap(children[0], children[1]);
                }
            }
            node = make_gate(rng_, std::move(children));
        }
        return node;
    }

    /// Emits gates in post-order; returns the qubit carrying the node's value.
    Qubit compile(const Node &node, Circuit &circuit) {
        if (node.leaf) {
            circuit.labels.push_back(node.label);
            return static_cast<Qubit>(circuit.num_qubits++);
        }
        std::vector<std::size_t> order(node.children.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_);
        std::vector<Qubit> wires(node.children.size());
        for (std::size_t k : order) {
            wires[k] = compile(*node.children[k], circuit);
        }
        std::vector<Qubit> targets = wires;
        std::shuffle(targets.begin(), targets.end(), rng_);
        circuit.gates.push_back(random_gate(rng_, targets, circuit.gates.size() + 1));
        return wires[node.output_child];
    }

   private:
    std::mt19937_64 &rng_;
    std::size_t other_variables_;
};

// Inserts gates that only touch wires no later computation-graph gate uses.
void add_noise(std::mt19937_64 &rng, Circuit &circuit, std::size_t count) {
    for (std::size_t k = 0; k < count; k++) {
        std::size_t position = uniform(rng, 0, circuit.gates.size());
        std::vector<Qubit> dead;
        for (Qubit q = 0; q < circuit.num_qubits; q++) {
            if (q == circuit.output_qubit) {
                continue;
            }
            bool used_later = false;
            for (std::size_t g = position; g < circuit.gates.size(); g++) {
                used_later = used_later || circuit.gates[g].acts_on(q);
            }
            if (!used_later) {
                dead.push_back(q);
            }
        }
        if (dead.empty()) {
            continue;
        }
        std::shuffle(dead.begin(), dead.end(), rng);
        std::size_t arity = dead.size() >= 2 && coin(rng) ? 2 : 1;
        dead.resize(arity);
        circuit.gates.insert(
            circuit.gates.begin() + static_cast<std::ptrdiff_t>(position), random_gate(rng, dead, 0));
    }
    renumber_steps(circuit);
}

void permute_qubits(std::mt19937_64 &rng, Circuit &circuit) {
    std::vector<Qubit> perm(circuit.num_qubits);
    std::iota(perm.begin(), perm.end(), Qubit{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<InputLabel> labels(circuit.labels);
    for (Qubit q = 0; q < circuit.num_qubits; q++) {
        labels[perm[q]] = circuit.labels[q];
    }
    circuit.labels = std::move(labels);
    for (auto &gate : circuit.gates) {
        for (auto &t : gate.targets) {
            t = perm[t];
        }
    }
    circuit.output_qubit = perm[circuit.output_qubit];
}

}  // namespace

ComplexVector random_state(std::mt19937_64 &rng, std::size_t num_qubits) {
    std::normal_distribution<double> gauss;
    ComplexVector out(std::size_t{1} << num_qubits);
    for (auto &a : out) {
        a = Complex{gauss(rng), gauss(rng)};
    }
    double n = norm(out);
    for (auto &a : out) {
        a /= n;
    }
    return out;
}

ComplexMatrix random_unitary(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> gauss;
    std::vector<ComplexVector> columns(dim, ComplexVector(dim));
    for (auto &c : columns) {
        for (auto &a : c) {
            a = Complex{gauss(rng), gauss(rng)};
        }
    }
    auto basis = orthonormalize(columns, 1e-12);
    if (basis.dim != dim) {
        throw NumericalError("random matrix was rank deficient");
    }
    ComplexMatrix out(dim, dim);
    for (std::size_t c = 0; c < dim; c++) {
        out.set_column(c, basis.basis[c]);
    }
    return out;
}

Gate random_gate(std::mt19937_64 &rng, std::vector<Qubit> targets, std::size_t step) {
    std::size_t k = targets.size();
    if (k == 0) {
        throw DomainError("a gate needs at least one target");
    }
    ComplexMatrix u = k <= 2 && coin(rng, 0.3) ? structured_gate(rng, k) : random_unitary(rng, std::size_t{1} << k);
    return Gate{step, std::move(targets), std::move(u)};
}

Circuit random_circuit(
    std::mt19937_64 &rng, std::size_t num_qubits, std::size_t num_gates, std::size_t max_arity, std::size_t num_variables) {
    if (num_qubits == 0 || max_arity == 0) {
        throw DomainError("random circuits need qubits and a positive arity");
    }
    Circuit circuit;
    circuit.num_qubits = num_qubits;
    circuit.num_variables = num_variables;
    circuit.arity_bound = std::min(max_arity, num_qubits);
    for (std::size_t q = 0; q < num_qubits; q++) {
        if (num_variables > 0 && coin(rng, 0.7)) {
            circuit.labels.push_back(InputLabel::variable(static_cast<VariableIndex>(uniform(rng, 1, num_variables))));
        } else {
            circuit.labels.push_back(InputLabel::constant(coin(rng)));
        }
    }
    std::vector<Qubit> all(num_qubits);
    std::iota(all.begin(), all.end(), Qubit{0});
    for (std::size_t g = 0; g < num_gates; g++) {
        std::shuffle(all.begin(), all.end(), rng);
        std::size_t k = uniform(rng, 1, circuit.arity_bound);
        circuit.gates.push_back(random_gate(rng, std::vector<Qubit>(all.begin(), all.begin() + k), g + 1));
    }
    circuit.output_qubit = static_cast<Qubit>(uniform(rng, 0, num_qubits - 1));
    return circuit;
}

FormulaCase random_formula_case(std::mt19937_64 &rng, const FormulaCorpusOptions &options) {
    if (options.max_qubits < 4 || options.max_block_wires == 0 || options.max_interior == 0) {
        throw DomainError("corpus options leave no room for a formula");
    }
    FormulaCase out;
    out.block = {1};
    const std::size_t others = uniform(rng, 1, 3);
    FormulaBuilder builder(rng, others);

    const std::size_t s = uniform(rng, 1, std::min<std::size_t>(2, options.max_block_wires));
    const std::size_t segments = s == 1 ? 1 : 3;
    // One wire for x2.. when none lands in a side tree, the rest for companions.
    std::size_t budget = options.max_qubits - s - 1;
    for (std::size_t k = 0; k < segments; k++) {
        std::size_t v = std::min(uniform(rng, 0, options.max_companions), budget);
        budget -= v;
        out.companion_counts.push_back(v);
    }
    auto interior = [&] { return uniform(rng, 1, options.max_interior); };

    NodePtr root;
    if (s == 1) {
        root = builder.segment(make_leaf(InputLabel::variable(1)), interior(), out.companion_counts[0]);
    } else {
        std::vector<NodePtr> children;
        children.push_back(builder.segment(make_leaf(InputLabel::variable(1)), interior(), out.companion_counts[0]));
        children.push_back(builder.segment(make_leaf(InputLabel::variable(1)), interior(), out.companion_counts[1]));
        root = builder.segment(make_gate(rng, std::move(children)), interior(), out.companion_counts[2]);
    }

    Circuit &c = out.formula;
    c.arity_bound = 2;
    c.output_qubit = builder.compile(*root, c);

    // Extra wires carrying the remaining variables (and sometimes a spare constant).
    for (VariableIndex j = 2; j <= others + 1 && c.num_qubits + 1 < options.max_qubits; j++) {
        if (coin(rng)) {
            c.labels.push_back(InputLabel::variable(j));
            c.num_qubits++;
        }
    }
    c.labels.push_back(InputLabel::variable(2));
    c.num_qubits++;
    c.num_variables = max_variable_index(c.labels);

    add_noise(rng, c, uniform(rng, 0, options.max_noise_gates));
    permute_qubits(rng, c);

    out.rho.block = out.block;
    out.tau.block = out.block;
    for (VariableIndex j = 2; j <= c.num_variables; j++) {
        bool value = coin(rng);
        out.rho.values[j] = value;
        out.tau.values[j] = value;
    }
    VariableIndex flip = static_cast<VariableIndex>(uniform(rng, 2, c.num_variables));
    out.tau.values[flip] = !out.tau.values[flip];
    return out;
}

std::vector<FormulaCase> formula_corpus(std::uint64_t seed, std::size_t count, const FormulaCorpusOptions &options) {
    std::mt19937_64 rng(seed);
    std::vector<FormulaCase> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; k++) {
        out.push_back(random_formula_case(rng, options));
    }
    return out;
}

}  // namespace qformula

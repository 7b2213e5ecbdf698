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

#include "qformula/formula.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "qformula/errors.h"

namespace qformula {

Block make_block(std::vector<VariableIndex> variables) {
    std::sort(variables.begin(), variables.end());
    variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
    if (!variables.empty() && variables.front() == 0) {
        throw DomainError("variable indices start at 1");
    }
    return variables;
}

bool block_contains(const Block &block, VariableIndex j) {
    return std::binary_search(block.begin(), block.end(), j);
}

WireIndex::WireIndex(const Circuit &circuit)
    : previous(circuit.gates.size()),
      next(circuit.gates.size()),
      first_on_qubit(circuit.num_qubits),
      last_on_qubit(circuit.num_qubits) {
    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        const auto &targets = circuit.gates[g].targets;
        previous[g].resize(targets.size());
        next[g].resize(targets.size());
        for (std::size_t i = 0; i < targets.size(); i++) {
            Qubit q = targets[i];
            if (q >= circuit.num_qubits) {
                throw DomainError("gate at step " + std::to_string(circuit.gates[g].step) + " targets a missing qubit");
            }
            previous[g][i] = last_on_qubit[q];
            if (last_on_qubit[q]) {
                const auto &prev_targets = circuit.gates[*last_on_qubit[q]].targets;
                auto pos = std::find(prev_targets.begin(), prev_targets.end(), q) - prev_targets.begin();
                next[*last_on_qubit[q]][pos] = g;
            } else {
                first_on_qubit[q] = g;
            }
            last_on_qubit[q] = g;
        }
    }
}

std::optional<std::size_t> ComputationGraph::node_of_gate(std::size_t gate) const {
    for (std::size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k].kind == GraphNode::Kind::kGate && nodes[k].index == gate) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> ComputationGraph::node_of_wire(Qubit qubit) const {
    for (std::size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k].kind == GraphNode::Kind::kInputWire && nodes[k].index == qubit) {
            return k;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> ComputationGraph::gates() const {
    std::vector<std::size_t> out;
    for (const auto &node : nodes) {
        if (node.kind == GraphNode::Kind::kGate) {
            out.push_back(node.index);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GraphEdge> ComputationGraph::inputs_of(std::size_t node) const {
    std::vector<GraphEdge> out;
    for (const auto &e : edges) {
        if (e.parent == node) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<GraphEdge> ComputationGraph::outputs_of(std::size_t node) const {
    std::vector<GraphEdge> out;
    for (const auto &e : edges) {
        if (e.child == node) {
            out.push_back(e);
        }
    }
    return out;
}

ComputationGraph computation_graph(const Circuit &circuit) {
    if (circuit.output_qubit >= circuit.num_qubits) {
        throw DomainError("output qubit out of range");
    }
    WireIndex wires(circuit);
    ComputationGraph graph;
    std::vector<std::optional<std::size_t>> gate_node(circuit.gates.size());
    std::vector<std::optional<std::size_t>> wire_node(circuit.num_qubits);

    auto root_gate = wires.last_on_qubit[circuit.output_qubit];
    if (!root_gate) {
        graph.nodes.push_back({GraphNode::Kind::kInputWire, circuit.output_qubit});
        graph.root = 0;
        return graph;
    }
    graph.nodes.push_back({GraphNode::Kind::kGate, *root_gate});
    gate_node[*root_gate] = 0;
    graph.root = 0;

    std::vector<std::size_t> pending{0};
    while (!pending.empty()) {
        std::size_t parent = pending.back();
        pending.pop_back();
        std::size_t g = graph.nodes[parent].index;
        const auto &targets = circuit.gates[g].targets;
        for (std::size_t i = 0; i < targets.size(); i++) {
            std::size_t child;
            if (auto prev = wires.previous[g][i]) {
                if (!gate_node[*prev]) {
                    gate_node[*prev] = graph.nodes.size();
                    graph.nodes.push_back({GraphNode::Kind::kGate, *prev});
                    pending.push_back(*gate_node[*prev]);
                }
                child = *gate_node[*prev];
            } else {
                if (!wire_node[targets[i]]) {
                    wire_node[targets[i]] = graph.nodes.size();
                    graph.nodes.push_back({GraphNode::Kind::kInputWire, targets[i]});
                }
                child = *wire_node[targets[i]];
            }
            graph.edges.push_back({child, parent, targets[i]});
        }
    }
    return graph;
}

bool is_tree(const ComputationGraph &graph) {
    std::vector<std::vector<std::size_t>> children(graph.nodes.size());
    for (const auto &e : graph.edges) {
        children[e.parent].push_back(e.child);
    }
    std::vector<bool> visited(graph.nodes.size(), false);
    std::vector<std::size_t> stack{graph.root};
    visited[graph.root] = true;
    while (!stack.empty()) {
        std::size_t node = stack.back();
        stack.pop_back();
        for (std::size_t child : children[node]) {
            if (visited[child]) {
                return false;
            }
            visited[child] = true;
            stack.push_back(child);
        }
    }
    return true;
}

std::vector<std::uint64_t> output_path_counts(const Circuit &circuit) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    auto add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
    WireIndex wires(circuit);
    std::vector<std::uint64_t> through(circuit.gates.size(), 0);
    for (std::size_t g = circuit.gates.size(); g-- > 0;) {
        const auto &targets = circuit.gates[g].targets;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < targets.size(); i++) {
            if (auto nxt = wires.next[g][i]) {
                total = add(total, through[*nxt]);
            } else if (targets[i] == circuit.output_qubit) {
                total = add(total, 1);
            }
        }
        through[g] = total;
    }
    std::vector<std::uint64_t> counts(circuit.num_qubits, 0);
    for (Qubit q = 0; q < circuit.num_qubits; q++) {
        if (auto first = wires.first_on_qubit[q]) {
            counts[q] = through[*first];
        } else {
            counts[q] = q == circuit.output_qubit ? 1 : 0;
        }
    }
    return counts;
}

bool has_unique_paths(const Circuit &circuit) {
    auto counts = output_path_counts(circuit);
    return std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c <= 1; });
}

bool is_formula(const Circuit &circuit) {
    bool tree = is_tree(computation_graph(circuit));
    bool unique = has_unique_paths(circuit);
    if (tree != unique) {
        throw std::logic_error("tree test and unique-path test disagree");
    }
    return tree;
}

namespace {

struct TreeView {
    ComputationGraph graph;
    std::vector<std::optional<GraphEdge>> parent_edge;
    std::vector<std::vector<GraphEdge>> input_edges;

    explicit TreeView(const Circuit &circuit) : graph(computation_graph(circuit)) {
        if (!is_formula(circuit)) {
            throw StructuralError("circuit is not a formula");
        }
        parent_edge.resize(graph.nodes.size());
        input_edges.resize(graph.nodes.size());
        for (const auto &e : graph.edges) {
            parent_edge[e.child] = e;
            input_edges[e.parent].push_back(e);
        }
    }

    std::size_t gate_node(std::size_t gate) const {
        auto node = graph.node_of_gate(gate);
        if (!node) {
            throw std::logic_error("gate outside the computation graph");
        }
        return *node;
    }
};

std::optional<Qubit> other_target(const Gate &gate, Qubit excluded) {
    for (Qubit q : gate.targets) {
        if (q != excluded) {
            return q;
        }
    }
    return std::nullopt;
}

}  // namespace

PathSet path_sets(const Circuit &circuit, const Block &block) {
    TreeView tree(circuit);
    PathSet out;
    out.block = block;
    for (Qubit q = 0; q < circuit.num_qubits; q++) {
        const auto &label = circuit.labels[q];
        if (!label.is_variable() || !block_contains(block, label.variable_index())) {
            continue;
        }
        out.wire_count++;
        auto leaf = tree.graph.node_of_wire(q);
        if (!leaf) {
            out.disconnected_wires.push_back(q);
            continue;
        }
        Path path{q, {}};
        std::size_t node = *leaf;
        while (node != tree.graph.root) {
            const GraphEdge &e = *tree.parent_edge[node];
            if (!path.hops.empty()) {
                path.hops.back().out = e.wire;
            }
            path.hops.push_back({tree.graph.nodes[e.parent].index, e.wire, 0});
            node = e.parent;
        }
        if (!path.hops.empty()) {
            path.hops.back().out = circuit.output_qubit;
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

std::vector<std::size_t> intersection_gates(const PathSet &paths) {
    std::map<std::size_t, std::set<Qubit>> entries;
    for (const auto &path : paths.paths) {
        for (const auto &hop : path.hops) {
            entries[hop.gate].insert(hop.in);
        }
    }
    std::vector<std::size_t> out;
    for (const auto &[gate, wires] : entries) {
        if (wires.size() >= 2) {
            out.push_back(gate);
        }
    }
    return out;
}

std::vector<Segment> path_segments(const Circuit &circuit, const PathSet &paths) {
    auto meeting = intersection_gates(paths);
    std::map<std::size_t, std::set<Qubit>> entries;
    for (const auto &path : paths.paths) {
        for (const auto &hop : path.hops) {
            entries[hop.gate].insert(hop.in);
        }
    }
    // Prefer another path entry as the partner qubit; fall back to any other target.
    auto partner = [&](std::size_t g, Qubit excluded) -> std::optional<Qubit> {
        for (Qubit q : entries[g]) {
            if (q != excluded) {
                return q;
            }
        }
        return other_target(circuit.gates[g], excluded);
    };
    auto is_meeting = [&](std::size_t g) { return std::binary_search(meeting.begin(), meeting.end(), g); };
    std::size_t t = circuit.gates.size();

    std::vector<Segment> out;
    std::set<std::size_t> started;
    for (const auto &path : paths.paths) {
        Segment seg;
        seg.q0 = path.input_wire;
        bool continue_path = true;
        for (const auto &hop : path.hops) {
            if (!is_meeting(hop.gate)) {
                seg.interior.push_back(hop);
                continue;
            }
            const Gate &gate = circuit.gates[hop.gate];
            seg.end_gate = hop.gate;
            seg.exit = hop.in;
            seg.q2 = partner(hop.gate, hop.in);
            seg.j1 = gate.step;
            out.push_back(seg);
            if (!started.insert(hop.gate).second) {
                continue_path = false;
                break;
            }
            seg = Segment{};
            seg.start_gate = hop.gate;
            seg.q0 = hop.out;
            seg.q1 = partner(hop.gate, hop.out);
            seg.j0 = gate.step;
        }
        if (!continue_path) {
            continue;
        }
        seg.end_gate.reset();
        seg.q2.reset();
        seg.exit = path.hops.empty() ? path.input_wire : path.hops.back().out;
        seg.j1 = t + 1;
        out.push_back(seg);
    }
    std::stable_sort(out.begin(), out.end(), [](const Segment &a, const Segment &b) {
        if (a.j1 != b.j1) {
            return a.j1 < b.j1;
        }
        return a.q0 < b.q0;
    });
    return out;
}

CompanionPartition::CompanionPartition(std::size_t num_qubits, std::size_t step)
    : step_(step), parent_(num_qubits), rank_(num_qubits, 0) {
    std::iota(parent_.begin(), parent_.end(), Qubit{0});
}

Qubit CompanionPartition::find(Qubit q) const {
    if (q >= parent_.size()) {
        throw DomainError("qubit " + std::to_string(q) + " out of range");
    }
    Qubit root = q;
    while (parent_[root] != root) {
        root = parent_[root];
    }
    while (parent_[q] != root) {
        Qubit up = parent_[q];
        parent_[q] = root;
        q = up;
    }
    return root;
}

void CompanionPartition::unite(Qubit a, Qubit b) {
    Qubit ra = find(a);
    Qubit rb = find(b);
    if (ra == rb) {
        return;
    }
    if (rank_[ra] < rank_[rb]) {
        std::swap(ra, rb);
    }
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) {
        rank_[ra]++;
    }
}

std::vector<std::vector<Qubit>> CompanionPartition::classes() const {
    std::map<Qubit, std::vector<Qubit>> by_root;
    for (Qubit q = 0; q < parent_.size(); q++) {
        by_root[find(q)].push_back(q);
    }
    std::vector<std::vector<Qubit>> out;
    for (auto &[root, members] : by_root) {
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CompanionPartition companions(const Circuit &circuit, std::size_t step) {
    if (step > circuit.gates.size()) {
        throw DomainError("step " + std::to_string(step) + " beyond the last gate");
    }
    CompanionPartition partition(circuit.num_qubits, step);
    for (std::size_t g = 0; g < step; g++) {
        const auto &targets = circuit.gates[g].targets;
        for (std::size_t i = 1; i < targets.size(); i++) {
            partition.unite(targets[0], targets[i]);
        }
    }
    return partition;
}

std::vector<CompanionPartition> companion_history(const Circuit &circuit) {
    std::vector<CompanionPartition> out;
    out.emplace_back(circuit.num_qubits, 0);
    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        CompanionPartition next = out.back();
        next.step_ = g + 1;
        const auto &targets = circuit.gates[g].targets;
        for (std::size_t i = 1; i < targets.size(); i++) {
            next.unite(targets[0], targets[i]);
        }
        out.push_back(std::move(next));
    }
    return out;
}

CompanionSet companion_set_of_path(
    const Circuit &circuit, const PathSet &paths, const Segment &segment, LabelPolicy policy) {
    if (segment.length() <= 2) {
        throw DomainError("segment has no interior gates (length " + std::to_string(segment.length()) + ")");
    }
    TreeView tree(circuit);

    // Wires on which each gate receives path values.
    std::map<std::size_t, std::set<Qubit>> path_entries;
    for (const auto &path : paths.paths) {
        for (const auto &hop : path.hops) {
            path_entries[hop.gate].insert(hop.in);
        }
    }

    std::vector<std::size_t> core;
    if (segment.start_gate) {
        core.push_back(*segment.start_gate);
    }
    for (const auto &hop : segment.interior) {
        core.push_back(hop.gate);
    }

    std::set<std::size_t> segment_gates(core.begin(), core.end());
    std::set<Qubit> side_wires;
    for (std::size_t gate : core) {
        std::size_t node = tree.gate_node(gate);
        const auto &entries = path_entries[gate];
        for (const auto &e : tree.input_edges[node]) {
            if (entries.count(e.wire)) {
                continue;
            }
            std::vector<std::size_t> stack{e.child};
            while (!stack.empty()) {
                std::size_t n = stack.back();
                stack.pop_back();
                const auto &info = tree.graph.nodes[n];
                if (info.kind == GraphNode::Kind::kInputWire) {
                    side_wires.insert(static_cast<Qubit>(info.index));
                    continue;
                }
                segment_gates.insert(info.index);
                for (const auto &in : tree.input_edges[n]) {
                    stack.push_back(in.child);
                }
            }
        }
    }

    std::set<Qubit> register_qubits(side_wires.begin(), side_wires.end());
    for (std::size_t g : segment_gates) {
        register_qubits.insert(circuit.gates[g].targets.begin(), circuit.gates[g].targets.end());
    }
    register_qubits.insert(segment.q0);
    if (segment.q1) {
        register_qubits.insert(*segment.q1);
    }

    CompanionSet out;
    out.q0 = segment.q0;
    out.q1 = segment.q1;
    out.q2 = segment.q2;
    out.j0 = segment.j0;
    out.j1 = segment.j1;
    for (Qubit q : register_qubits) {
        if (q != segment.q0 && (!segment.q1 || q != *segment.q1)) {
            out.qubits.push_back(q);
        }
    }
    out.segment_gates.assign(segment_gates.begin(), segment_gates.end());

    for (Qubit q : out.qubits) {
        const auto &label = circuit.labels[q];
        if (!label.is_variable()) {
            continue;
        }
        if (block_contains(paths.block, label.variable_index())) {
            throw StructuralError(
                "companion qubit " + std::to_string(q) + " carries block variable " + label.str() +
                " (not a formula segment)");
        }
        if (policy == LabelPolicy::kRequireConstant) {
            throw StructuralError(
                "companion qubit " + std::to_string(q) + " is labeled " + label.str() + ", expected a constant");
        }
    }

    std::set<Qubit> companions_set(out.qubits.begin(), out.qubits.end());
    for (const auto &path : paths.paths) {
        if (companions_set.count(path.input_wire)) {
            throw StructuralError("companion qubit " + std::to_string(path.input_wire) + " is a path input wire");
        }
        for (const auto &hop : path.hops) {
            if (segment_gates.count(hop.gate)) {
                continue;
            }
            for (Qubit q : {hop.in, hop.out}) {
                if (!companions_set.count(q)) {
                    continue;
                }
                bool continues_path = q == segment.exit && circuit.gates[hop.gate].step >= segment.j1;
                if (!continues_path) {
                    throw StructuralError(
                        "companion qubit " + std::to_string(q) + " touches another path at step " +
                        std::to_string(circuit.gates[hop.gate].step));
                }
            }
        }
    }

    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        const Gate &gate = circuit.gates[g];
        if (gate.step <= segment.j0 || gate.step >= segment.j1 || tree.graph.contains_gate(g)) {
            continue;
        }
        bool touches = std::any_of(
            gate.targets.begin(), gate.targets.end(), [&](Qubit q) { return register_qubits.count(q) > 0; });
        if (touches) {
            out.postponed_gates.push_back(g);
        }
    }
    return out;
}

}  // namespace qformula

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
#include <optional>
#include <vector>

#include "qformula/circuit.h"

namespace qformula {

/// Sorted, duplicate-free set of variable indices.
using Block = std::vector<VariableIndex>;

Block make_block(std::vector<VariableIndex> variables);
bool block_contains(const Block &block, VariableIndex j);

/// Gate-level wiring: for every gate and target position, the neighbouring gates on that qubit.
struct WireIndex {
    std::vector<std::vector<std::optional<std::size_t>>> previous;
    std::vector<std::vector<std::optional<std::size_t>>> next;
    std::vector<std::optional<std::size_t>> first_on_qubit;
    std::vector<std::optional<std::size_t>> last_on_qubit;

    explicit WireIndex(const Circuit &circuit);
};

struct GraphNode {
    enum class Kind { kGate, kInputWire };

    Kind kind;
    /// Gate index for kGate, qubit for kInputWire.
    std::size_t index;

    bool operator==(const GraphNode &other) const = default;
};

/// "child provides an input to parent" along `wire`. Parallel edges are kept.
struct GraphEdge {
    std::size_t child;
    std::size_t parent;
    Qubit wire;
};

/// Gates reachable backward from the output gate, plus the input wires they read.
class ComputationGraph {
   public:
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::size_t root = 0;

    std::optional<std::size_t> node_of_gate(std::size_t gate) const;
    std::optional<std::size_t> node_of_wire(Qubit qubit) const;
    bool contains_gate(std::size_t gate) const {
        return node_of_gate(gate).has_value();
    }
    /// Gate indices in the graph, ascending.
    std::vector<std::size_t> gates() const;
    /// Edges into `node` (its inputs), in target order.
    std::vector<GraphEdge> inputs_of(std::size_t node) const;
    /// Edges out of `node` toward the root.
    std::vector<GraphEdge> outputs_of(std::size_t node) const;
};

/// Without any gate on the output qubit the graph is the bare output wire.
ComputationGraph computation_graph(const Circuit &circuit);

/// Depth-first tree test: no node of the graph is reached twice from the root.
bool is_tree(const ComputationGraph &graph);

/// Number of wire-level paths from each qubit's input wire to the output (saturating).
std::vector<std::uint64_t> output_path_counts(const Circuit &circuit);

/// Every input wire has at most one path to the output.
bool has_unique_paths(const Circuit &circuit);

/// Tree test, cross-checked against the unique-path test. Throws std::logic_error if they disagree.
bool is_formula(const Circuit &circuit);

/// One gate on a path: the path enters on `in` and leaves on `out`.
struct PathHop {
    std::size_t gate;
    Qubit in;
    Qubit out;

    bool operator==(const PathHop &other) const = default;
};

/// Path from an input wire to the output, gates in step order.
struct Path {
    Qubit input_wire;
    std::vector<PathHop> hops;
};

struct PathSet {
    Block block;
    /// One per connected wire labeled by a block variable, ordered by input qubit.
    std::vector<Path> paths;
    /// Wires labeled by a block variable that never reach the output.
    std::vector<Qubit> disconnected_wires;
    /// s_j: number of wires labeled by a block variable.
    std::size_t wire_count = 0;
};

/// Paths from every block-labeled input wire to the output. Throws StructuralError for non-formulas.
PathSet path_sets(const Circuit &circuit, const Block &block);

/// Gates where two paths of the set meet (at least two distinct entry wires carry paths).
std::vector<std::size_t> intersection_gates(const PathSet &paths);

/// Maximal piece of the path tree: starts at an input wire or a meeting gate, ends at the next
/// meeting gate or at the output wire, and has no meeting gates strictly inside.
struct Segment {
    /// Meeting gate the segment starts at; empty when it starts at input wire `q0`.
    std::optional<std::size_t> start_gate;
    /// Path qubit leaving the start element.
    Qubit q0 = 0;
    /// Other input of the start gate.
    std::optional<Qubit> q1;
    std::vector<PathHop> interior;
    /// Meeting gate the segment ends at; empty when it ends at the output wire.
    std::optional<std::size_t> end_gate;
    /// Qubit carrying the path into the end element.
    Qubit exit = 0;
    /// Other input of the end gate.
    std::optional<Qubit> q2;
    /// Step of the start gate (0 for an input wire) and of the end gate (t + 1 for the output).
    std::size_t j0 = 0;
    std::size_t j1 = 0;

    /// Number of path elements including both ends.
    std::size_t length() const {
        return interior.size() + 2;
    }
};

/// Segments in the natural order: ascending end step, ties by start qubit.
std::vector<Segment> path_segments(const Circuit &circuit, const PathSet &paths);

/// Union-find over qubits; classes are the companions at `step`.
class CompanionPartition {
   public:
    CompanionPartition(std::size_t num_qubits, std::size_t step);

    std::size_t step() const {
        return step_;
    }
    Qubit find(Qubit q) const;
    bool same(Qubit a, Qubit b) const {
        return find(a) == find(b);
    }
    void unite(Qubit a, Qubit b);
    /// Classes as sorted qubit lists, ordered by smallest member.
    std::vector<std::vector<Qubit>> classes() const;

   private:
    friend std::vector<CompanionPartition> companion_history(const Circuit &circuit);

    std::size_t step_;
    mutable std::vector<Qubit> parent_;
    std::vector<std::size_t> rank_;
};

/// Companion classes after gates with step <= `step` (0 <= step <= t).
CompanionPartition companions(const Circuit &circuit, std::size_t step);

/// Companion partitions for every step 0..t, built incrementally.
std::vector<CompanionPartition> companion_history(const Circuit &circuit);

enum class LabelPolicy {
    /// Every companion must be constant-labeled (restricted formulas).
    kRequireConstant,
    /// Variables outside the block are tolerated (analysis before restriction).
    kAllowOtherVariables,
};

struct CompanionSet {
    /// Q_pi: companions of the segment's gates, without q0 and q1. Sorted.
    std::vector<Qubit> qubits;
    Qubit q0 = 0;
    std::optional<Qubit> q1;
    std::optional<Qubit> q2;
    std::size_t j0 = 0;
    std::size_t j1 = 0;
    /// Gates preparing and running the segment: the start gate, the interior gates, and the
    /// constant-fed subtrees that feed interior gates. Step order.
    std::vector<std::size_t> segment_gates;
    /// Gates outside the computation graph acting on the segment's qubits between j0 and j1.
    std::vector<std::size_t> postponed_gates;
};

/// Companion set of a segment with length > 2. Throws DomainError for shorter segments and
/// StructuralError when a companion carries a block variable (or any variable under
/// kRequireConstant) or touches another path.
CompanionSet companion_set_of_path(
    const Circuit &circuit,
    const PathSet &paths,
    const Segment &segment,
    LabelPolicy policy = LabelPolicy::kRequireConstant);

}  // namespace qformula

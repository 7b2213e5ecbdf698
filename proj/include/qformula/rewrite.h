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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qformula/circuit.h"
#include "qformula/formula.h"
#include "qformula/linalg.h"
#include "qformula/simulator.h"

namespace qformula {

/// Values for every variable outside `block`.
struct Restriction {
    Block block;
    std::map<VariableIndex, bool> values;
};

/// Replaces each label x_i with i outside the block by the constant rho(x_i). Gates are kept.
/// Throws DomainError when rho misses a variable outside the block or assigns one inside it.
Circuit restrict_circuit(const Circuit &circuit, const Restriction &rho);

struct Decomposition {
    std::vector<Gate> first;
    std::vector<Gate> second;
};

/// Splits a gate list acting on disjoint qubit sets into its two halves, order preserved.
/// Throws DomainError for a gate with a qubit outside q1, or outside q2, on both sides.
Decomposition decompose_disjoint(
    std::span<const Gate> gates, std::span<const Qubit> q1, std::span<const Qubit> q2);

/// Moves the gates that follow each r_j after it leaves g_j to just after g_t, where
/// g_1..g_t are the gates on `q` and g_j acts on (q, r_j). Steps are renumbered.
/// Throws StructuralError naming the offending gate when the hypothesis fails.
Circuit postpone(const Circuit &circuit, Qubit q, std::span<const Qubit> r_list);

/// Everything the squeeze of one segment needs.
///
/// The local register is [q0, q1, Q_pi...] (q1 replaced by an untouched phantom qubit when the
/// segment starts at an input wire). After the segment's gates run on |a0 a1>|constants>, the
/// state is split on the exit qubit (c0) and on q1 (c1); the remaining v qubits, in register
/// order, hold the vector A^{a0 a1}_{c0 c1}.
struct SqueezeRecord {
    Segment segment;
    CompanionSet companions;
    bool phantom_q1 = false;
    /// 16 vectors of dimension 2^v, index a0*8 + a1*4 + c0*2 + c1.
    std::vector<ComplexVector> vectors;
    OrthonormalBasis basis;
    /// lambda[(a0*8 + a1*4 + c0*2 + c1) * 16 + j] = <A_j | A^{a0 a1}_{c0 c1}>, zero for j >= d.
    std::vector<Complex> lambda;
    double reconstruction_residual = 0;
    /// max over (a0, a1) of | sum |lambda|^2 - 1 |.
    double norm_defect = 0;

    std::size_t v() const {
        return companions.qubits.size();
    }
    std::size_t d() const {
        return basis.dim;
    }
    Complex lambda_at(unsigned a0, unsigned a1, unsigned c0, unsigned c1, std::size_t j) const {
        return lambda[((a0 * 8 + a1 * 4 + c0 * 2 + c1) * 16) + j];
    }
};

/// Builds the record of a segment with at least one interior gate. Throws DomainError for
/// shorter segments and StructuralError for variable-labeled companions.
SqueezeRecord squeeze_path(const Circuit &restricted, const PathSet &paths, const Segment &segment);

/// 6-qubit gate on (targets[0], targets[1], four fresh qubits) mapping |a0 a1 0000> to
/// sum lambda |c0 c1>|j>, completed to a 64x64 unitary. Throws NumericalError when the four
/// specified columns are not orthonormal within 1e-9.
Gate build_composite_gate(
    const SqueezeRecord &record,
    const std::array<Qubit, 6> &targets,
    std::size_t step,
    CompletionOrder order = CompletionOrder::kForward);

/// What became of one segment in the squeezed circuit.
struct SegmentImage {
    Segment segment;
    /// Index of the emitted gate, if any.
    std::optional<std::size_t> gate;
    /// Record index for composite gates.
    std::optional<std::size_t> record;
    /// Qubit of the squeezed circuit carrying the segment's value.
    Qubit output_slot = 0;
};

struct SqueezedCircuit {
    Circuit circuit;
    std::vector<SqueezeRecord> records;
    std::vector<SegmentImage> segments;
    /// Gates of the restricted circuit that are not part of the computation graph (dropped).
    std::vector<std::size_t> dropped_gates;
    /// Composite gates exceed the original arity bound.
    bool has_composite_gates = false;
    /// Number of wires labeled by a block variable.
    std::size_t block_wires = 0;
    bool borderline_rank = false;
};

/// Squeezes every segment of the block's path tree, in the natural order. Merge gates must have
/// exactly two path entries.
SqueezedCircuit squeeze_all(
    const Circuit &restricted, const Block &block, CompletionOrder order = CompletionOrder::kForward);

struct SqueezeVerification {
    double max_deviation = 0;
    /// Block assignment (index over the block variables, first variable most significant).
    std::uint64_t worst_block_alpha = 0;
    bool verdicts_agree = true;
    std::size_t assignments_checked = 0;
};

/// Compares p_alpha of both circuits over every assignment of the block variables (others 0).
/// Verdicts are computed against the table obtained by thresholding the restricted circuit at 1/2.
SqueezeVerification verify_squeeze(
    const Circuit &restricted, const Circuit &squeezed, const Block &block, const SimulatorConfig &config = {});

}  // namespace qformula

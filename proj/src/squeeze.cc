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
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "qformula/errors.h"
#include "qformula/rewrite.h"

namespace qformula {

namespace {

// Residual and norm checks on a record are exact algebra, held to this bound.
constexpr double kRecordTolerance = 1e-10;
// Isometry check on the four specified columns of a composite gate.
constexpr double kIsometryTolerance = 1e-9;

std::string describe(const Segment &segment) {
    std::string out = "segment from ";
    out += segment.start_gate ? "gate step " + std::to_string(segment.j0) : "input wire " + std::to_string(segment.q0);
    out += " to ";
    out += segment.end_gate ? "gate step " + std::to_string(segment.j1) : std::string("the output");
    return out;
}

std::set<Qubit> path_entries_of(const PathSet &paths, std::size_t gate) {
    std::set<Qubit> out;
    for (const auto &path : paths.paths) {
        for (const auto &hop : path.hops) {
            if (hop.gate == gate) {
                out.insert(hop.in);
            }
        }
    }
    return out;
}

}  // namespace

SqueezeRecord squeeze_path(const Circuit &restricted, const PathSet &paths, const Segment &segment) {
    SqueezeRecord record;
    record.segment = segment;
    record.companions = companion_set_of_path(restricted, paths, segment, LabelPolicy::kRequireConstant);
    const CompanionSet &cs = record.companions;

    if (segment.start_gate) {
        auto entries = path_entries_of(paths, *segment.start_gate);
        std::set<Qubit> expected{segment.q0};
        if (segment.q1) {
            expected.insert(*segment.q1);
        }
        if (entries != expected) {
            throw DomainError(describe(segment) + ": the start gate must join exactly two paths on its path qubits");
        }
    }
    record.phantom_q1 = !segment.q1.has_value();

    // Local register: [q0, q1 or phantom, Q_pi...].
    std::map<Qubit, std::size_t> position;
    position[segment.q0] = 0;
    if (segment.q1) {
        position[*segment.q1] = 1;
    }
    for (std::size_t k = 0; k < cs.qubits.size(); k++) {
        position[cs.qubits[k]] = k + 2;
    }
    const std::size_t width = cs.qubits.size() + 2;
    auto exit_it = position.find(segment.exit);
    if (exit_it == position.end()) {
        throw std::logic_error("segment exit qubit is outside its register");
    }
    const std::size_t exit_pos = exit_it->second;

    std::vector<Gate> local_gates;
    for (std::size_t g : cs.segment_gates) {
        Gate gate = restricted.gates[g];
        for (auto &t : gate.targets) {
            t = static_cast<Qubit>(position.at(t));
        }
        local_gates.push_back(std::move(gate));
    }

    std::uint64_t constants = 0;
    for (std::size_t k = 0; k < cs.qubits.size(); k++) {
        if (restricted.labels[cs.qubits[k]].constant_value()) {
            constants |= std::uint64_t{1} << (width - 1 - (k + 2));
        }
    }

    // Positions of the A-register, most significant first.
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < width; p++) {
        if (p != exit_pos && p != 1) {
            rest.push_back(p);
        }
    }
    const std::size_t v = rest.size();
    record.vectors.assign(16, ComplexVector(std::size_t{1} << v, Complex{0, 0}));

    for (unsigned a0 = 0; a0 < 2; a0++) {
        for (unsigned a1 = 0; a1 < 2; a1++) {
            std::uint64_t index =
                constants | (std::uint64_t{a0} << (width - 1)) | (std::uint64_t{a1} << (width - 2));
            StateVector state(width, index);
            for (const Gate &gate : local_gates) {
                apply_gate_in_place(state, gate);
            }
            auto amps = state.amplitudes();
            for (std::size_t i = 0; i < amps.size(); i++) {
                unsigned c0 = (i >> (width - 1 - exit_pos)) & 1;
                unsigned c1 = (i >> (width - 2)) & 1;
                std::size_t a = 0;
                for (std::size_t p : rest) {
                    a = (a << 1) | ((i >> (width - 1 - p)) & 1);
                }
                record.vectors[a0 * 8 + a1 * 4 + c0 * 2 + c1][a] = amps[i];
            }
        }
    }

    record.basis = orthonormalize(record.vectors, kRankTolerance);
    if (record.basis.dim < 1 || record.basis.dim > 16) {
        throw NumericalError(describe(segment) + ": span dimension " + std::to_string(record.basis.dim) + " outside 1..16");
    }

    record.lambda.assign(256, Complex{0, 0});
    for (std::size_t k = 0; k < 16; k++) {
        ComplexVector rebuilt(record.vectors[k].size(), Complex{0, 0});
        for (std::size_t j = 0; j < record.basis.dim; j++) {
            Complex l = inner_product(record.basis.basis[j], record.vectors[k]);
            record.lambda[k * 16 + j] = l;
            for (std::size_t e = 0; e < rebuilt.size(); e++) {
                rebuilt[e] += l * record.basis.basis[j][e];
            }
        }
        record.reconstruction_residual =
            std::max(record.reconstruction_residual, max_abs_diff(rebuilt, record.vectors[k]));
    }
    for (unsigned input = 0; input < 4; input++) {
        double total = 0;
        for (std::size_t k = input * 4; k < input * 4 + 4; k++) {
            for (std::size_t j = 0; j < 16; j++) {
                total += std::norm(record.lambda[k * 16 + j]);
            }
        }
        record.norm_defect = std::max(record.norm_defect, std::abs(total - 1));
    }
    if (record.reconstruction_residual > kRecordTolerance || record.norm_defect > kRecordTolerance) {
        throw NumericalError(
            describe(segment) + ": record check failed (residual " + std::to_string(record.reconstruction_residual) +
            ", norm defect " + std::to_string(record.norm_defect) + ")");
    }
    return record;
}

Gate build_composite_gate(
    const SqueezeRecord &record, const std::array<Qubit, 6> &targets, std::size_t step, CompletionOrder order) {
    if (record.lambda.size() != 256) {
        throw DomainError("record has no coefficients");
    }
    ComplexMatrix partial(64, 4);
    for (unsigned input = 0; input < 4; input++) {
        for (unsigned c = 0; c < 4; c++) {
            for (std::size_t j = 0; j < 16; j++) {
                partial(c * 16 + j, input) = record.lambda[(input * 4 + c) * 16 + j];
            }
        }
    }
    const std::array<std::size_t, 4> fixed{0, 16, 32, 48};
    for (unsigned input = 0; input < 4; input++) {
        double n = norm(partial.column(input));
        if (std::abs(n - 1) > kIsometryTolerance) {
            throw NumericalError(
                "composite gate column " + std::to_string(input) + " has norm " + std::to_string(n) + ", expected 1");
        }
    }
    ComplexMatrix u;
    try {
        u = complete_unitary(partial, fixed, order, kIsometryTolerance);
    } catch (const NumericalError &e) {
        throw NumericalError(std::string("composite gate: ") + e.what());
    }
    double defect = unitarity_defect(u);
    if (defect > kUnitarityTolerance) {
        throw NumericalError("composite gate is not unitary (defect " + std::to_string(defect) + ")");
    }
    return Gate{step, std::vector<Qubit>(targets.begin(), targets.end()), std::move(u)};
}

SqueezedCircuit squeeze_all(const Circuit &restricted, const Block &block, CompletionOrder order) {
    if (!is_formula(restricted)) {
        throw StructuralError("squeezing needs a formula");
    }
    PathSet paths = path_sets(restricted, block);
    ComputationGraph graph = computation_graph(restricted);

    SqueezedCircuit out;
    out.block_wires = paths.wire_count;
    for (std::size_t g = 0; g < restricted.gates.size(); g++) {
        if (!graph.contains_gate(g)) {
            out.dropped_gates.push_back(g);
        }
    }

    Circuit &bar = out.circuit;
    bar.num_variables = restricted.num_variables;
    bar.arity_bound = restricted.arity_bound;
    auto new_qubit = [&](InputLabel label) {
        bar.labels.push_back(label);
        return static_cast<Qubit>(bar.num_qubits++);
    };

    if (paths.paths.empty()) {
        // Constant on the block: one rotation reproduces the acceptance probability.
        Assignment zeros(restricted.num_variables, 0);
        double p = run(restricted, zeros).outcome.p1;
        p = std::clamp(p, 0.0, 1.0);
        double c = std::sqrt(1 - p);
        double s = std::sqrt(p);
        Qubit q = new_qubit(InputLabel::constant(false));
        bar.gates.push_back(Gate{1, {q}, ComplexMatrix{{c, -s}, {s, c}}});
        bar.output_qubit = q;
        return out;
    }

    std::map<std::pair<std::size_t, Qubit>, Qubit> pending;
    for (const Segment &segment : path_segments(restricted, paths)) {
        SegmentImage image;
        image.segment = segment;
        Qubit a;
        std::optional<Qubit> b;
        if (!segment.start_gate) {
            a = new_qubit(restricted.labels[segment.q0]);
        } else {
            auto take = [&](Qubit q) {
                auto it = pending.find({*segment.start_gate, q});
                if (it == pending.end()) {
                    throw std::logic_error("segment processed before the segments feeding it");
                }
                return it->second;
            };
            a = take(segment.q0);
            b = take(*segment.q1);
        }

        bool composite = !segment.interior.empty();
        if (!composite && segment.start_gate && restricted.gates[*segment.start_gate].arity() != 2) {
            throw DomainError(describe(segment) + ": a joining gate with extra qubits needs an interior gate after it");
        }
        try {
            if (composite) {
                SqueezeRecord record = squeeze_path(restricted, paths, segment);
                if (!b) {
                    b = new_qubit(InputLabel::constant(false));
                }
                std::array<Qubit, 6> targets{a, *b, 0, 0, 0, 0};
                for (std::size_t k = 2; k < 6; k++) {
                    targets[k] = new_qubit(InputLabel::constant(false));
                }
                out.borderline_rank = out.borderline_rank || record.basis.borderline;
                image.gate = bar.gates.size();
                image.record = out.records.size();
                bar.gates.push_back(build_composite_gate(record, targets, bar.gates.size() + 1, order));
                out.records.push_back(std::move(record));
                out.has_composite_gates = true;
            } else if (segment.start_gate) {
                Gate gate = restricted.gates[*segment.start_gate];
                for (auto &t : gate.targets) {
                    t = t == segment.q0 ? a : *b;
                }
                gate.step = bar.gates.size() + 1;
                image.gate = bar.gates.size();
                bar.gates.push_back(std::move(gate));
            }
        } catch (const Error &e) {
            throw StructuralError(describe(segment) + ": " + e.what());
        }

        image.output_slot = a;
        if (segment.end_gate) {
            pending[{*segment.end_gate, segment.exit}] = a;
        } else {
            bar.output_qubit = a;
        }
        out.segments.push_back(std::move(image));
    }
    if (out.has_composite_gates) {
        bar.arity_bound = std::max<std::size_t>(bar.arity_bound, 6);
    }
    return out;
}

SqueezeVerification verify_squeeze(
    const Circuit &restricted, const Circuit &squeezed, const Block &block, const SimulatorConfig &config) {
    if (restricted.num_variables != squeezed.num_variables) {
        throw DomainError("circuits disagree on the number of variables");
    }
    if (block.size() > kMaxTruthTableVariables) {
        throw DomainError("block too large to enumerate");
    }
    for (VariableIndex j : block) {
        if (j == 0 || j > restricted.num_variables) {
            throw DomainError("block variable x" + std::to_string(j) + " out of range");
        }
    }
    SqueezeVerification out;
    const std::size_t k = block.size();
    for (std::uint64_t beta = 0; beta < (std::uint64_t{1} << k); beta++) {
        Assignment alpha(restricted.num_variables, 0);
        for (std::size_t i = 0; i < k; i++) {
            alpha[block[i] - 1] = static_cast<std::uint8_t>((beta >> (k - 1 - i)) & 1);
        }
        double p = run(restricted, alpha, config).outcome.p1;
        double q = run(squeezed, alpha, config).outcome.p1;
        double dev = std::abs(p - q);
        if (dev > out.max_deviation) {
            out.max_deviation = dev;
            out.worst_block_alpha = beta;
        }
        bool expected = p > 0.5;
        if (classify(p, expected) != classify(q, expected)) {
            out.verdicts_agree = false;
        }
        out.assignments_checked++;
    }
    return out;
}

}  // namespace qformula

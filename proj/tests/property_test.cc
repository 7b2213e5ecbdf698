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

// Invariants checked across the generated formula corpus and random circuits.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qformula/circuit_io.h"
#include "qformula/formula.h"
#include "qformula/lemma_checks.h"
#include "qformula/random_circuits.h"
#include "qformula/rewrite.h"
#include "qformula/simulator.h"
#include "test_support.h"

using namespace qformula;
using namespace qformula::testing;

namespace {

const std::vector<FormulaCase> &corpus() {
    static const std::vector<FormulaCase> cases = formula_corpus(2026, 60);
    return cases;
}

}  // namespace

TEST(Corpus, DeterministicForASeed) {
    auto a = formula_corpus(5, 5);
    auto b = formula_corpus(5, 5);
    for (std::size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].formula, b[i].formula);
    }
}

TEST(Corpus, EveryCaseIsAValidFormula) {
    for (const auto &fc : corpus()) {
        EXPECT_TRUE(validate(fc.formula).ok()) << validate(fc.formula).str();
        EXPECT_LE(fc.formula.num_qubits, 12u);
        EXPECT_TRUE(is_tree(computation_graph(fc.formula)));
        EXPECT_TRUE(has_unique_paths(fc.formula));
    }
}

TEST(Corpus, RoundTripsThroughFiles) {
    for (const auto &fc : corpus()) {
        EXPECT_EQ(parse_circuit(format_circuit(fc.formula)), fc.formula);
    }
}

TEST(Corpus, IntersectionGatesBoundedByWireCount) {
    for (const auto &fc : corpus()) {
        PathSet p = path_sets(fc.formula, fc.block);
        EXPECT_LE(intersection_gates(p).size(), p.wire_count);
    }
}

TEST(Corpus, PathsCoincideAfterTheyMeet) {
    for (const auto &fc : corpus()) {
        PathSet p = path_sets(fc.formula, fc.block);
        for (std::size_t a = 0; a < p.paths.size(); a++) {
            for (std::size_t b = a + 1; b < p.paths.size(); b++) {
                const auto &ha = p.paths[a].hops;
                const auto &hb = p.paths[b].hops;
                // Find the first shared gate; from there on both paths are the same hop sequence.
                std::size_t ia = 0;
                std::size_t ib = 0;
                bool met = false;
                for (ia = 0; ia < ha.size() && !met; ia++) {
                    for (ib = 0; ib < hb.size(); ib++) {
                        if (ha[ia].gate == hb[ib].gate) {
                            met = true;
                            break;
                        }
                    }
                }
                ASSERT_TRUE(met) << "two connected paths of a formula must meet";
                ia--;
                // Distinct entries at the meeting gate: the paths shared no edge before it.
                EXPECT_NE(ha[ia].in, hb[ib].in);
                EXPECT_EQ(ha.size() - ia, hb.size() - ib);
                for (std::size_t k = 1; ia + k < ha.size(); k++) {
                    EXPECT_EQ(ha[ia + k], hb[ib + k]);
                }
            }
        }
    }
}

TEST(Corpus, CompanionClassesOnlyGrow) {
    for (const auto &fc : corpus()) {
        auto history = companion_history(fc.formula);
        for (std::size_t step = 1; step < history.size(); step++) {
            for (Qubit a = 0; a < fc.formula.num_qubits; a++) {
                for (Qubit b = a + 1; b < fc.formula.num_qubits; b++) {
                    if (history[step - 1].same(a, b)) {
                        EXPECT_TRUE(history[step].same(a, b));
                    }
                }
            }
        }
    }
}

TEST(Corpus, SqueezePreservesProbabilities) {
    for (const auto &fc : corpus()) {
        for (const Restriction *rho : {&fc.rho, &fc.tau}) {
            Circuit restricted = restrict_circuit(fc.formula, *rho);
            SqueezedCircuit s = squeeze_all(restricted, fc.block);
            SqueezeVerification v = verify_squeeze(restricted, s.circuit, fc.block);
            EXPECT_LE(v.max_deviation, kProbabilityTolerance);
            EXPECT_TRUE(v.verdicts_agree);
            EXPECT_LE(s.circuit.gates.size(), 4 * s.block_wires + 1);
            for (const auto &r : s.records) {
                EXPECT_GE(r.d(), 1u);
                EXPECT_LE(r.d(), 16u);
                EXPECT_LE(r.norm_defect, kUnitarityTolerance);
                EXPECT_LE(r.reconstruction_residual, kUnitarityTolerance);
            }
        }
    }
}

TEST(RandomCircuits, NormConservedAfterEveryGate) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; trial++) {
        Circuit c = random_circuit(rng, 5, 10, 3, 2);
        StateVector s(5, std::uniform_int_distribution<std::uint64_t>(0, 31)(rng));
        for (const auto &g : c.gates) {
            apply_gate_in_place(s, g);
            EXPECT_NEAR(s.norm(), 1.0, 1e-10);
        }
    }
}

TEST(RandomCircuits, GatesAreUnitary) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 100; trial++) {
        Circuit c = random_circuit(rng, 4, 5, 3, 2);
        EXPECT_TRUE(validate(c).ok()) << validate(c).str();
        for (const auto &g : c.gates) {
            EXPECT_LE(unitarity_defect(g.matrix), kUnitarityTolerance);
        }
    }
}

TEST(Lemmas, SmallBudgetSmoke) {
    for (const auto &r : verify_lemmas(3, 50)) {
        EXPECT_TRUE(r.passed()) << r.name << " " << r.max_error;
    }
}

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

#include <gtest/gtest.h>

#include <random>

#include "qformula/errors.h"
#include "qformula/lemma_checks.h"
#include "qformula/random_circuits.h"
#include "qformula/rewrite.h"
#include "qformula/simulator.h"
#include "test_support.h"

using namespace qformula;
using namespace qformula::testing;

namespace {

InputLabel zero() {
    return InputLabel::constant(false);
}

StateVector run_list(const std::vector<Gate> &gates, StateVector s) {
    for (const auto &g : gates) {
        apply_gate_in_place(s, g);
    }
    return s;
}

std::vector<Gate> concat(std::vector<Gate> a, const std::vector<Gate> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Truth table of a restricted circuit, read only over the block variables (others at 0).
TruthTable table_over(const Circuit &c) {
    return TruthTable::from_function(c.num_variables, [&](std::uint64_t a) {
        return run(c, assignment_from_index(a, c.num_variables)).outcome.p1 > 0.5;
    });
}

}  // namespace

TEST(Restrict, AndWithSecondInputOneGivesFirst) {
    Restriction rho{make_block({1}), {{2, true}}};
    Circuit r = restrict_circuit(and_circuit(), rho);
    EXPECT_EQ(r.labels[1], InputLabel::constant(true));
    EXPECT_EQ(r.gates, and_circuit().gates);
    for (std::uint64_t x1 = 0; x1 < 2; x1++) {
        // Only x1 matters now; x2's bit is ignored.
        for (std::uint64_t x2 = 0; x2 < 2; x2++) {
            EXPECT_EQ(run(r, {static_cast<std::uint8_t>(x1), static_cast<std::uint8_t>(x2)}).outcome.p1, double(x1));
        }
    }
}

TEST(Restrict, AndWithSecondInputZeroGivesConstant) {
    Restriction rho{make_block({1}), {{2, false}}};
    Circuit r = restrict_circuit(and_circuit(), rho);
    EXPECT_EQ(table_over(r), TruthTable::constant(2, false));
}

TEST(Restrict, EmptyBlockGivesConstantCircuit) {
    Restriction rho{make_block({}), {{1, true}, {2, true}}};
    Circuit r = restrict_circuit(and_circuit(), rho);
    for (const auto &label : r.labels) {
        EXPECT_TRUE(label.is_constant());
    }
    EXPECT_EQ(table_over(r), TruthTable::constant(2, true));
}

TEST(Restrict, RejectsPartialOrOverlappingRho) {
    EXPECT_THROW(restrict_circuit(and_circuit(), Restriction{make_block({1}), {}}), DomainError);
    EXPECT_THROW(restrict_circuit(and_circuit(), Restriction{make_block({1}), {{1, true}, {2, true}}}), DomainError);
    EXPECT_THROW(restrict_circuit(and_circuit(), Restriction{make_block({1}), {{2, true}, {7, true}}}), DomainError);
}

TEST(Decompose, AlternatingPairs) {
    std::mt19937_64 rng(12);
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < 6; i++) {
        std::vector<Qubit> t = i % 2 == 0 ? std::vector<Qubit>{0, 1} : std::vector<Qubit>{2, 3};
        gates.push_back(make_gate(t, random_unitary(rng, 4), i + 1));
    }
    std::vector<Qubit> q1{0, 1};
    std::vector<Qubit> q2{2, 3};
    Decomposition d = decompose_disjoint(gates, q1, q2);
    ASSERT_EQ(d.first.size(), 3u);
    ASSERT_EQ(d.second.size(), 3u);
    EXPECT_EQ(d.first[0], gates[0]);
    EXPECT_EQ(d.first[2], gates[4]);
    StateVector input(4, random_state(rng, 4));
    StateVector a = run_list(gates, input);
    StateVector b = run_list(concat(d.first, d.second), input);
    StateVector c = run_list(concat(d.second, d.first), input);
    EXPECT_LE(max_abs_diff(a.amplitudes(), b.amplitudes()), 1e-10);
    EXPECT_LE(max_abs_diff(a.amplitudes(), c.amplitudes()), 1e-10);
}

TEST(Decompose, EmptySecondHalf) {
    std::vector<Gate> gates{make_gate({0}, gate_h(), 1), make_gate({0, 1}, gate_cnot(), 2)};
    std::vector<Qubit> q1{0, 1};
    std::vector<Qubit> q2{2};
    Decomposition d = decompose_disjoint(gates, q1, q2);
    EXPECT_EQ(d.first, gates);
    EXPECT_TRUE(d.second.empty());
}

TEST(Decompose, StraddlingGateRejected) {
    std::vector<Gate> gates{make_gate({1, 2}, gate_cnot(), 1)};
    std::vector<Qubit> q1{0, 1};
    std::vector<Qubit> q2{2, 3};
    EXPECT_THROW(decompose_disjoint(gates, q1, q2), DomainError);
    std::vector<Qubit> overlap{1, 2};
    EXPECT_THROW(decompose_disjoint({}, q1, overlap), DomainError);
}

TEST(Decompose, RandomEntangledInputsViaLemmaCheck) {
    LemmaResult r = check_disjoint_reordering(77, 200);
    EXPECT_TRUE(r.passed()) << r.max_error;
}

TEST(Postpone, PartnerDetourMovesLast) {
    // q = 0 meets r1 = 1, r2 = 2, r3 = 3 in turn; h2 acts on r1 between g1 and g2.
    std::mt19937_64 rng(14);
    std::vector<Gate> gates{
        make_gate({0, 1}, random_unitary(rng, 4)),
        make_gate({1, 4}, random_unitary(rng, 4)),
        make_gate({0, 2}, random_unitary(rng, 4)),
        make_gate({0, 3}, random_unitary(rng, 4)),
    };
    Circuit c = make_circuit(std::vector<InputLabel>(5, zero()), gates, 0);
    std::vector<Qubit> r{1, 2, 3};
    Circuit moved = postpone(c, 0, r);
    ASSERT_EQ(moved.gates.size(), 4u);
    EXPECT_EQ(moved.gates[0].targets, gates[0].targets);
    EXPECT_EQ(moved.gates[1].targets, gates[2].targets);
    EXPECT_EQ(moved.gates[2].targets, gates[3].targets);
    EXPECT_EQ(moved.gates[3].targets, gates[1].targets);
    EXPECT_EQ(moved.gates[3].step, 4u);
    ComplexMatrix before = circuit_operator(c.gates, 5);
    ComplexMatrix after = circuit_operator(moved.gates, 5);
    EXPECT_LE(max_abs_diff(before.entries(), after.entries()), 1e-10);
}

TEST(Postpone, SingleGateUnchanged) {
    Circuit c = make_circuit(
        {zero(), zero(), zero()},
        {make_gate({1}, gate_h()), make_gate({0, 1}, gate_cnot()), make_gate({1, 2}, gate_cnot())},
        0);
    std::vector<Qubit> r{1};
    EXPECT_EQ(postpone(c, 0, r), c);
}

TEST(Postpone, ChainOfThreeWithEntangledPartners) {
    std::mt19937_64 rng(15);
    // Partners start entangled with each other and with a bystander.
    std::vector<Gate> gates{
        make_gate({1, 2}, random_unitary(rng, 4)),
        make_gate({3, 4}, random_unitary(rng, 4)),
        make_gate({0, 1}, random_unitary(rng, 4)),
        make_gate({1, 5}, random_unitary(rng, 4)),
        make_gate({0, 2}, random_unitary(rng, 4)),
        make_gate({2}, random_unitary(rng, 2)),
        make_gate({0, 3}, random_unitary(rng, 4)),
    };
    Circuit c = make_circuit(std::vector<InputLabel>(6, zero()), gates, 0);
    std::vector<Qubit> r{1, 2, 3};
    Circuit moved = postpone(c, 0, r);
    for (std::uint64_t b = 0; b < 64; b++) {
        StateVector x = run_on_state(c, StateVector(6, b));
        StateVector y = run_on_state(moved, StateVector(6, b));
        EXPECT_LE(max_abs_diff(x.amplitudes(), y.amplitudes()), 1e-10);
    }
    EXPECT_EQ(moved.gates.back().targets, (std::vector<Qubit>{2}));
}

TEST(Postpone, HypothesisViolationNamesGate) {
    // r1's later gate touches r2 before g2, so g2 meets a postponed qubit.
    Circuit c = make_circuit(
        std::vector<InputLabel>(4, zero()),
        {make_gate({0, 1}, gate_cnot()), make_gate({1, 2}, gate_cnot()), make_gate({0, 2}, gate_cnot())},
        0);
    std::vector<Qubit> r{1, 2};
    try {
        postpone(c, 0, r);
        FAIL() << "expected a structural error";
    } catch (const StructuralError &e) {
        EXPECT_NE(std::string(e.what()).find("step 3"), std::string::npos) << e.what();
    }
    std::vector<Qubit> wrong{3, 2};
    EXPECT_THROW(postpone(c, 0, wrong), StructuralError);
}

TEST(Postpone, RandomInstancesViaLemmaCheck) {
    LemmaResult r = check_postponement(78, 200);
    EXPECT_TRUE(r.passed()) << r.max_error << " rejected " << r.rejected;
}

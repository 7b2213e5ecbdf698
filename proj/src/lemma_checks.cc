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

#include "qformula/lemma_checks.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "qformula/errors.h"
#include "qformula/random_circuits.h"
#include "qformula/rewrite.h"
#include "qformula/simulator.h"

namespace qformula {

namespace {

std::size_t pick(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ComplexVector scaled_state(std::mt19937_64 &rng, std::size_t qubits) {
    ComplexVector v = random_state(rng, qubits);
    double s = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    for (auto &a : v) {
        a *= s;
    }
    return v;
}

StateVector run_gates(const std::vector<Gate> &gates, StateVector state) {
    for (const Gate &g : gates) {
        apply_gate_in_place(state, g);
    }
    return state;
}

constexpr std::size_t kReorderQubits = 6;

}  // namespace

LemmaResult check_tensor_factorization(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    LemmaResult out{"tensor norm and inner-product factorization", cases, 0, kAlgebraicTolerance};
    for (std::size_t c = 0; c < cases; c++) {
        std::size_t k = pick(rng, 1, 4);
        std::size_t m = pick(rng, 1, 4);
        ComplexVector a1 = scaled_state(rng, k);
        ComplexVector a2 = scaled_state(rng, k);
        ComplexVector b1 = scaled_state(rng, m);
        ComplexVector b2 = scaled_state(rng, m);
        ComplexVector x1 = kron(a1, b1);
        ComplexVector x2 = kron(a2, b2);
        double norm_error = std::abs(norm(x1) - norm(a1) * norm(b1));
        double inner_error = std::abs(inner_product(x1, x2) - inner_product(a1, a2) * inner_product(b1, b2));
        out.max_error = std::max({out.max_error, norm_error, inner_error});
    }
    return out;
}

LemmaResult check_tensor_orthonormality(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    LemmaResult out{"orthonormality of tensor families", cases, 0, kAlgebraicTolerance};
    for (std::size_t c = 0; c < cases; c++) {
        std::size_t k = pick(rng, 1, 3);
        std::size_t m = pick(rng, 1, 3);
        ComplexMatrix ua = random_unitary(rng, std::size_t{1} << k);
        ComplexMatrix ub = random_unitary(rng, std::size_t{1} << m);
        std::size_t na = pick(rng, 1, ua.cols());
        std::size_t nb = pick(rng, 1, ub.cols());
        std::vector<ComplexVector> family;
        for (std::size_t j = 0; j < na; j++) {
            for (std::size_t l = 0; l < nb; l++) {
                family.push_back(kron(ua.column(j), ub.column(l)));
            }
        }
        for (std::size_t i = 0; i < family.size(); i++) {
            for (std::size_t j = 0; j < family.size(); j++) {
                Complex expected = i == j ? 1.0 : 0.0;
                out.max_error = std::max(out.max_error, std::abs(inner_product(family[i], family[j]) - expected));
            }
        }
    }
    return out;
}

LemmaResult check_disjoint_reordering(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    LemmaResult out{"disjoint subcircuits commute", cases, 0, kUnitarityTolerance};
    std::vector<Qubit> all(kReorderQubits);
    std::iota(all.begin(), all.end(), Qubit{0});
    for (std::size_t c = 0; c < cases; c++) {
        std::shuffle(all.begin(), all.end(), rng);
        std::size_t split = pick(rng, 1, kReorderQubits - 1);
        std::vector<Qubit> q1(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<Qubit> q2(all.begin() + static_cast<std::ptrdiff_t>(split), all.end());

        std::vector<Gate> gates;
        std::size_t count = pick(rng, 1, 10);
        for (std::size_t g = 0; g < count; g++) {
            auto &side = std::bernoulli_distribution(0.5)(rng) ? q1 : q2;
            std::vector<Qubit> pool = side;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::size_t arity = pick(rng, 1, std::min<std::size_t>(2, pool.size()));
            pool.resize(arity);
            gates.push_back(random_gate(rng, pool, g + 1));
        }
        Decomposition parts = decompose_disjoint(gates, q1, q2);
        std::vector<Gate> first_then_second = parts.first;
        first_then_second.insert(first_then_second.end(), parts.second.begin(), parts.second.end());
        std::vector<Gate> second_then_first = parts.second;
        second_then_first.insert(second_then_first.end(), parts.first.begin(), parts.first.end());

        std::vector<StateVector> inputs;
        inputs.emplace_back(kReorderQubits, pick(rng, 0, (std::size_t{1} << kReorderQubits) - 1));
        inputs.emplace_back(kReorderQubits, random_state(rng, kReorderQubits));
        for (const auto &input : inputs) {
            StateVector a = run_gates(gates, input);
            StateVector b = run_gates(first_then_second, input);
            StateVector d = run_gates(second_then_first, input);
            out.max_error = std::max(
                {out.max_error, max_abs_diff(a.amplitudes(), b.amplitudes()), max_abs_diff(a.amplitudes(), d.amplitudes())});
        }
    }
    return out;
}

LemmaResult check_postponement(std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    LemmaResult out{"postponing gates preserves the operator", cases, 0, kUnitarityTolerance};
    const Qubit q = 0;
    for (std::size_t c = 0; c < cases; c++) {
        std::size_t t = pick(rng, 1, 3);
        std::vector<Qubit> r_list(t);
        std::iota(r_list.begin(), r_list.end(), Qubit{1});

        Circuit circuit;
        circuit.num_qubits = kReorderQubits;
        circuit.labels.assign(kReorderQubits, InputLabel::constant(false));
        circuit.arity_bound = 2;
        auto add_random = [&](const std::vector<Qubit> &allowed) {
            std::vector<Qubit> pool = allowed;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::size_t arity = pick(rng, 1, std::min<std::size_t>(2, pool.size()));
            pool.resize(arity);
            circuit.gates.push_back(random_gate(rng, pool, circuit.gates.size() + 1));
        };
        std::vector<Qubit> not_q;
        for (Qubit x = 1; x < kReorderQubits; x++) {
            not_q.push_back(x);
        }
        for (std::size_t k = pick(rng, 0, 2); k > 0; k--) {
            add_random(not_q);
        }
        for (std::size_t j = 0; j < t; j++) {
            circuit.gates.push_back(random_gate(rng, {q, r_list[j]}, circuit.gates.size() + 1));
            if (j + 1 == t) {
                break;
            }
            // Partners of later gates stay untouched until their gate.
            std::vector<Qubit> allowed;
            for (Qubit x : not_q) {
                if (std::find(r_list.begin() + static_cast<std::ptrdiff_t>(j) + 1, r_list.end(), x) == r_list.end()) {
                    allowed.push_back(x);
                }
            }
            for (std::size_t k = pick(rng, 0, 4); k > 0; k--) {
                add_random(allowed);
            }
        }
        for (std::size_t k = pick(rng, 0, 2); k > 0; k--) {
            add_random(not_q);
        }

        Circuit moved;
        try {
            moved = postpone(circuit, q, r_list);
        } catch (const StructuralError &) {
            out.rejected++;
            continue;
        }
        // After g_j its partner must stay idle until g_t.
        std::vector<std::size_t> on_q;
        for (std::size_t g = 0; g < moved.gates.size(); g++) {
            if (moved.gates[g].acts_on(q)) {
                on_q.push_back(g);
            }
        }
        for (std::size_t j = 0; j < t; j++) {
            for (std::size_t g = on_q[j] + 1; g < on_q.back(); g++) {
                if (!moved.gates[g].acts_on(q) && moved.gates[g].acts_on(r_list[j])) {
                    out.max_error = std::numeric_limits<double>::infinity();
                }
            }
        }
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << kReorderQubits); b++) {
            StateVector x = run_on_state(circuit, StateVector(kReorderQubits, b));
            StateVector y = run_on_state(moved, StateVector(kReorderQubits, b));
            out.max_error = std::max(out.max_error, max_abs_diff(x.amplitudes(), y.amplitudes()));
        }
    }
    return out;
}

std::vector<LemmaResult> verify_lemmas(std::uint64_t seed, std::size_t cases) {
    std::seed_seq seq{seed};
    std::vector<std::uint64_t> seeds(4);
    seq.generate(seeds.begin(), seeds.end());
    return {
        check_tensor_factorization(seeds[0], cases),
        check_tensor_orthonormality(seeds[1], cases),
        check_disjoint_reordering(seeds[2], cases),
        check_postponement(seeds[3], cases),
    };
}

}  // namespace qformula

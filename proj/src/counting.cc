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

#include "qformula/counting.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qformula/errors.h"
#include "qformula/nechiporuk.h"
#include "qformula/simulator.h"

namespace qformula {

long double warren_bound(std::size_t m, std::size_t t, std::size_t deg) {
    if (m == 0 || t == 0 || deg == 0) {
        throw DomainError("warren bound needs m, t, deg >= 1");
    }
    long double base = 4.0L * std::numbers::e_v<long double> * static_cast<long double>(deg) *
                       static_cast<long double>(m) / static_cast<long double>(t);
    return std::pow(base, static_cast<long double>(t));
}

double warren_bound_log2(std::size_t m, std::size_t t, std::size_t deg) {
    if (m == 0 || t == 0 || deg == 0) {
        throw DomainError("warren bound needs m, t, deg >= 1");
    }
    double base = 4.0 * std::numbers::e * static_cast<double>(deg) * static_cast<double>(m) / static_cast<double>(t);
    return static_cast<double>(t) * std::log2(base);
}

std::size_t CountingParams::mu() const {
    if (2 * d >= 64) {
        throw DomainError("gate arity too large");
    }
    return (std::size_t{1} << (2 * d)) * N;
}

void validate_params(const CountingParams &params) {
    if (params.d == 0 || params.d > 16) {
        throw DomainError("gate arity must be in 1..16");
    }
    if (params.n == 0 || params.n > params.N) {
        throw DomainError("counting bounds assume 1 <= n <= N");
    }
    if (params.wires() > params.d * params.N) {
        throw DomainError("input wire count exceeds d*N");
    }
}

long double EquivClassBound::binomial_form() const {
    return std::exp2(static_cast<long double>(log2_binomial_form));
}

long double EquivClassBound::crude_form() const {
    return std::exp2(static_cast<long double>(log2_crude_form));
}

EquivClassBound equiv_class_bound(const CountingParams &params) {
    validate_params(params);
    EquivClassBound out;
    double choose = static_cast<double>(binomial(params.wires(), params.d));
    out.log2_binomial_form = static_cast<double>(params.N) * std::log2(choose);
    double dn = static_cast<double>(params.d * params.N);
    out.log2_crude_form = dn * std::log2(dn);
    return out;
}

long double AppendixBound::sign_factor() const {
    return std::exp2(static_cast<long double>(log2_sign_factor));
}

AppendixBound appendix_bound(const CountingParams &params) {
    validate_params(params);
    AppendixBound out;
    out.mu = params.mu();
    double two_mu = 2.0 * static_cast<double>(out.mu);
    double log2_base = std::log2(4.0 * std::numbers::e) + 2.0 * std::log2(static_cast<double>(params.N)) +
                       static_cast<double>(params.n + 1) - std::log2(two_mu);
    out.log2_sign_factor = two_mu * log2_base;
    out.log2_total = out.log2_sign_factor + equiv_class_bound(params).log2_binomial_form;
    return out;
}

double Polynomial::evaluate(const std::vector<double> &x) const {
    double total = 0;
    for (const auto &term : terms) {
        double value = term.coefficient;
        for (std::size_t i = 0; i < term.exponents.size(); i++) {
            for (unsigned e = 0; e < term.exponents[i]; e++) {
                value *= x[i];
            }
        }
        total += value;
    }
    return total;
}

unsigned Polynomial::degree() const {
    unsigned out = 0;
    for (const auto &term : terms) {
        unsigned deg = 0;
        for (unsigned e : term.exponents) {
            deg += e;
        }
        out = std::max(out, deg);
    }
    return out;
}

unsigned PolynomialSystem::degree() const {
    unsigned out = 0;
    for (const auto &p : polynomials) {
        out = std::max(out, p.degree());
    }
    return out;
}

PolynomialSystem random_polynomial_system(std::mt19937_64 &rng, std::size_t m, std::size_t t, unsigned deg) {
    if (m == 0 || t == 0 || deg == 0) {
        throw DomainError("polynomial systems need m, t, deg >= 1");
    }
    std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
    // Every exponent vector with total degree <= deg.
    std::vector<std::vector<unsigned>> monomials;
    std::vector<unsigned> current(t, 0);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
        if (i == t) {
            monomials.push_back(current);
            return;
        }
        for (unsigned e = 0; e <= left; e++) {
            current[i] = e;
            fill(i + 1, left - e);
        }
        current[i] = 0;
    };
    fill(0, deg);

    PolynomialSystem out;
    out.num_variables = t;
    for (std::size_t k = 0; k < m; k++) {
        Polynomial p;
        for (const auto &exponents : monomials) {
            p.terms.push_back({coefficient(rng), exponents});
        }
        out.polynomials.push_back(std::move(p));
    }
    return out;
}

std::size_t count_sign_patterns(const PolynomialSystem &system) {
    const std::size_t t = system.num_variables;
    if (t == 0 || t > 3) {
        throw DomainError("sign-pattern grid counting supports 1..3 variables");
    }
    std::set<std::vector<bool>> patterns;
    std::vector<double> x(t);
    std::size_t total = 1;
    for (std::size_t i = 0; i < t; i++) {
        total *= kSignGridPoints;
    }
    const double spacing = 2 * kSignGridRadius / static_cast<double>(kSignGridPoints - 1);
    for (std::size_t point = 0; point < total; point++) {
        std::size_t rest = point;
        for (std::size_t i = 0; i < t; i++) {
            x[i] = -kSignGridRadius + spacing * static_cast<double>(rest % kSignGridPoints);
            rest /= kSignGridPoints;
        }
        std::vector<bool> signs;
        bool strict = true;
        for (const auto &p : system.polynomials) {
            double value = p.evaluate(x);
            if (std::abs(value) < 1e-12) {
                strict = false;
                break;
            }
            signs.push_back(value > 0);
        }
        if (strict) {
            patterns.insert(std::move(signs));
        }
    }
    return patterns.size();
}

void validate_gate_net(const GateNet &net) {
    if (net.empty()) {
        throw DomainError("gate net is empty");
    }
    for (const auto &entry : net) {
        const auto &u = entry.matrix;
        if (u.rows() != u.cols() || u.rows() < 2 || !is_power_of_two(u.rows())) {
            throw DomainError("gate net entry '" + entry.name + "' is not a 2^k x 2^k matrix");
        }
        if (!is_unitary(u, kUnitarityTolerance)) {
            throw DomainError("gate net entry '" + entry.name + "' is not unitary");
        }
    }
}

EnumerationResult enumerate_functions(
    std::size_t n, std::size_t N, const GateNet &net, std::size_t num_qubits, const EnumerationLimits &limits) {
    if (n == 0 || n > limits.max_variables) {
        throw DomainError("enumeration needs 1 <= n <= " + std::to_string(limits.max_variables));
    }
    if (N > limits.max_gates) {
        throw DomainError("enumeration is capped at " + std::to_string(limits.max_gates) + " gates");
    }
    if (net.size() > limits.max_net) {
        throw DomainError("enumeration is capped at " + std::to_string(limits.max_net) + " net entries");
    }
    if (num_qubits == 0 || num_qubits > limits.max_qubits) {
        throw DomainError("enumeration needs 1 <= qubits <= " + std::to_string(limits.max_qubits));
    }
    if (num_qubits < n) {
        throw DomainError("every variable needs its own wire: qubits must be at least n");
    }
    validate_gate_net(net);

    // Every (net entry, ordered target tuple) choice for one gate.
    std::vector<Gate> choices;
    for (const auto &entry : net) {
        std::size_t k = exact_log2(entry.matrix.rows());
        if (k > num_qubits) {
            continue;
        }
        std::vector<Qubit> targets;
        std::vector<bool> used(num_qubits, false);
        std::function<void()> place = [&]() {
            if (targets.size() == k) {
                choices.push_back(Gate{0, targets, entry.matrix});
                return;
            }
            for (Qubit q = 0; q < num_qubits; q++) {
                if (!used[q]) {
                    used[q] = true;
                    targets.push_back(q);
                    place();
                    targets.pop_back();
                    used[q] = false;
                }
            }
        };
        place();
    }

    // Labelings: code 0 / 1 are constants, 2 + i is x_{i+1}. Only those using every variable.
    std::vector<std::vector<InputLabel>> labelings;
    {
        std::vector<std::size_t> code(num_qubits, 0);
        const std::size_t radix = n + 2;
        std::size_t total = 1;
        for (std::size_t q = 0; q < num_qubits; q++) {
            total *= radix;
        }
        for (std::size_t c = 0; c < total; c++) {
            std::size_t rest = c;
            std::vector<bool> present(n, false);
            std::vector<InputLabel> labels;
            for (std::size_t q = 0; q < num_qubits; q++) {
                std::size_t digit = rest % radix;
                rest /= radix;
                if (digit < 2) {
                    labels.push_back(InputLabel::constant(digit == 1));
                } else {
                    labels.push_back(InputLabel::variable(static_cast<VariableIndex>(digit - 1)));
                    present[digit - 2] = true;
                }
            }
            if (std::all_of(present.begin(), present.end(), [](bool b) { return b; })) {
                labelings.push_back(std::move(labels));
            }
        }
    }

    EnumerationResult out;
    const std::size_t basis = std::size_t{1} << num_qubits;
    const std::size_t inputs = std::size_t{1} << n;
    std::vector<Gate> sequence;
    std::function<void()> visit = [&]() {
        if (sequence.size() < N) {
            for (const Gate &g : choices) {
                sequence.push_back(g);
                sequence.back().step = sequence.size();
                visit();
                sequence.pop_back();
            }
            return;
        }
        // p[b * m + q]: probability of reading 1 on q after the gates act on |b>.
        std::vector<double> p(basis * num_qubits);
        for (std::size_t b = 0; b < basis; b++) {
            StateVector state(num_qubits, b);
            for (const Gate &g : sequence) {
                apply_gate_in_place(state, g);
            }
            for (Qubit q = 0; q < num_qubits; q++) {
                p[b * num_qubits + q] = measure_qubit(state, q).p1;
            }
        }
        for (const auto &labels : labelings) {
            Circuit circuit;
            circuit.num_qubits = num_qubits;
            circuit.num_variables = n;
            circuit.labels = labels;
            circuit.gates = sequence;
            circuit.arity_bound = num_qubits;
            for (Qubit q = 0; q < num_qubits; q++) {
                out.circuits++;
                circuit.output_qubit = q;
                std::vector<std::uint8_t> bits(inputs);
                bool determined = true;
                for (std::uint64_t alpha = 0; alpha < inputs && determined; alpha++) {
                    std::uint64_t b = initial_basis_index(circuit, assignment_from_index(alpha, n));
                    double value = p[b * num_qubits + q];
                    if (value > 2.0 / 3.0) {
                        bits[alpha] = 1;
                    } else if (value >= 1.0 / 3.0) {
                        determined = false;
                    }
                }
                if (!determined) {
                    continue;
                }
                TruthTable table(n, std::move(bits));
                if (out.functions.count(table)) {
                    continue;
                }
                if (evaluate(circuit, table).kind != FunctionVerdict::Kind::kComputes) {
                    throw std::logic_error("enumerated candidate rejected by evaluate()");
                }
                out.functions.insert(std::move(table));
            }
        }
    };
    visit();
    return out;
}

}  // namespace qformula

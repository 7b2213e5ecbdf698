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
#include <random>
#include <set>
#include <vector>

#include "qformula/circuit_io.h"
#include "qformula/truth_table.h"

namespace qformula {

/// (4 e deg m / t)^t, the number of consistent strict sign assignments of m polynomials of
/// degree <= deg in t real variables. Throws DomainError for non-positive arguments.
long double warren_bound(std::size_t m, std::size_t t, std::size_t deg);
double warren_bound_log2(std::size_t m, std::size_t t, std::size_t deg);

struct CountingParams {
    /// Function arity.
    std::size_t n = 0;
    /// Circuit size.
    std::size_t N = 0;
    /// Gate arity.
    std::size_t d = 0;
    /// Input wire count; 0 selects the maximum d*N.
    std::size_t n_prime = 0;

    std::size_t mu() const;
    std::size_t wires() const {
        return n_prime ? n_prime : d * N;
    }
};

/// Throws DomainError unless 1 <= n <= N, d >= 1 and n' <= d*N.
void validate_params(const CountingParams &params);

struct EquivClassBound {
    /// log2 of C(n', d)^N.
    double log2_binomial_form = 0;
    /// log2 of (dN)^(dN).
    double log2_crude_form = 0;
    long double binomial_form() const;
    long double crude_form() const;
};

EquivClassBound equiv_class_bound(const CountingParams &params);

struct AppendixBound {
    std::size_t mu = 0;
    /// log2 of (4 e N^2 2^(n+1) / (2 mu))^(2 mu).
    double log2_sign_factor = 0;
    /// log2 of the sign factor times C(n', d)^N.
    double log2_total = 0;
    long double sign_factor() const;
};

AppendixBound appendix_bound(const CountingParams &params);

/// Polynomial a * prod x_i^{e_i}, summed over terms.
struct Monomial {
    double coefficient = 0;
    std::vector<unsigned> exponents;
};

struct Polynomial {
    std::vector<Monomial> terms;

    double evaluate(const std::vector<double> &x) const;
    unsigned degree() const;
};

struct PolynomialSystem {
    std::size_t num_variables = 0;
    std::vector<Polynomial> polynomials;

    unsigned degree() const;
};

/// Dense random polynomials with coefficients uniform on [-1, 1] and every monomial of degree
/// at most `deg`.
PolynomialSystem random_polynomial_system(std::mt19937_64 &rng, std::size_t m, std::size_t t, unsigned deg);

inline constexpr std::size_t kSignGridPoints = 41;
inline constexpr double kSignGridRadius = 2.0;

/// Distinct strict sign vectors attained on a 41-point lattice per variable on [-2, 2]. Lattice
/// points where some polynomial vanishes (|value| < 1e-12) are skipped, so this undercounts.
std::size_t count_sign_patterns(const PolynomialSystem &system);

/// Finite stand-in for a continuous gate set.
using GateNet = std::vector<NamedMatrix>;

/// Throws DomainError unless every entry is a unitary of dimension 2^k within 1e-10.
void validate_gate_net(const GateNet &net);

struct EnumerationResult {
    std::set<TruthTable> functions;
    std::uint64_t circuits = 0;
    std::size_t count() const {
        return functions.size();
    }
};

struct EnumerationLimits {
    std::size_t max_variables = 3;
    std::size_t max_gates = 3;
    std::size_t max_net = 8;
    std::size_t max_qubits = 6;
};

/// All n-variable tables computed by some circuit with exactly N gates drawn from `net` on
/// `num_qubits` wires. Labelings range over variables and constants and must use every variable;
/// any qubit may be the output. Each candidate is confirmed with evaluate().
EnumerationResult enumerate_functions(
    std::size_t n, std::size_t N, const GateNet &net, std::size_t num_qubits, const EnumerationLimits &limits = {});

}  // namespace qformula

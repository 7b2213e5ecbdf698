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

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qformula/errors.h"
#include "qformula/nechiporuk.h"
#include "qformula/random_circuits.h"
#include "qformula/rewrite.h"
#include "qformula/simulator.h"
#include "test_support.h"

using namespace qformula;

namespace {

/// Reads bit j (1-based, x1 most significant) of an n-bit assignment.
bool bit_of(std::uint64_t alpha, std::size_t n, std::size_t j) {
    return (alpha >> (n - j)) & 1;
}

/// Counts subfunctions by keying each outside assignment's restricted table as a string.
std::size_t brute_sigma(const TruthTable &f, const Block &block) {
    const std::size_t n = f.num_variables();
    std::map<std::uint64_t, std::string> by_outside;
    for (std::uint64_t alpha = 0; alpha < f.size(); alpha++) {
        std::uint64_t outside = 0;
        for (std::size_t j = 1; j <= n; j++) {
            if (std::find(block.begin(), block.end(), j) == block.end()) {
                outside = (outside << 1) | bit_of(alpha, n, j);
            }
        }
        by_outside[outside].push_back(f[alpha] ? '1' : '0');
    }
    std::set<std::string> distinct;
    for (auto &[key, table] : by_outside) {
        distinct.insert(table);
    }
    return distinct.size();
}

TruthTable parity(std::size_t n) {
    return TruthTable::from_function(n, [](std::uint64_t a) { return std::popcount(a) % 2 == 1; });
}

Partition singletons(std::size_t n) {
    Partition p{n, {}};
    for (VariableIndex j = 1; j <= n; j++) {
        p.blocks.push_back({j});
    }
    return p;
}

/// g(alpha) = f(alpha with variable j moved to position perm[j-1]).
TruthTable permute_variables(const TruthTable &f, const std::vector<std::size_t> &perm) {
    const std::size_t n = f.num_variables();
    return TruthTable::from_function(n, [&](std::uint64_t alpha) {
        std::uint64_t beta = 0;
        for (std::size_t j = 1; j <= n; j++) {
            if (bit_of(alpha, n, j)) {
                beta |= std::uint64_t{1} << (n - perm[j - 1]);
            }
        }
        return f[beta];
    });
}

}  // namespace

TEST(Subfunctions, ParityOnSingleton) {
    Partition p{3, {{1}, {2, 3}}};
    SubfunctionTable s = subfunctions(parity(3), p, 0);
    EXPECT_EQ(s.sigma(), 2u);
    std::set<TruthTable> got(s.tables.begin(), s.tables.end());
    std::set<TruthTable> expected{TruthTable(1, {0, 1}), TruthTable(1, {1, 0})};
    EXPECT_EQ(got, expected);
}

TEST(Subfunctions, ConstantHasOne) {
    Partition p{4, {{1, 3}, {2, 4}}};
    TruthTable f = TruthTable::constant(4, false);
    EXPECT_EQ(subfunctions(f, p, 0).sigma(), 1u);
    EXPECT_EQ(subfunctions(f, p, 1).sigma(), 1u);
    EXPECT_EQ(nechiporuk_bound(f, p).total, 0.0);
}

TEST(Subfunctions, MatchesBruteForceOnRandomTables) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; trial++) {
        std::size_t n = 2 + trial % 6;
        std::bernoulli_distribution coin(0.5);
        TruthTable f = TruthTable::from_function(n, [&](std::uint64_t) { return coin(rng); });
        std::vector<VariableIndex> vars(n);
        std::iota(vars.begin(), vars.end(), VariableIndex{1});
        std::shuffle(vars.begin(), vars.end(), rng);
        std::size_t cut = 1 + trial % (n - 1);
        Partition p{n, {make_block({vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(cut)}),
                        make_block({vars.begin() + static_cast<std::ptrdiff_t>(cut), vars.end()})}};
        for (std::size_t j = 0; j < 2; j++) {
            std::size_t sigma = subfunctions(f, p, j).sigma();
            EXPECT_EQ(sigma, brute_sigma(f, p.blocks[j]));
            std::size_t nj = p.blocks[j].size();
            double cap = std::min(std::pow(2.0, std::pow(2.0, double(nj))), std::pow(2.0, double(n - nj)));
            EXPECT_GE(sigma, 1u);
            EXPECT_LE(double(sigma), cap);
        }
    }
}

TEST(Subfunctions, VariableCapEnforced) {
    // ell = 5 needs 2 * 5 * 3 = 30 variables.
    EXPECT_THROW(ed_function(5), DomainError);
}

TEST(NechiporukBound, TermClamp) {
    EXPECT_EQ(nechiporuk_term(1), 0.0);
    EXPECT_EQ(nechiporuk_term(2), 1.0);
    EXPECT_EQ(nechiporuk_term(4), 2.0);
    EXPECT_NEAR(nechiporuk_term(16), 4.0 / 2.0, 1e-15);
    EXPECT_NEAR(nechiporuk_term(121), std::log2(121.0) / std::log2(std::log2(121.0)), 1e-12);
}

TEST(NechiporukBound, ParitySingletons) {
    for (std::size_t n = 2; n <= 6; n++) {
        NechiporukReport r = nechiporuk_bound(parity(n), singletons(n));
        EXPECT_EQ(r.blocks.size(), n);
        EXPECT_DOUBLE_EQ(r.total, double(n));
    }
}

TEST(ElementDistinctness, TwoStrings) {
    TruthTable f = ed_function(2);
    EXPECT_EQ(f.num_variables(), 4u);
    // z1 is the first two bits.
    EXPECT_FALSE(f[0b0000]);
    EXPECT_TRUE(f[0b0110]);
    EXPECT_FALSE(f[0b1111]);
    EXPECT_EQ(ed_partition(2), (Partition{4, {{1, 2}, {3, 4}}}));
    NechiporukReport r = nechiporuk_bound(f, ed_partition(2));
    EXPECT_EQ(r.blocks[0].sigma, 4u);
    EXPECT_EQ(r.blocks[1].sigma, 4u);
    EXPECT_DOUBLE_EQ(r.total, 4.0);
}

TEST(ElementDistinctness, ThreeStrings) {
    TruthTable f = ed_function(3);
    EXPECT_EQ(f.num_variables(), 12u);
    EXPECT_TRUE(f[(1u << 8) | (2u << 4) | 3u]);
    EXPECT_FALSE(f[(1u << 8) | (1u << 4) | 3u]);
    EdSigmaReport r = ed_sigma_check(3);
    EXPECT_EQ(r.lower_bound, 36u);
    EXPECT_TRUE(r.symmetric);
    EXPECT_TRUE(r.meets_lower_bound);
    // Nonzero subfunctions are "z1 avoids {a, b}" for a != b among 16 values, plus the zero function.
    for (std::size_t s : r.sigmas) {
        EXPECT_EQ(s, 1 + binomial(16, 2));
    }
    for (std::size_t j = 0; j < 3; j++) {
        EXPECT_EQ(r.sigmas[j], brute_sigma(f, ed_partition(3).blocks[j]));
    }
}

TEST(ElementDistinctness, SmallEllRejected) {
    EXPECT_THROW(ed_function(1), DomainError);
}

TEST(NechiporukBound, InvariantUnderBlockAndVariablePermutation) {
    std::mt19937_64 rng(43);
    TruthTable f = ed_function(3);
    Partition p = ed_partition(3);
    double base = nechiporuk_bound(f, p).total;

    Partition reversed = p;
    std::reverse(reversed.blocks.begin(), reversed.blocks.end());
    EXPECT_NEAR(nechiporuk_bound(f, reversed).total, base, 1e-12);

    // Shuffle the variables inside every block.
    std::vector<std::size_t> perm(12);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    for (std::size_t b = 0; b < 3; b++) {
        std::shuffle(perm.begin() + static_cast<std::ptrdiff_t>(4 * b), perm.begin() + static_cast<std::ptrdiff_t>(4 * b + 4), rng);
    }
    EXPECT_NEAR(nechiporuk_bound(permute_variables(f, perm), p).total, base, 1e-12);
}

TEST(NechiporukBound, RestrictionTablesAreSubfunctions) {
    // f is whatever a random circuit accepts with probability above 1/2; restricting the circuit
    // must produce one of f's subfunctions on the block.
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; trial++) {
        const std::size_t n = 4;
        Circuit c = random_circuit(rng, 5, 6, 2, n);
        std::vector<double> p = acceptance_probabilities(c);
        TruthTable f = TruthTable::from_function(n, [&](std::uint64_t a) { return p[a] > 0.5; });
        Partition part{n, {{1, 3}, {2, 4}}};
        for (std::size_t j = 0; j < 2; j++) {
            SubfunctionTable sigma = subfunctions(f, part, j);
            const Block &block = part.blocks[j];
            for (std::uint64_t outside = 0; outside < 4; outside++) {
                Restriction rho{block, {}};
                std::size_t k = 0;
                for (VariableIndex v = 1; v <= n; v++) {
                    if (!block_contains(block, v)) {
                        rho.values[v] = (outside >> (1 - k)) & 1;
                        k++;
                    }
                }
                Circuit r = restrict_circuit(c, rho);
                TruthTable sub = TruthTable::from_function(block.size(), [&](std::uint64_t b) {
                    Assignment a(n, 0);
                    for (std::size_t i = 0; i < block.size(); i++) {
                        a[block[i] - 1] = (b >> (block.size() - 1 - i)) & 1;
                    }
                    return run(r, a).outcome.p1 > 0.5;
                });
                EXPECT_NE(std::find(sigma.tables.begin(), sigma.tables.end(), sub), sigma.tables.end());
            }
        }
    }
}

TEST(Partition, ParseFormatValidate) {
    Partition p = parse_partition("1 2\n\n3 4\n");
    EXPECT_EQ(p, (Partition{4, {{1, 2}, {3, 4}}}));
    EXPECT_EQ(parse_partition(format_partition(p)), p);
    EXPECT_THROW(validate_partition(Partition{4, {{1, 2}, {2, 3, 4}}}), DomainError);
    EXPECT_THROW(validate_partition(Partition{4, {{1, 2}, {4}}}), DomainError);
    EXPECT_THROW(parse_partition("1 x\n"), ParseError);
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(4, 1), 4u);
    EXPECT_EQ(binomial(9, 2), 36u);
    EXPECT_EQ(binomial(6, 2), 15u);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_THROW(binomial(200, 100), DomainError);
}

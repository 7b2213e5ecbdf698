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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qformula/formula.h"
#include "qformula/truth_table.h"

namespace qformula {

/// Disjoint blocks of 1-based variable indices covering 1..n.
struct Partition {
    std::size_t num_variables = 0;
    std::vector<Block> blocks;

    bool operator==(const Partition &other) const = default;
};

/// Throws DomainError unless the blocks are non-empty, disjoint and cover 1..n.
void validate_partition(const Partition &partition);

/// One block per non-empty line, indices separated by whitespace. n is the largest index.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition &partition);
Partition read_partition(const std::filesystem::path &path);
void write_partition(const Partition &partition, const std::filesystem::path &path);

/// Sigma_j: the distinct subfunctions of f on one block. Tables index the block's variables in
/// ascending order, the smallest as the most-significant bit.
struct SubfunctionTable {
    Block block;
    std::vector<TruthTable> tables;

    std::size_t sigma() const {
        return tables.size();
    }
};

/// Enumerates every assignment outside block j (0-based) and deduplicates the induced tables.
SubfunctionTable subfunctions(const TruthTable &f, const Partition &partition, std::size_t j);

struct BlockTerm {
    Block block;
    std::size_t sigma = 0;
    /// log2(sigma) / max(1, log2 log2 sigma).
    double term = 0;
};

struct NechiporukReport {
    std::vector<BlockTerm> blocks;
    double total = 0;
};

double nechiporuk_term(std::size_t sigma);
NechiporukReport nechiporuk_bound(const TruthTable &f, const Partition &partition);

/// ceil(log2 ell); each Element Distinctness string has twice as many bits.
std::size_t ed_symbol_bits(std::size_t ell);

/// 1 iff the ell strings of 2*ceil(log2 ell) bits are pairwise distinct. Capped at 24 variables.
TruthTable ed_function(std::size_t ell);
Partition ed_partition(std::size_t ell);

struct EdSigmaReport {
    std::size_t ell = 0;
    std::vector<std::size_t> sigmas;
    /// C(ell^2, ell - 1).
    std::size_t lower_bound = 0;
    bool meets_lower_bound = false;
    bool symmetric = false;
    double total_bound = 0;
};

EdSigmaReport ed_sigma_check(std::size_t ell);

/// Exact binomial coefficient; throws DomainError on overflow.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace qformula

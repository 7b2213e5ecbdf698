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

#include "qformula/nechiporuk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qformula/circuit_io.h"
#include "qformula/errors.h"

namespace qformula {

void validate_partition(const Partition &partition) {
    std::vector<bool> seen(partition.num_variables + 1, false);
    for (std::size_t b = 0; b < partition.blocks.size(); b++) {
        const Block &block = partition.blocks[b];
        if (block.empty()) {
            throw DomainError("partition block " + std::to_string(b + 1) + " is empty");
        }
        for (VariableIndex j : block) {
            if (j == 0 || j > partition.num_variables) {
                throw DomainError(
                    "partition mentions x" + std::to_string(j) + " outside 1.." +
                    std::to_string(partition.num_variables));
            }
            if (seen[j]) {
                throw DomainError("partition blocks overlap at x" + std::to_string(j));
            }
            seen[j] = true;
        }
    }
    for (std::size_t j = 1; j <= partition.num_variables; j++) {
        if (!seen[j]) {
            throw DomainError("partition does not cover x" + std::to_string(j));
        }
    }
}

Partition parse_partition(std::string_view text) {
    Partition out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream fields(line);
        std::string token;
        std::vector<VariableIndex> block;
        while (fields >> token) {
            std::size_t used = 0;
            unsigned long value = 0;
            try {
                value = std::stoul(token, &used);
            } catch (const std::logic_error &) {
                throw ParseError("expected a variable index, found '" + token + "'", line_no);
            }
            if (used != token.size() || value == 0 || value > std::numeric_limits<VariableIndex>::max()) {
                throw ParseError("expected a positive variable index, found '" + token + "'", line_no);
            }
            block.push_back(static_cast<VariableIndex>(value));
            out.num_variables = std::max<std::size_t>(out.num_variables, value);
        }
        if (block.empty()) {
            continue;
        }
        std::size_t size = block.size();
        Block sorted = make_block(std::move(block));
        if (sorted.size() != size) {
            throw ParseError("repeated variable index", line_no);
        }
        out.blocks.push_back(std::move(sorted));
    }
    if (out.blocks.empty()) {
        throw ParseError("partition has no blocks", 1);
    }
    return out;
}

std::string format_partition(const Partition &partition) {
    std::string out;
    for (const auto &block : partition.blocks) {
        for (std::size_t k = 0; k < block.size(); k++) {
            out += (k ? " " : "") + std::to_string(block[k]);
        }
        out += "\n";
    }
    return out;
}

Partition read_partition(const std::filesystem::path &path) {
    return parse_partition(read_text_file(path));
}

void write_partition(const Partition &partition, const std::filesystem::path &path) {
    write_text_file(path, format_partition(partition));
}

SubfunctionTable subfunctions(const TruthTable &f, const Partition &partition, std::size_t j) {
    const std::size_t n = f.num_variables();
    if (n > kMaxTruthTableVariables) {
        throw DomainError("subfunction enumeration is capped at " + std::to_string(kMaxTruthTableVariables) + " variables");
    }
    if (partition.num_variables != n) {
        throw DomainError(
            "partition covers " + std::to_string(partition.num_variables) + " variables, table has " +
            std::to_string(n));
    }
    validate_partition(partition);
    if (j >= partition.blocks.size()) {
        throw DomainError("block " + std::to_string(j + 1) + " does not exist");
    }

    const Block &block = partition.blocks[j];
    std::vector<VariableIndex> outside;
    for (VariableIndex x = 1; x <= n; x++) {
        if (!block_contains(block, x)) {
            outside.push_back(x);
        }
    }
    // Bit of alpha (x_1 most significant) for each variable.
    auto bit_of = [n](VariableIndex x) { return std::uint64_t{1} << (n - x); };

    const std::size_t k = block.size();
    std::vector<std::uint64_t> inside_offsets(std::size_t{1} << k, 0);
    for (std::size_t a = 0; a < inside_offsets.size(); a++) {
        for (std::size_t i = 0; i < k; i++) {
            if ((a >> (k - 1 - i)) & 1) {
                inside_offsets[a] |= bit_of(block[i]);
            }
        }
    }

    std::unordered_set<std::string> seen;
    SubfunctionTable out;
    out.block = block;
    std::string bits(inside_offsets.size(), '0');
    const std::size_t m = outside.size();
    for (std::uint64_t o = 0; o < (std::uint64_t{1} << m); o++) {
        std::uint64_t base = 0;
        for (std::size_t i = 0; i < m; i++) {
            if ((o >> (m - 1 - i)) & 1) {
                base |= bit_of(outside[i]);
            }
        }
        for (std::size_t a = 0; a < inside_offsets.size(); a++) {
            bits[a] = f[base | inside_offsets[a]] ? '1' : '0';
        }
        if (seen.insert(bits).second) {
            std::vector<std::uint8_t> table(bits.size());
            std::transform(bits.begin(), bits.end(), table.begin(), [](char c) { return c == '1'; });
            out.tables.emplace_back(k, std::move(table));
        }
    }
    std::sort(out.tables.begin(), out.tables.end());
    return out;
}

double nechiporuk_term(std::size_t sigma) {
    if (sigma == 0) {
        throw DomainError("sigma must be positive");
    }
    double l = std::log2(static_cast<double>(sigma));
    if (l == 0) {
        return 0;
    }
    return l / std::max(1.0, std::log2(l));
}

NechiporukReport nechiporuk_bound(const TruthTable &f, const Partition &partition) {
    NechiporukReport out;
    for (std::size_t j = 0; j < partition.blocks.size(); j++) {
        auto sub = subfunctions(f, partition, j);
        BlockTerm term{sub.block, sub.sigma(), nechiporuk_term(sub.sigma())};
        out.total += term.term;
        out.blocks.push_back(std::move(term));
    }
    return out;
}

std::size_t ed_symbol_bits(std::size_t ell) {
    if (ell < 2) {
        throw DomainError("element distinctness needs at least 2 strings");
    }
    std::size_t b = 0;
    while ((std::size_t{1} << b) < ell) {
        b++;
    }
    return b;
}

TruthTable ed_function(std::size_t ell) {
    const std::size_t w = 2 * ed_symbol_bits(ell);
    if (ell * w > kMaxTruthTableVariables) {
        throw DomainError(
            "element distinctness with ell=" + std::to_string(ell) + " needs " + std::to_string(ell * w) +
            " variables, above the cap of " + std::to_string(kMaxTruthTableVariables));
    }
    const std::size_t n = ell * w;
    const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    return TruthTable::from_function(n, [&](std::uint64_t alpha) {
        std::set<std::uint64_t> strings;
        for (std::size_t j = 0; j < ell; j++) {
            strings.insert((alpha >> ((ell - 1 - j) * w)) & mask);
        }
        return strings.size() == ell;
    });
}

Partition ed_partition(std::size_t ell) {
    const std::size_t w = 2 * ed_symbol_bits(ell);
    Partition out;
    out.num_variables = ell * w;
    for (std::size_t j = 0; j < ell; j++) {
        Block block;
        for (std::size_t i = 1; i <= w; i++) {
            block.push_back(static_cast<VariableIndex>(j * w + i));
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; i++) {
        std::size_t numerator = n - k + i;
        if (out > std::numeric_limits<std::size_t>::max() / numerator) {
            throw DomainError("binomial coefficient overflows");
        }
        // out * numerator is divisible by i at every step.
        out = out * numerator / i;
    }
    return out;
}

EdSigmaReport ed_sigma_check(std::size_t ell) {
    TruthTable f = ed_function(ell);
    Partition partition = ed_partition(ell);
    NechiporukReport report = nechiporuk_bound(f, partition);
    EdSigmaReport out;
    out.ell = ell;
    out.lower_bound = binomial(ell * ell, ell - 1);
    for (const auto &b : report.blocks) {
        out.sigmas.push_back(b.sigma);
    }
    out.meets_lower_bound =
        std::all_of(out.sigmas.begin(), out.sigmas.end(), [&](std::size_t s) { return s >= out.lower_bound; });
    out.symmetric = std::all_of(out.sigmas.begin(), out.sigmas.end(), [&](std::size_t s) { return s == out.sigmas[0]; });
    out.total_bound = report.total;
    return out;
}

}  // namespace qformula

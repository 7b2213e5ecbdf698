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

#include "qformula/truth_table.h"

#include <sstream>

#include "qformula/circuit_io.h"
#include "qformula/errors.h"

namespace qformula {

Assignment assignment_from_index(std::uint64_t alpha, std::size_t n) {
    Assignment out(n);
    for (std::size_t j = 0; j < n; j++) {
        out[j] = static_cast<std::uint8_t>((alpha >> (n - 1 - j)) & 1);
    }
    return out;
}

std::uint64_t index_of_assignment(const Assignment &assignment) {
    std::uint64_t alpha = 0;
    for (auto bit : assignment) {
        alpha = (alpha << 1) | (bit & 1);
    }
    return alpha;
}

TruthTable::TruthTable(std::size_t num_variables, std::vector<std::uint8_t> bits)
    : n_(num_variables), bits_(std::move(bits)) {
    if (n_ > kMaxTruthTableVariables) {
        throw DomainError(
            "truth tables are capped at " + std::to_string(kMaxTruthTableVariables) + " variables, got " +
            std::to_string(n_));
    }
    if (bits_.size() != (std::size_t{1} << n_)) {
        throw DomainError(
            "truth table over " + std::to_string(n_) + " variables needs " + std::to_string(std::size_t{1} << n_) +
            " entries, got " + std::to_string(bits_.size()));
    }
    for (auto &b : bits_) {
        b = b != 0;
    }
}

TruthTable TruthTable::from_function(std::size_t num_variables, const std::function<bool(std::uint64_t)> &f) {
    if (num_variables > kMaxTruthTableVariables) {
        throw DomainError("truth table variable cap exceeded");
    }
    std::vector<std::uint8_t> bits(std::size_t{1} << num_variables);
    for (std::uint64_t alpha = 0; alpha < bits.size(); alpha++) {
        bits[alpha] = f(alpha) ? 1 : 0;
    }
    return TruthTable(num_variables, std::move(bits));
}

TruthTable TruthTable::constant(std::size_t num_variables, bool value) {
    return from_function(num_variables, [value](std::uint64_t) { return value; });
}

std::string TruthTable::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

TruthTable parse_truth_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string first;
    std::string second;
    if (!std::getline(in, first)) {
        throw ParseError("missing variable count", 1);
    }
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        long long parsed = std::stoll(first, &used);
        if (parsed < 0 || first.find_first_not_of(" \t\r", used) != std::string::npos) {
            throw ParseError("expected a non-negative integer", 1);
        }
        n = static_cast<std::size_t>(parsed);
    } catch (const std::logic_error &) {
        throw ParseError("expected a non-negative integer", 1);
    }
    if (n > kMaxTruthTableVariables) {
        throw ParseError("variable count above cap " + std::to_string(kMaxTruthTableVariables), 1);
    }
    if (!std::getline(in, second)) {
        throw ParseError("missing table line", 2);
    }
    while (!second.empty() && (second.back() == '\r' || second.back() == ' ')) {
        second.pop_back();
    }
    if (second.size() != (std::size_t{1} << n)) {
        throw ParseError(
            "expected " + std::to_string(std::size_t{1} << n) + " characters, found " + std::to_string(second.size()),
            2);
    }
    std::vector<std::uint8_t> bits(second.size());
    for (std::size_t k = 0; k < second.size(); k++) {
        if (second[k] != '0' && second[k] != '1') {
            throw ParseError("table characters must be 0 or 1", 2);
        }
        bits[k] = second[k] == '1';
    }
    return TruthTable(n, std::move(bits));
}

std::string format_truth_table(const TruthTable &table) {
    return std::to_string(table.num_variables()) + "\n" + table.str() + "\n";
}

TruthTable read_truth_table(const std::filesystem::path &path) {
    return parse_truth_table(read_text_file(path));
}

void write_truth_table(const TruthTable &table, const std::filesystem::path &path) {
    write_text_file(path, format_truth_table(table));
}

}  // namespace qformula

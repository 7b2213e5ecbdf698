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
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qformula {

/// Values of x_1..x_n, one byte (0 or 1) per variable, x_1 first.
using Assignment = std::vector<std::uint8_t>;

/// Assignment whose bits spell `alpha` with x_1 as the most-significant bit.
Assignment assignment_from_index(std::uint64_t alpha, std::size_t n);
std::uint64_t index_of_assignment(const Assignment &assignment);

inline constexpr std::size_t kMaxTruthTableVariables = 24;

/// f : {0,1}^n -> {0,1} stored as 2^n bits, indexed with x_1 as the most-significant bit.
class TruthTable {
   public:
    TruthTable() = default;
    TruthTable(std::size_t num_variables, std::vector<std::uint8_t> bits);
    static TruthTable from_function(std::size_t num_variables, const std::function<bool(std::uint64_t)> &f);
    static TruthTable constant(std::size_t num_variables, bool value);

    std::size_t num_variables() const {
        return n_;
    }
    std::size_t size() const {
        return bits_.size();
    }
    bool operator[](std::uint64_t alpha) const {
        return bits_[alpha] != 0;
    }
    const std::vector<std::uint8_t> &bits() const {
        return bits_;
    }
    std::string str() const;

    bool operator==(const TruthTable &other) const = default;
    auto operator<=>(const TruthTable &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// File format: first line n, second line 2^n characters of '0'/'1'.
TruthTable parse_truth_table(std::string_view text);
std::string format_truth_table(const TruthTable &table);
TruthTable read_truth_table(const std::filesystem::path &path);
void write_truth_table(const TruthTable &table, const std::filesystem::path &path);

}  // namespace qformula

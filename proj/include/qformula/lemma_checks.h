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

// Randomized checks of the tensor-product and gate-reordering identities the squeeze relies on.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qformula {

struct LemmaResult {
    std::string name;
    std::size_t cases = 0;
    double max_error = 0;
    double tolerance = 0;
    /// Postponement instances whose generated hypothesis was rejected (should stay 0).
    std::size_t rejected = 0;

    bool passed() const {
        return cases > 0 && max_error <= tolerance && rejected == 0;
    }
};

/// Norm and inner product of product vectors factor (tolerance 1e-12).
LemmaResult check_tensor_factorization(std::uint64_t seed, std::size_t cases);
/// Products of two orthonormal families are orthonormal (tolerance 1e-12).
LemmaResult check_tensor_orthonormality(std::uint64_t seed, std::size_t cases);
/// C, C1 then C2, and C2 then C1 agree on basis and entangled 6-qubit inputs (tolerance 1e-10).
LemmaResult check_disjoint_reordering(std::uint64_t seed, std::size_t cases);
/// postpone() preserves the circuit operator on every basis state (tolerance 1e-10).
LemmaResult check_postponement(std::uint64_t seed, std::size_t cases);

/// All four checks, each with its own stream derived from `seed`.
std::vector<LemmaResult> verify_lemmas(std::uint64_t seed, std::size_t cases);

}  // namespace qformula

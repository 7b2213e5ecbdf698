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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qformula {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Structural tolerance: max-entry norm of U^dagger U - I for a gate to count as unitary.
inline constexpr double kUnitarityTolerance = 1e-10;
/// Tolerance for exact algebraic identities (tensor factorization, orthonormality).
inline constexpr double kAlgebraicTolerance = 1e-12;
/// Tolerance for end-to-end acceptance-probability equivalence.
inline constexpr double kProbabilityTolerance = 1e-9;
/// Default numerical-rank threshold, relative to the largest vector norm in the family.
inline constexpr double kRankTolerance = 1e-9;

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexVector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Complex> values);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> x);

/// max |U^dagger U - I| over all entries. Infinite for non-square input.
double unitarity_defect(const ComplexMatrix &u);
bool is_unitary(const ComplexMatrix &u, double tol = kUnitarityTolerance);

bool is_power_of_two(std::size_t value);
/// Exponent k with 2^k == value; throws DomainError otherwise.
std::size_t exact_log2(std::size_t value);

/// Tensor product a (x) b. Both dimensions must be powers of two.
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// <x1|x2>, conjugate-linear in the first argument.
Complex inner_product(std::span<const Complex> x1, std::span<const Complex> x2);
double norm(std::span<const Complex> x);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

struct OrthonormalBasis {
    std::vector<ComplexVector> basis;
    std::size_t dim = 0;
    /// Residual norms of accepted pivots, relative to the largest input norm.
    std::vector<double> pivots;
    /// Largest relative residual that was rejected (0 if none).
    double largest_rejected = 0;
    /// True when some pivot lies within three decades of the threshold.
    bool borderline = false;
};

/// Orthonormal basis of span(vectors) by pivoted Gram-Schmidt with re-orthogonalization.
/// Residuals at or below `tol` times the largest input norm count as zero.
OrthonormalBasis orthonormalize(std::span<const ComplexVector> vectors, double tol = kRankTolerance);

enum class CompletionOrder {
    kForward,  ///< extend with e_0, e_1, ... in increasing index order
    kReverse,  ///< extend with e_{n-1}, e_{n-2}, ...
};

/// Completes a partial isometry to a unitary. `fixed` lists the column indices whose values are
/// given (as the columns of `partial`, an n x |fixed| matrix); the remaining columns are filled
/// with standard basis vectors projected off the span so far, in the requested order.
/// Throws NumericalError if the given columns are not orthonormal within `tol`.
ComplexMatrix complete_unitary(
    const ComplexMatrix &partial,
    std::span<const std::size_t> fixed,
    CompletionOrder order = CompletionOrder::kForward,
    double tol = kProbabilityTolerance);

}  // namespace qformula

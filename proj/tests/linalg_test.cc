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

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qformula/errors.h"
#include "qformula/linalg.h"
#include "qformula/random_circuits.h"

using namespace qformula;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

/// Numerical rank by singular values, relative to the largest one.
std::size_t svd_rank(const std::vector<ComplexVector> &vectors, double tol) {
    Eigen::MatrixXcd m(vectors.front().size(), vectors.size());
    for (std::size_t c = 0; c < vectors.size(); c++) {
        for (std::size_t r = 0; r < vectors[c].size(); r++) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vectors[c][r];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0) {
        return 0;
    }
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); i++) {
        if (s(i) > tol * s(0)) {
            rank++;
        }
    }
    return rank;
}

double gram_defect(const std::vector<ComplexVector> &basis) {
    double worst = 0;
    for (std::size_t i = 0; i < basis.size(); i++) {
        for (std::size_t j = 0; j < basis.size(); j++) {
            Complex expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner_product(basis[i], basis[j]) - expected));
        }
    }
    return worst;
}

}  // namespace

TEST(Kron, BasisProduct) {
    ComplexVector zero{1, 0};
    ComplexVector one{0, 1};
    ComplexVector expected{0, 1, 0, 0};
    EXPECT_EQ(kron(zero, one), expected);
}

TEST(Kron, PlusTimesZero) {
    ComplexVector plus{kInvSqrt2, kInvSqrt2};
    ComplexVector zero{1, 0};
    ComplexVector got = kron(plus, zero);
    ComplexVector expected{kInvSqrt2, 0, kInvSqrt2, 0};
    EXPECT_LE(max_abs_diff(got, expected), 1e-15);
}

TEST(Kron, RandomUnitVectorsStayUnit) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; i++) {
        ComplexVector a = random_state(rng, 2);
        ComplexVector b = random_state(rng, 3);
        EXPECT_NEAR(norm(kron(a, b)), 1.0, 1e-12);
    }
}

TEST(Kron, RejectsNonPowerOfTwo) {
    ComplexVector a{1, 0, 0};
    ComplexVector b{1, 0};
    EXPECT_THROW(kron(a, b), DomainError);
}

TEST(InnerProduct, OrthogonalSecondFactor) {
    ComplexVector plus{kInvSqrt2, kInvSqrt2};
    ComplexVector x1 = kron(plus, ComplexVector{1, 0});
    ComplexVector x2 = kron(plus, ComplexVector{0, 1});
    EXPECT_NEAR(std::abs(inner_product(x1, x2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(x1, x1) - 1.0), 0.0, 1e-15);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
    ComplexVector x{Complex(0, 1), 0};
    ComplexVector y{1, 0};
    // <i e0 | e0> = -i
    EXPECT_NEAR(std::abs(inner_product(x, y) - Complex(0, -1)), 0.0, 1e-15);
}

TEST(InnerProduct, DimensionMismatch) {
    ComplexVector a{1, 0};
    ComplexVector b{1, 0, 0, 0};
    EXPECT_THROW(inner_product(a, b), DomainError);
}

TEST(InnerProduct, FactorsOnProducts) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; i++) {
        ComplexVector a1 = random_state(rng, 2), a2 = random_state(rng, 2);
        ComplexVector b1 = random_state(rng, 1), b2 = random_state(rng, 1);
        Complex lhs = inner_product(kron(a1, b1), kron(a2, b2));
        Complex rhs = inner_product(a1, a2) * inner_product(b1, b2);
        EXPECT_LE(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(Orthonormalize, Colinear) {
    std::vector<ComplexVector> v{{1, 0}, {2, 0}};
    OrthonormalBasis b = orthonormalize(v);
    ASSERT_EQ(b.dim, 1u);
    EXPECT_NEAR(std::abs(b.basis[0][0]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(b.basis[0][1]), 0.0, 1e-15);
}

TEST(Orthonormalize, StandardBasisUnchangedUpToPhase) {
    std::vector<ComplexVector> v{{1, 0}, {0, 1}};
    OrthonormalBasis b = orthonormalize(v);
    ASSERT_EQ(b.dim, 2u);
    EXPECT_NEAR(std::abs(b.basis[0][0]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(b.basis[1][1]), 1.0, 1e-15);
}

TEST(Orthonormalize, AllZeroGivesEmptyBasis) {
    std::vector<ComplexVector> v{{0, 0}, {0, 0}};
    OrthonormalBasis b = orthonormalize(v);
    EXPECT_EQ(b.dim, 0u);
    EXPECT_TRUE(b.basis.empty());
}

TEST(Orthonormalize, RankMatchesSvdOracle) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 200; trial++) {
        // 16 vectors in a 16-dimensional space, drawn from a random subspace of dimension k.
        std::size_t k = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<ComplexVector> generators;
        for (std::size_t g = 0; g < k; g++) {
            generators.push_back(random_state(rng, 4));
        }
        std::vector<ComplexVector> v(16, ComplexVector(16));
        for (auto &x : v) {
            for (const auto &g : generators) {
                Complex c(gauss(rng), gauss(rng));
                for (std::size_t i = 0; i < 16; i++) {
                    x[i] += c * g[i];
                }
            }
        }
        OrthonormalBasis b = orthonormalize(v);
        EXPECT_EQ(b.dim, svd_rank(v, kRankTolerance)) << "trial " << trial;
        EXPECT_EQ(b.dim, k);
        EXPECT_LE(gram_defect(b.basis), kRankTolerance);
        // Every input lies in the span.
        for (const auto &x : v) {
            ComplexVector residual = x;
            for (const auto &e : b.basis) {
                Complex c = inner_product(e, x);
                for (std::size_t i = 0; i < residual.size(); i++) {
                    residual[i] -= c * e[i];
                }
            }
            EXPECT_LE(norm(residual), 1e-9 * (1 + norm(x)));
        }
    }
}

TEST(Orthonormalize, SixteenVectorsInDimensionFour) {
    std::mt19937_64 rng(3);
    std::vector<ComplexVector> v;
    for (int i = 0; i < 16; i++) {
        v.push_back(random_state(rng, 2));
    }
    OrthonormalBasis b = orthonormalize(v);
    EXPECT_EQ(b.dim, svd_rank(v, kRankTolerance));
    EXPECT_LE(b.dim, 4u);
    EXPECT_LE(gram_defect(b.basis), kRankTolerance);
}

TEST(Unitarity, DetectsNonUnitary) {
    ComplexMatrix bad{{1, 0}, {0, 2}};
    EXPECT_FALSE(is_unitary(bad));
    EXPECT_NEAR(unitarity_defect(bad), 3.0, 1e-15);
    EXPECT_TRUE(is_unitary(ComplexMatrix::identity(4)));
}

TEST(MatrixKron, MatchesVectorKron) {
    std::mt19937_64 rng(8);
    ComplexMatrix a = random_unitary(rng, 2);
    ComplexMatrix b = random_unitary(rng, 4);
    ComplexMatrix ab = kron(a, b);
    EXPECT_TRUE(is_unitary(ab));
    ComplexVector x = random_state(rng, 1);
    ComplexVector y = random_state(rng, 2);
    ComplexVector lhs = ab * std::span<const Complex>(kron(x, y));
    ComplexVector ax = a * std::span<const Complex>(x);
    ComplexVector by = b * std::span<const Complex>(y);
    EXPECT_LE(max_abs_diff(lhs, kron(ax, by)), 1e-12);
}

class CompletionTest : public ::testing::TestWithParam<CompletionOrder> {};

TEST_P(CompletionTest, KeepsGivenColumnsAndIsUnitary) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; trial++) {
        ComplexMatrix u = random_unitary(rng, 16);
        std::vector<std::size_t> fixed{0, 5, 9, 12};
        ComplexMatrix partial(16, fixed.size());
        for (std::size_t k = 0; k < fixed.size(); k++) {
            partial.set_column(k, u.column(k));
        }
        ComplexMatrix full = complete_unitary(partial, fixed, GetParam());
        EXPECT_LE(unitarity_defect(full), kUnitarityTolerance);
        for (std::size_t k = 0; k < fixed.size(); k++) {
            EXPECT_EQ(full.column(fixed[k]), partial.column(k));
        }
    }
}

TEST_P(CompletionTest, RejectsNonOrthonormalColumns) {
    ComplexMatrix partial(4, 2);
    partial(0, 0) = 1;
    partial(0, 1) = 1;
    std::vector<std::size_t> fixed{0, 1};
    EXPECT_THROW(complete_unitary(partial, fixed, GetParam()), NumericalError);
}

INSTANTIATE_TEST_SUITE_P(
    BothOrders, CompletionTest, ::testing::Values(CompletionOrder::kForward, CompletionOrder::kReverse));

TEST(Completion, OrdersDifferOnFreeColumns) {
    ComplexMatrix partial(4, 1);
    partial(0, 0) = kInvSqrt2;
    partial(1, 0) = kInvSqrt2;
    std::vector<std::size_t> fixed{0};
    ComplexMatrix f = complete_unitary(partial, fixed, CompletionOrder::kForward);
    ComplexMatrix r = complete_unitary(partial, fixed, CompletionOrder::kReverse);
    EXPECT_EQ(f.column(0), r.column(0));
    EXPECT_NE(f, r);
}

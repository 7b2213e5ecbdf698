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

#include "qformula/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qformula/errors.h"

namespace qformula {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0, 0}) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DomainError(
            "matrix entry count " + std::to_string(entries_.size()) + " does not match " + std::to_string(rows) +
            "x" + std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DomainError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> values) {
    if (values.size() != rows_) {
        throw DomainError("column length mismatch");
    }
    for (std::size_t r = 0; r < rows_; r++) {
        (*this)(r, c) = values[r];
    }
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DomainError("matrix product dimension mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex f = a(r, k);
            if (f == Complex{0, 0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += f * b(k, c);
            }
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> x) {
    if (a.cols() != x.size()) {
        throw DomainError("matrix-vector dimension mismatch");
    }
    ComplexVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); r++) {
        Complex acc = 0;
        for (std::size_t c = 0; c < a.cols(); c++) {
            acc += a(r, c) * x[c];
        }
        out[r] = acc;
    }
    return out;
}

double unitarity_defect(const ComplexMatrix &u) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0;
    std::size_t n = u.rows();
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            Complex acc = 0;
            for (std::size_t k = 0; k < n; k++) {
                acc += std::conj(u(k, i)) * u(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            double e = std::abs(acc);
            if (!std::isfinite(e)) {
                return std::numeric_limits<double>::infinity();
            }
            worst = std::max(worst, e);
        }
    }
    return worst;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    return unitarity_defect(u) <= tol;
}

bool is_power_of_two(std::size_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

std::size_t exact_log2(std::size_t value) {
    if (!is_power_of_two(value)) {
        throw DomainError("dimension " + std::to_string(value) + " is not a power of two");
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) != value) {
        k++;
    }
    return k;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
    exact_log2(a.size());
    exact_log2(b.size());
    ComplexVector out;
    out.reserve(a.size() * b.size());
    for (const Complex &x : a) {
        for (const Complex &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ra++) {
        for (std::size_t ca = 0; ca < a.cols(); ca++) {
            for (std::size_t rb = 0; rb < b.rows(); rb++) {
                for (std::size_t cb = 0; cb < b.cols(); cb++) {
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
                }
            }
        }
    }
    return out;
}

Complex inner_product(std::span<const Complex> x1, std::span<const Complex> x2) {
    if (x1.size() != x2.size()) {
        throw DomainError(
            "inner product dimension mismatch: " + std::to_string(x1.size()) + " vs " + std::to_string(x2.size()));
    }
    Complex acc = 0;
    for (std::size_t k = 0; k < x1.size(); k++) {
        acc += std::conj(x1[k]) * x2[k];
    }
    return acc;
}

double norm(std::span<const Complex> x) {
    double acc = 0;
    for (const Complex &c : x) {
        acc += std::norm(c);
    }
    return std::sqrt(acc);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw DomainError("max_abs_diff dimension mismatch");
    }
    double worst = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

namespace {

void project_out(ComplexVector &v, const ComplexVector &unit) {
    Complex c = inner_product(unit, v);
    for (std::size_t k = 0; k < v.size(); k++) {
        v[k] -= c * unit[k];
    }
}

void scale(ComplexVector &v, double f) {
    for (auto &c : v) {
        c *= f;
    }
}

}  // namespace

OrthonormalBasis orthonormalize(std::span<const ComplexVector> vectors, double tol) {
    OrthonormalBasis out;
    if (vectors.empty()) {
        throw DomainError("orthonormalize needs at least one vector");
    }
    std::size_t dim = vectors.front().size();
    double largest = 0;
    for (const auto &v : vectors) {
        if (v.size() != dim) {
            throw DomainError("orthonormalize: vectors have different dimensions");
        }
        largest = std::max(largest, norm(v));
    }
    if (largest == 0) {
        return out;
    }

    std::vector<ComplexVector> residuals(vectors.begin(), vectors.end());
    std::vector<bool> used(residuals.size(), false);
    while (out.basis.size() < dim) {
        std::size_t pick = residuals.size();
        double pick_norm = -1;
        for (std::size_t k = 0; k < residuals.size(); k++) {
            if (used[k]) {
                continue;
            }
            double n = norm(residuals[k]);
            if (n > pick_norm) {
                pick_norm = n;
                pick = k;
            }
        }
        if (pick == residuals.size()) {
            break;
        }
        double relative = pick_norm / largest;
        if (relative <= tol) {
            out.largest_rejected = relative;
            break;
        }
        used[pick] = true;
        ComplexVector q = residuals[pick];
        // Second pass of projection keeps the basis orthogonal to machine precision.
        for (const auto &b : out.basis) {
            project_out(q, b);
        }
        scale(q, 1.0 / norm(q));
        for (std::size_t k = 0; k < residuals.size(); k++) {
            if (!used[k]) {
                project_out(residuals[k], q);
            }
        }
        out.pivots.push_back(relative);
        out.basis.push_back(std::move(q));
    }
    out.dim = out.basis.size();
    for (double p : out.pivots) {
        if (p < tol * 1e3) {
            out.borderline = true;
        }
    }
    if (out.largest_rejected > tol * 1e-3) {
        out.borderline = true;
    }
    return out;
}

ComplexMatrix complete_unitary(
    const ComplexMatrix &partial, std::span<const std::size_t> fixed, CompletionOrder order, double tol) {
    std::size_t n = partial.rows();
    if (partial.cols() != fixed.size()) {
        throw DomainError("complete_unitary: one column index per given column required");
    }
    std::vector<bool> taken(n, false);
    for (std::size_t c : fixed) {
        if (c >= n || taken[c]) {
            throw DomainError("complete_unitary: fixed column indices must be distinct and in range");
        }
        taken[c] = true;
    }

    std::vector<ComplexVector> columns;
    for (std::size_t k = 0; k < fixed.size(); k++) {
        columns.push_back(partial.column(k));
    }
    for (std::size_t i = 0; i < columns.size(); i++) {
        for (std::size_t j = 0; j < columns.size(); j++) {
            Complex g = inner_product(columns[i], columns[j]);
            double expected = i == j ? 1.0 : 0.0;
            if (std::abs(g - expected) > tol) {
                throw NumericalError(
                    "given columns are not orthonormal: |<c" + std::to_string(i) + "|c" + std::to_string(j) +
                    "> - " + std::to_string(expected) + "| = " + std::to_string(std::abs(g - expected)));
            }
        }
    }

    std::vector<ComplexVector> extension;
    for (std::size_t step = 0; step < n && columns.size() + extension.size() < n; step++) {
        std::size_t e = order == CompletionOrder::kForward ? step : n - 1 - step;
        ComplexVector v(n, Complex{0, 0});
        v[e] = 1;
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &c : columns) {
                project_out(v, c);
            }
            for (const auto &c : extension) {
                project_out(v, c);
            }
        }
        double r = norm(v);
        if (r < 1e-6) {
            continue;
        }
        scale(v, 1.0 / r);
        extension.push_back(std::move(v));
    }
    if (columns.size() + extension.size() != n) {
        throw NumericalError("unitary completion ran out of standard basis vectors");
    }

    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < fixed.size(); k++) {
        out.set_column(fixed[k], columns[k]);
    }
    std::size_t next = 0;
    for (std::size_t c = 0; c < n; c++) {
        if (!taken[c]) {
            out.set_column(c, extension[next++]);
        }
    }
    return out;
}

}  // namespace qformula

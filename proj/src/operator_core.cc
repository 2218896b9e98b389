// Copyright 2026 The pplab Authors
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

#include "pplab/operator_core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pplab/errors.h"

namespace pplab {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw InvalidInput("matrix dimensions must be positive");
    }
    if (rows > kMaxDim || cols > kMaxDim) {
        throw InvalidInput(
            "matrix dimension " + std::to_string(std::max(rows, cols)) + " exceeds limit " +
            std::to_string(kMaxDim));
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput(std::string(what) + ": dimension mismatch");
    }
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (!m.is_square()) {
        throw InvalidInput(std::string(what) + ": square matrix required");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows * cols, Complex{0, 0});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_shape(rows, cols);
    if (data_.size() != rows * cols) {
        throw InvalidInput("entry count does not match dimensions");
    }
    for (const Complex &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidInput("matrix entries must be finite");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> entries;
    std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
    for (const auto &row : rows) {
        if (row.size() != ncols) {
            throw InvalidInput("ragged matrix literal");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    *this = ComplexMatrix(rows.size(), ncols, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
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

Complex ComplexMatrix::trace() const {
    require_square(*this, "trace");
    Complex t{0, 0};
    for (std::size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const Complex &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = r; c < cols_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "matrix addition");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (Complex &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InvalidInput("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex ark = a(r, k);
            if (ark == Complex{0, 0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scale) {
    m *= scale;
    return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "tensor_product");
    require_square(b, "tensor_product");
    std::size_t da = a.rows();
    std::size_t db = b.rows();
    ComplexMatrix out(da * db, da * db);
    for (std::size_t i = 0; i < da; i++) {
        for (std::size_t j = 0; j < da; j++) {
            Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; k++) {
                for (std::size_t l = 0; l < db; l++) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        throw InvalidInput("tensor_product: empty factor list");
    }
    ComplexMatrix out = factors[0];
    require_square(out, "tensor_product");
    for (std::size_t k = 1; k < factors.size(); k++) {
        out = tensor_product(out, factors[k]);
    }
    return out;
}

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "anticommutator");
    require_same_shape(a, b, "anticommutator");
    return a * b + b * a;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "commutator");
    require_same_shape(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix ordered_product(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        throw InvalidInput("ordered_product: empty factor list");
    }
    ComplexMatrix out = factors[0];
    require_square(out, "ordered_product");
    for (std::size_t k = 1; k < factors.size(); k++) {
        require_same_shape(out, factors[k], "ordered_product");
        out = out * factors[k];
    }
    return out;
}

EigenSystem hermitian_eigen(const ComplexMatrix &m) {
    if (!m.is_hermitian(kSpectralTol)) {
        throw InvalidInput("hermitian_eigen: matrix is not Hermitian");
    }
    const std::size_t n = m.rows();
    // Work on the exactly Hermitian part so roundoff asymmetry cannot accumulate.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; r++) {
        a(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < n; c++) {
            Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    double total = 0;
    for (Complex z : a.entries()) {
        total += std::norm(z);
    }
    const int max_sweeps = 100;
    bool converged = n == 1;
    for (int sweep = 0; sweep < max_sweeps && !converged; sweep++) {
        double off = 0;
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                off += std::norm(a(p, q));
            }
        }
        if (off <= 1e-32 * total || off == 0) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                double mag = std::abs(a(p, q));
                if (mag == 0) {
                    continue;
                }
                // Phase-rotate a(p, q) onto the positive real axis, then apply the real
                // Jacobi rotation that annihilates it. Combined unitary on columns p, q:
                //   g = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
                Complex phase = a(p, q) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2 * mag);
                double t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
                if (theta < 0) {
                    t = -t;
                }
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                Complex g00 = c;
                Complex g01 = s;
                Complex g10 = -s * std::conj(phase);
                Complex g11 = c * std::conj(phase);

                for (std::size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * g00 + akq * g10;
                    a(k, q) = akp * g01 + akq * g11;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
                    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * g00 + vkq * g10;
                    v(k, q) = vkp * g01 + vkq * g11;
                }
            }
        }
    }
    if (!converged) {
        throw NumericalError("hermitian_eigen: Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });
    EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square() || !m_.is_hermitian(kStructuralTol)) {
        throw InvalidInput("density matrix invariant violated: Hermitian");
    }
    if (std::abs(m_.trace() - Complex{1, 0}) > kStructuralTol) {
        throw InvalidInput("density matrix invariant violated: trace = 1");
    }
    if (hermitian_eigen(m_).values.front() < -kSpectralTol) {
        throw InvalidInput("density matrix invariant violated: positive semidefinite");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim), 0});
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
    return DensityMatrix(Projector::onto(amplitudes).matrix());
}

Projector::Projector(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square() || !m_.is_hermitian(kStructuralTol)) {
        throw InvalidInput("projector invariant violated: Hermitian");
    }
    if (max_abs_diff(m_ * m_, m_) > kStructuralTol) {
        throw InvalidInput("projector invariant violated: idempotent");
    }
    double tr = m_.trace().real();
    double rounded = std::round(tr);
    if (rounded < 1 || std::abs(tr - rounded) > kSpectralTol) {
        throw InvalidInput("projector invariant violated: trace = rank");
    }
    rank_ = static_cast<std::size_t>(rounded);
}

Projector Projector::onto(std::span<const Complex> vector) {
    double norm2 = 0;
    for (Complex z : vector) {
        norm2 += std::norm(z);
    }
    if (!(norm2 > 0) || !std::isfinite(norm2)) {
        throw InvalidInput("Projector::onto: vector must be nonzero and finite");
    }
    std::size_t n = vector.size();
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            m(r, c) = vector[r] * std::conj(vector[c]) / norm2;
        }
    }
    return Projector(std::move(m));
}

Projector Projector::complement() const {
    return Projector(ComplexMatrix::identity(dim()) - m_);
}

Complex expectation(const DensityMatrix &state, const ComplexMatrix &op) {
    const ComplexMatrix &rho = state.matrix();
    if (op.rows() != rho.rows() || op.cols() != rho.cols()) {
        throw InvalidInput("expectation: dimension mismatch");
    }
    Complex t{0, 0};
    for (std::size_t r = 0; r < rho.rows(); r++) {
        for (std::size_t c = 0; c < rho.cols(); c++) {
            t += rho(r, c) * op(c, r);
        }
    }
    return t;
}

double real_expectation(const DensityMatrix &state, const ComplexMatrix &op) {
    if (!op.is_hermitian(kStructuralTol * std::max(1.0, op.max_abs()))) {
        throw InvalidInput("real_expectation: operator is not Hermitian");
    }
    Complex t = expectation(state, op);
    if (std::abs(t.imag()) > kStructuralTol * std::max(1.0, op.max_abs())) {
        throw NumericalError("real_expectation: imaginary part exceeds tolerance");
    }
    return t.real();
}

bool commutes(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    return commutator(a, b).max_abs() <= tol;
}

}  // namespace pplab

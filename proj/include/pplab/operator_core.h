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

#ifndef PPLAB_OPERATOR_CORE_H
#define PPLAB_OPERATOR_CORE_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pplab {

using Complex = std::complex<double>;

/// Largest row/column count a ComplexMatrix may have.
inline constexpr std::size_t kMaxDim = 64;
/// Tolerance for Hermiticity, idempotence and trace checks.
inline constexpr double kStructuralTol = 1e-12;
/// Tolerance for eigenvalue-based checks.
inline constexpr double kSpectralTol = 1e-10;

/// Dense complex matrix, row-major, at most kMaxDim x kMaxDim.
///
/// Entries supplied by callers are checked to be finite. Results of arithmetic on
/// finite operands are not re-checked.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    bool empty() const {
        return rows_ == 0;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Complex> entries() const {
        return data_;
    }

    ComplexMatrix adjoint() const;
    /// Throws InvalidInput for non-square matrices.
    Complex trace() const;
    double max_abs() const;
    /// Max elementwise |M - M^dagger| <= tol. Non-square matrices are never Hermitian.
    bool is_hermitian(double tol = kStructuralTol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

/// Largest elementwise |a - b|. Shapes must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product; the first argument indexes the slow (outer) factor.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);
/// Left fold of tensor_product over a non-empty list.
ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors);

/// ab + ba, without the 1/2.
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);
/// ab - ba.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// Product of a non-empty ordered list of square matrices of equal size.
ComplexMatrix ordered_product(std::span<const ComplexMatrix> factors);

struct EigenSystem {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    ComplexMatrix vectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Sweeps visit (p, q) pairs in row-major order, so results are bitwise reproducible
/// on a given platform. Throws InvalidInput if the input is not Hermitian within
/// kSpectralTol and NumericalError if the sweeps fail to converge.
EigenSystem hermitian_eigen(const ComplexMatrix &m);

/// Trace-one, Hermitian, positive-semidefinite matrix.
class DensityMatrix {
   public:
    /// Throws InvalidInput naming the first violated invariant
    /// ("Hermitian", "trace = 1" or "positive semidefinite").
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix maximally_mixed(std::size_t dim);
    /// |psi><psi| / <psi|psi>.
    static DensityMatrix pure(std::span<const Complex> amplitudes);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    std::size_t dim() const {
        return m_.rows();
    }

   private:
    ComplexMatrix m_;
};

/// Hermitian idempotent matrix.
class Projector {
   public:
    /// Throws InvalidInput unless the matrix is Hermitian, idempotent and has a
    /// positive integer trace.
    explicit Projector(ComplexMatrix m);

    /// Rank-one projector onto the (normalized) vector.
    static Projector onto(std::span<const Complex> vector);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    std::size_t rank() const {
        return rank_;
    }
    std::size_t dim() const {
        return m_.rows();
    }
    /// 1 - pi. Throws InvalidInput when pi is the identity (the complement has rank 0).
    Projector complement() const;

   private:
    ComplexMatrix m_;
    std::size_t rank_ = 0;
};

/// Tr(rho op).
Complex expectation(const DensityMatrix &state, const ComplexMatrix &op);
/// Tr(rho op) for Hermitian op; throws NumericalError if the imaginary part exceeds
/// kStructuralTol (scaled by the operator norm), InvalidInput if op is not Hermitian.
double real_expectation(const DensityMatrix &state, const ComplexMatrix &op);

/// True if |[a, b]| <= tol elementwise.
bool commutes(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kStructuralTol);

}  // namespace pplab

#endif

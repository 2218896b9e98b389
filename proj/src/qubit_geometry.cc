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

#include "pplab/qubit_geometry.h"

#include <cmath>
#include <numbers>

#include "pplab/errors.h"

namespace pplab {

double Vec3::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

namespace {

bool finite(const Vec3 &v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace

UnitVector3::UnitVector3(Vec3 v) : v_(v) {
    if (!finite(v) || std::abs(v.norm() - 1) > kStructuralTol) {
        throw InvalidInput("unit vector required (|n| = 1 within 1e-12)");
    }
}

UnitVector3 UnitVector3::normalized(Vec3 v) {
    double n = v.norm();
    if (!finite(v) || !(n > 0)) {
        throw InvalidInput("cannot normalize a zero or non-finite vector");
    }
    Vec3 u = v * (1 / n);
    // One renormalization pass absorbs the last-bit error of the division.
    return UnitVector3(u * (1 / u.norm()));
}

BlochVector::BlochVector(Vec3 p) : p_(p) {
    if (!finite(p) || p.norm() > 1 + kStructuralTol) {
        throw InvalidInput("Bloch vector must satisfy |p| <= 1");
    }
}

const ComplexMatrix &pauli_x() {
    static const ComplexMatrix m{{0, 1}, {1, 0}};
    return m;
}

const ComplexMatrix &pauli_y() {
    static const ComplexMatrix m{{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
    return m;
}

const ComplexMatrix &pauli_z() {
    static const ComplexMatrix m{{1, 0}, {0, -1}};
    return m;
}

ComplexMatrix sigma_dot(const Vec3 &v) {
    return ComplexMatrix{{v.z, Complex{v.x, -v.y}}, {Complex{v.x, v.y}, -v.z}};
}

DensityMatrix bloch_state(const BlochVector &p) {
    return DensityMatrix((ComplexMatrix::identity(2) + sigma_dot(p.vec())) * Complex{0.5, 0});
}

Vec3 bloch_vector_of(const DensityMatrix &qubit) {
    if (qubit.dim() != 2) {
        throw InvalidInput("bloch_vector_of: qubit state required");
    }
    return {
        real_expectation(qubit, pauli_x()),
        real_expectation(qubit, pauli_y()),
        real_expectation(qubit, pauli_z())};
}

Projector qubit_projector(const UnitVector3 &n, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw InvalidInput("qubit_projector: outcome must be +1 or -1");
    }
    return Projector(
        (ComplexMatrix::identity(2) + sigma_dot(n.vec() * static_cast<double>(outcome))) * Complex{0.5, 0});
}

UnitVector3 perpendicular(const UnitVector3 &axis, AzimuthRule rule) {
    Vec3 ref = std::abs(axis.z()) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    UnitVector3 u = UnitVector3::normalized(ref - axis.vec() * dot(ref, axis.vec()));
    if (rule == AzimuthRule::kRotated) {
        return UnitVector3::normalized(cross(axis.vec(), u.vec()));
    }
    return u;
}

Doublet make_doublet(const UnitVector3 &axis, double alpha, AzimuthRule rule) {
    if (!(alpha > 0 && alpha < std::numbers::pi)) {
        throw InvalidInput("doublet angle must lie in (0, pi) radians");
    }
    UnitVector3 u = perpendicular(axis, rule);
    double c = std::cos(alpha / 2);
    double s = std::sin(alpha / 2);
    return Doublet{
        UnitVector3::normalized(axis.vec() * c + u.vec() * s),
        UnitVector3::normalized(axis.vec() * c - u.vec() * s),
        axis,
        alpha};
}

Frame standard_frame() {
    return {UnitVector3::ex(), UnitVector3::ey(), UnitVector3::ez()};
}

void require_orthonormal(const Frame &frame) {
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            if (std::abs(dot(frame[i], frame[j])) > kSpectralTol) {
                throw InvalidInput("frame axes must be orthonormal");
            }
        }
    }
}

EntanglementGeometry make_entanglement_geometry(
    double alpha, const Frame &a_frame, const Frame &b_frame, AzimuthRule rule) {
    require_orthonormal(a_frame);
    require_orthonormal(b_frame);
    auto doublets = [&](const Frame &f) {
        return std::array<Doublet, 3>{
            make_doublet(f[0], alpha, rule), make_doublet(f[1], alpha, rule), make_doublet(f[2], alpha, rule)};
    };
    return EntanglementGeometry{alpha, a_frame, b_frame, doublets(a_frame), doublets(b_frame)};
}

DensityMatrix werner_state(double eta) {
    if (!std::isfinite(eta) || eta < -1.0 / 3 - kStructuralTol || eta > 1 + kStructuralTol) {
        throw InvalidInput("Werner parameter must satisfy -1/3 <= eta <= 1");
    }
    ComplexMatrix corr = tensor_product(pauli_x(), pauli_x()) + tensor_product(pauli_y(), pauli_y()) +
                         tensor_product(pauli_z(), pauli_z());
    return DensityMatrix((ComplexMatrix::identity(4) - corr * Complex{eta, 0}) * Complex{0.25, 0});
}

UnitVector3 mub_partner(const UnitVector3 &n, AzimuthRule rule) {
    return perpendicular(n, rule);
}

ComplexMatrix lift_to_pair(const ComplexMatrix &op, int which) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw InvalidInput("lift_to_pair: 2x2 operator required");
    }
    if (which == 0) {
        return tensor_product(op, ComplexMatrix::identity(2));
    }
    if (which == 1) {
        return tensor_product(ComplexMatrix::identity(2), op);
    }
    throw InvalidInput("lift_to_pair: qubit index must be 0 or 1");
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t dim_a, std::size_t dim_b, int keep) {
    if (!m.is_square() || m.rows() != dim_a * dim_b) {
        throw InvalidInput("partial_trace: dimension mismatch");
    }
    if (keep != 0 && keep != 1) {
        throw InvalidInput("partial_trace: keep must be 0 or 1");
    }
    std::size_t d = keep == 0 ? dim_a : dim_b;
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            Complex s{0, 0};
            if (keep == 0) {
                for (std::size_t k = 0; k < dim_b; k++) {
                    s += m(i * dim_b + k, j * dim_b + k);
                }
            } else {
                for (std::size_t k = 0; k < dim_a; k++) {
                    s += m(k * dim_b + i, k * dim_b + j);
                }
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace pplab

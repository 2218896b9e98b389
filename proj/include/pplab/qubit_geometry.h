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

#ifndef PPLAB_QUBIT_GEOMETRY_H
#define PPLAB_QUBIT_GEOMETRY_H

#include <array>

#include "pplab/operator_core.h"

namespace pplab {

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm() const;
    Vec3 operator+(const Vec3 &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    Vec3 operator-(const Vec3 &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    Vec3 operator-() const {
        return {-x, -y, -z};
    }
    Vec3 operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    bool operator==(const Vec3 &o) const = default;
};

inline Vec3 operator*(double s, const Vec3 &v) {
    return v * s;
}
double dot(const Vec3 &a, const Vec3 &b);
Vec3 cross(const Vec3 &a, const Vec3 &b);

/// Unit 3-vector; construction checks |v| = 1 within kStructuralTol.
class UnitVector3 {
   public:
    explicit UnitVector3(Vec3 v);
    UnitVector3(double x, double y, double z) : UnitVector3(Vec3{x, y, z}) {
    }
    /// Rescales any nonzero finite vector.
    static UnitVector3 normalized(Vec3 v);

    static UnitVector3 ex() {
        return UnitVector3(1, 0, 0);
    }
    static UnitVector3 ey() {
        return UnitVector3(0, 1, 0);
    }
    static UnitVector3 ez() {
        return UnitVector3(0, 0, 1);
    }

    const Vec3 &vec() const {
        return v_;
    }
    double x() const {
        return v_.x;
    }
    double y() const {
        return v_.y;
    }
    double z() const {
        return v_.z;
    }
    UnitVector3 operator-() const {
        return UnitVector3(-v_);
    }
    operator const Vec3 &() const {
        return v_;
    }

   private:
    Vec3 v_;
};

/// Bloch vector with |p| <= 1 + kStructuralTol.
class BlochVector {
   public:
    explicit BlochVector(Vec3 p);
    BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {
    }
    const Vec3 &vec() const {
        return p_;
    }

   private:
    Vec3 p_;
};

const ComplexMatrix &pauli_x();
const ComplexMatrix &pauli_y();
const ComplexMatrix &pauli_z();
/// v.x sigma_x + v.y sigma_y + v.z sigma_z.
ComplexMatrix sigma_dot(const Vec3 &v);

/// (1 + sigma.p) / 2.
DensityMatrix bloch_state(const BlochVector &p);
/// Tr(rho sigma) for a 2x2 state.
Vec3 bloch_vector_of(const DensityMatrix &qubit);
/// (1 + outcome sigma.n) / 2 with outcome in {+1, -1}.
Projector qubit_projector(const UnitVector3 &n, int outcome);

/// How a direction perpendicular to an axis is picked.
///
/// kDefault projects a reference direction onto the plane normal to the axis. The
/// reference is z unless |axis.z| >= 0.9, in which case it is x. kRotated is the
/// kDefault direction turned by a quarter turn about the axis (axis x u).
enum class AzimuthRule { kDefault, kRotated };

UnitVector3 perpendicular(const UnitVector3 &axis, AzimuthRule rule = AzimuthRule::kDefault);

struct Doublet {
    UnitVector3 n1;
    UnitVector3 n2;
    UnitVector3 axis;
    double alpha;
};

/// n1, n2 = cos(alpha/2) axis +/- sin(alpha/2) u, with u = perpendicular(axis, rule).
/// Requires 0 < alpha < pi.
Doublet make_doublet(const UnitVector3 &axis, double alpha, AzimuthRule rule = AzimuthRule::kDefault);

using Frame = std::array<UnitVector3, 3>;
Frame standard_frame();
/// Throws InvalidInput unless the three vectors are pairwise orthogonal within kSpectralTol.
void require_orthonormal(const Frame &frame);

struct EntanglementGeometry {
    double alpha;
    Frame a_axes;
    Frame b_axes;
    std::array<Doublet, 3> a_doublets;
    std::array<Doublet, 3> b_doublets;
};

EntanglementGeometry make_entanglement_geometry(
    double alpha,
    const Frame &a_frame = standard_frame(),
    const Frame &b_frame = standard_frame(),
    AzimuthRule rule = AzimuthRule::kDefault);

/// (1 - eta sigma_1 . sigma_2) / 4 for -1/3 <= eta <= 1.
DensityMatrix werner_state(double eta);

/// A unit vector orthogonal to n, picked by the azimuth rule. For qubits the
/// eigenbases of sigma.n and sigma.mub_partner(n) are mutually unbiased.
UnitVector3 mub_partner(const UnitVector3 &n, AzimuthRule rule = AzimuthRule::kDefault);

/// Lifts a 2x2 operator onto qubit `which` (0 or 1) of a two-qubit space.
ComplexMatrix lift_to_pair(const ComplexMatrix &op, int which);

/// Partial trace of a bipartite (dim_a x dim_b) operator, keeping side 0 (a) or 1 (b).
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t dim_a, std::size_t dim_b, int keep);

}  // namespace pplab

#endif

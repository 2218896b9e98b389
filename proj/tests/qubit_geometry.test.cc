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

#include <numbers>

#include "gtest/gtest.h"

#include "oracle.h"
#include "pplab/errors.h"

using namespace pplab;

TEST(UnitVector3, validation) {
    ASSERT_THROW(UnitVector3(1, 1, 0), InvalidInput);
    ASSERT_THROW(UnitVector3::normalized({0, 0, 0}), InvalidInput);
    UnitVector3 u = UnitVector3::normalized({3, 0, 4});
    EXPECT_NEAR(u.x(), 0.6, 1e-15);
    EXPECT_NEAR(u.z(), 0.8, 1e-15);
    EXPECT_NEAR((-u).z(), -0.8, 1e-15);
}

TEST(BlochVector, state_round_trip) {
    ASSERT_THROW(BlochVector(1, 1, 0), InvalidInput);
    oracle::Rng rng(11);
    for (int i = 0; i < 50; i++) {
        Vec3 p = rng.bloch_vec();
        DensityMatrix rho = bloch_state(BlochVector(p));
        EXPECT_LT(oracle::max_diff(oracle::from_lib(rho.matrix()), oracle::bloch(p.x, p.y, p.z)), 1e-15);
        Vec3 q = bloch_vector_of(rho);
        EXPECT_NEAR(q.x, p.x, 1e-14);
        EXPECT_NEAR(q.y, p.y, 1e-14);
        EXPECT_NEAR(q.z, p.z, 1e-14);
    }
    DensityMatrix mixed = bloch_state(BlochVector(0, 0, 0));
    EXPECT_NEAR(mixed.matrix()(0, 0).real(), 0.5, 0);
}

TEST(QubitProjector, matches_oracle) {
    oracle::Rng rng(12);
    for (int i = 0; i < 20; i++) {
        Vec3 n = rng.unit_vec();
        for (int s : {+1, -1}) {
            Projector p = qubit_projector(UnitVector3::normalized(n), s);
            EXPECT_LT(oracle::max_diff(oracle::from_lib(p.matrix()), oracle::qproj(n.x, n.y, n.z, s)), 1e-14);
        }
    }
    ASSERT_THROW(qubit_projector(UnitVector3::ez(), 0), InvalidInput);
}

TEST(Perpendicular, orthogonal_and_rules_differ_by_quarter_turn) {
    oracle::Rng rng(13);
    for (int i = 0; i < 100; i++) {
        UnitVector3 a = UnitVector3::normalized(rng.unit_vec());
        UnitVector3 u = perpendicular(a);
        UnitVector3 v = perpendicular(a, AzimuthRule::kRotated);
        EXPECT_NEAR(dot(a, u), 0, 1e-14);
        EXPECT_NEAR(dot(a, v), 0, 1e-14);
        EXPECT_NEAR(dot(u, v), 0, 1e-14);
        Vec3 c = cross(a, u);
        EXPECT_NEAR(dot(c, v), 1, 1e-14);
    }
    UnitVector3 pz = perpendicular(UnitVector3::ez());
    EXPECT_NEAR(pz.x(), 1, 1e-15);
    UnitVector3 px = perpendicular(UnitVector3::ex());
    EXPECT_NEAR(px.z(), 1, 1e-15);
}

TEST(MubPartner, bases_are_unbiased) {
    oracle::Rng rng(14);
    for (int i = 0; i < 50; i++) {
        UnitVector3 n = UnitVector3::normalized(rng.unit_vec());
        UnitVector3 m = mub_partner(n);
        for (int s : {+1, -1}) {
            for (int t : {+1, -1}) {
                // |<e|f>|^2 = Tr(pi_e pi_f) for rank-one projectors.
                double ov = oracle::trace(oracle::mul(oracle::qproj(n.x(), n.y(), n.z(), s),
                                                      oracle::qproj(m.x(), m.y(), m.z(), t)))
                                .real();
                EXPECT_NEAR(ov, 0.5, 1e-14);
            }
        }
    }
}

TEST(Doublet, symmetric_about_axis) {
    UnitVector3 axis = UnitVector3::normalized({1, 2, 2});
    double alpha = 2.0;
    Doublet d = make_doublet(axis, alpha);
    EXPECT_NEAR(dot(d.n1, d.n2), std::cos(alpha), 1e-14);
    EXPECT_NEAR(dot(d.n1, axis), std::cos(alpha / 2), 1e-14);
    EXPECT_NEAR(dot(d.n2, axis), std::cos(alpha / 2), 1e-14);
    Vec3 sum = d.n1.vec() + d.n2.vec();
    EXPECT_NEAR(sum.norm(), 2 * std::cos(alpha / 2), 1e-14);
    ASSERT_THROW(make_doublet(axis, 0), InvalidInput);
    ASSERT_THROW(make_doublet(axis, std::numbers::pi), InvalidInput);
    ASSERT_THROW(make_doublet(axis, 120), InvalidInput);
}

TEST(EntanglementGeometry, frames) {
    EntanglementGeometry g = make_entanglement_geometry(std::numbers::pi / 2);
    for (std::size_t i = 0; i < 3; i++) {
        EXPECT_NEAR(dot(g.a_doublets[i].axis, g.a_axes[i]), 1, 1e-15);
        EXPECT_NEAR(dot(g.b_doublets[i].n1, g.b_doublets[i].n2), 0, 1e-14);
    }
    Frame bad{UnitVector3::ex(), UnitVector3::ex(), UnitVector3::ez()};
    ASSERT_THROW(make_entanglement_geometry(1.0, bad), InvalidInput);
}

TEST(WernerState, matches_oracle) {
    for (double eta : {-1.0 / 3, 0.0, 0.5, 1.0}) {
        EXPECT_LT(oracle::max_diff(oracle::from_lib(werner_state(eta).matrix()), oracle::werner(eta)), 1e-15);
    }
    ASSERT_THROW(werner_state(1.1), InvalidInput);
    ASSERT_THROW(werner_state(-0.5), InvalidInput);
}

TEST(PartialTrace, product_states) {
    oracle::Rng rng(15);
    oracle::Mat a = rng.ginibre_state(2);
    oracle::Mat b = rng.ginibre_state(3);
    ComplexMatrix ab = oracle::to_lib(oracle::kron(a, b));
    EXPECT_LT(oracle::max_diff(oracle::from_lib(partial_trace(ab, 2, 3, 0)), a), 1e-14);
    EXPECT_LT(oracle::max_diff(oracle::from_lib(partial_trace(ab, 2, 3, 1)), b), 1e-14);
    ASSERT_THROW(partial_trace(ab, 2, 2, 0), InvalidInput);
}

TEST(LiftToPair, acts_on_one_qubit) {
    ComplexMatrix z0 = lift_to_pair(pauli_z(), 0);
    EXPECT_EQ(oracle::max_diff(oracle::from_lib(z0), oracle::kron(oracle::sz(), oracle::eye(2))), 0);
    ComplexMatrix z1 = lift_to_pair(pauli_z(), 1);
    EXPECT_EQ(oracle::max_diff(oracle::from_lib(z1), oracle::kron(oracle::eye(2), oracle::sz())), 0);
    ASSERT_THROW(lift_to_pair(pauli_z(), 2), InvalidInput);
}

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


#include "pplab/weak_values.h"

#include "gtest/gtest.h"

#include "oracle.h"
#include "pplab/errors.h"
#include "pplab/qubit_geometry.h"

using namespace pplab;

TEST(WeakValue, matches_ratio_of_traces) {
    oracle::Rng rng(41);
    for (int rep = 0; rep < 50; rep++) {
        oracle::Mat pre = rng.ginibre_state(3);
        oracle::Mat post = rng.ginibre_state(3, 1);
        oracle::Mat a = rng.projector(3, 1);
        a = oracle::mul(a, rng.projector(3, 2));
        WeakValueReport r = weak_value(oracle::to_lib(a), oracle::state(pre), oracle::state(post), "A");
        oracle::C expected = oracle::trace(oracle::mul(oracle::mul(post, a), pre)) /
                             oracle::trace(oracle::mul(post, pre)).real();
        EXPECT_NEAR(r.value.real(), expected.real(), 1e-12);
        EXPECT_NEAR(r.value.imag(), expected.imag(), 1e-12);
        EXPECT_EQ(r.operator_label, "A");
        EXPECT_NEAR(r.overlap, oracle::trace(oracle::mul(post, pre)).real(), 1e-14);
    }
}

TEST(WeakValue, anomalous_sigma_z) {
    // Pre and post Bloch vectors at +-beta from z: the weak value of sigma_z is 1/cos(beta).
    double beta = 1.4;
    DensityMatrix pre = bloch_state(BlochVector(std::sin(beta), 0, std::cos(beta)));
    DensityMatrix post = bloch_state(BlochVector(-std::sin(beta), 0, std::cos(beta)));
    WeakValueReport r = weak_value(pauli_z(), pre, post);
    EXPECT_NEAR(r.value.real(), 1 / std::cos(beta), 1e-12);
    EXPECT_NEAR(r.value.imag(), 0, 1e-14);
    EXPECT_NEAR(r.spectrum_min, -1, 1e-14);
    EXPECT_NEAR(r.spectrum_max, 1, 1e-14);
    EXPECT_TRUE(r.anomalous);

    WeakValueReport ordinary = weak_value(pauli_z(), pre, pre);
    EXPECT_FALSE(ordinary.anomalous);
    EXPECT_NEAR(ordinary.value.real(), std::cos(beta), 1e-14);
}

TEST(WeakValue, complex_value_is_anomalous) {
    // pi_x pi_y between z+ and the mixed state has an imaginary part.
    ComplexMatrix prod = qubit_projector(UnitVector3::ex(), 1).matrix() * qubit_projector(UnitVector3::ey(), 1).matrix();
    WeakValueReport r = weak_value(prod, bloch_state(BlochVector(0, 0, 1)), DensityMatrix::maximally_mixed(2));
    EXPECT_GT(std::abs(r.value.imag()), 1e-3);
    EXPECT_TRUE(r.anomalous);
}

TEST(WeakValue, errors) {
    DensityMatrix up = bloch_state(BlochVector(0, 0, 1));
    DensityMatrix down = bloch_state(BlochVector(0, 0, -1));
    ASSERT_THROW(weak_value(pauli_x(), up, down), PostSelectionImpossible);
    ASSERT_THROW(weak_value(ComplexMatrix::identity(3), up, up), InvalidInput);
    std::vector<Projector> none;
    ASSERT_THROW(real_weak_product(none, up, up), InvalidInput);
}

TEST(HJ, decomposition_reconstructs_product) {
    oracle::Rng rng(42);
    for (int rep = 0; rep < 20; rep++) {
        oracle::Mat p = oracle::mul(rng.rank_one_projector(3), rng.rank_one_projector(3));
        HJ hj = hj_decompose(oracle::to_lib(p));
        EXPECT_TRUE(hj.h.is_hermitian());
        EXPECT_TRUE(hj.j.is_hermitian());
        ComplexMatrix back = hj.h - hj.j * Complex{0, 1};
        EXPECT_LT(oracle::max_diff(oracle::from_lib(back), p), 1e-14);
    }
    ASSERT_THROW(hj_decompose(ComplexMatrix(2, 3)), InvalidInput);
}

TEST(Factorization, identity_holds_for_random_draws) {
    oracle::Rng rng(43);
    for (int rep = 0; rep < 200; rep++) {
        std::size_t dim = 2 + rng.index(3);
        std::size_t n = 2 + rng.index(3);
        oracle::Mat rho = rng.ginibre_state(dim);
        std::vector<Projector> ps;
        std::vector<oracle::Mat> ms;
        for (std::size_t k = 0; k < n; k++) {
            ms.push_back(rng.projector(dim, 1 + rng.index(dim - 1)));
            ps.push_back(oracle::projector(ms.back()));
        }
        FactorizationReport f = pp_weak_factorization(oracle::state(rho), ps);
        EXPECT_LT(f.identity_residual, 1e-10);
        EXPECT_NEAR(f.pseudo_probability, oracle::expect(rho, oracle::unit_pp(ms)), 1e-12);
        EXPECT_NEAR(f.born_factor, oracle::expect(rho, ms[0]), 1e-12);
        if (n == 2) {
            EXPECT_EQ(f.pseudo_probability < 0, f.weak_factor < 0);
        }
    }
}

TEST(Factorization, undefined_when_first_factor_has_no_support) {
    DensityMatrix down = bloch_state(BlochVector(0, 0, -1));
    std::vector<Projector> ps{qubit_projector(UnitVector3::ez(), 1), qubit_projector(UnitVector3::ex(), 1)};
    ASSERT_THROW(pp_weak_factorization(down, ps), FactorizationUndefined);
}

TEST(RealWeakProduct, matches_oracle) {
    oracle::Rng rng(44);
    oracle::Mat pre = rng.ginibre_state(2);
    oracle::Mat post = rng.ginibre_state(2);
    std::vector<oracle::Mat> ms{rng.rank_one_projector(2), rng.rank_one_projector(2), rng.rank_one_projector(2)};
    std::vector<Projector> ps;
    for (const auto &m : ms) {
        ps.push_back(oracle::projector(m));
    }
    oracle::Mat prod = oracle::mul(oracle::mul(ms[0], ms[1]), ms[2]);
    double expected = oracle::trace(oracle::mul(oracle::mul(post, prod), pre)).real() /
                      oracle::trace(oracle::mul(post, pre)).real();
    EXPECT_NEAR(real_weak_product(ps, oracle::state(pre), oracle::state(post)), expected, 1e-12);
}

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

#include <cmath>

#include "pplab/errors.h"
#include "pplab/pseudo_projection.h"

namespace pplab {

namespace {

void require_dims(const ComplexMatrix &a, const DensityMatrix &pre, const DensityMatrix &post) {
    if (!a.is_square() || a.rows() != pre.dim() || pre.dim() != post.dim()) {
        throw InvalidInput("weak value: dimension mismatch");
    }
}

double overlap_of(const DensityMatrix &pre, const DensityMatrix &post) {
    double overlap = (post.matrix() * pre.matrix()).trace().real();
    if (!(overlap > kMinOverlap)) {
        throw PostSelectionImpossible("post-selection overlap Tr(post pre) vanishes");
    }
    return overlap;
}

}  // namespace

WeakValueReport weak_value(
    const ComplexMatrix &a, const DensityMatrix &pre, const DensityMatrix &post, std::string label) {
    require_dims(a, pre, post);
    double overlap = overlap_of(pre, post);
    Complex value = (post.matrix() * a * pre.matrix()).trace() / overlap;

    ComplexMatrix hermitian_part = (a + a.adjoint()) * Complex{0.5, 0};
    std::vector<double> spectrum = hermitian_eigen(hermitian_part).values;
    double lo = spectrum.front();
    double hi = spectrum.back();
    bool anomalous = std::abs(value.imag()) > kSpectralTol || value.real() < lo - kSpectralTol ||
                     value.real() > hi + kSpectralTol;
    return WeakValueReport{value, pre, post, std::move(label), lo, hi, anomalous, overlap};
}

double real_weak_product(std::span<const Projector> factors, const DensityMatrix &pre, const DensityMatrix &post) {
    if (factors.empty()) {
        throw InvalidInput("real_weak_product: at least one factor required");
    }
    std::vector<ComplexMatrix> mats;
    for (const Projector &p : factors) {
        mats.push_back(p.matrix());
    }
    for (const ComplexMatrix &m : mats) {
        require_dims(m, pre, post);
    }
    double overlap = overlap_of(pre, post);
    return (post.matrix() * ordered_product(mats) * pre.matrix()).trace().real() / overlap;
}

HJ hj_decompose(const ComplexMatrix &product) {
    if (!product.is_square()) {
        throw InvalidInput("hj_decompose: square matrix required");
    }
    ComplexMatrix adj = product.adjoint();
    return HJ{(product + adj) * Complex{0.5, 0}, (product - adj) * Complex{0, 0.5}};
}

DensityMatrix normalized_projector_state(const Projector &p) {
    return DensityMatrix(p.matrix() * Complex{1.0 / static_cast<double>(p.rank()), 0});
}

FactorizationReport pp_weak_factorization(const DensityMatrix &state, std::span<const Projector> factors) {
    PseudoProjection pp = unit_pp(factors);
    if (pp.matrix.rows() != state.dim()) {
        throw InvalidInput("pp_weak_factorization: dimension mismatch");
    }
    double pseudo = expectation(state, pp.matrix).real();
    double born = expectation(state, factors[0].matrix()).real();
    if (!(born > kMinOverlap)) {
        throw FactorizationUndefined("factorization needs Tr(rho pi_1) > 0");
    }
    double weak = real_weak_product(factors.subspan(1), state, normalized_projector_state(factors[0]));
    return FactorizationReport{pseudo, born, weak, std::abs(pseudo - born * weak)};
}

}  // namespace pplab

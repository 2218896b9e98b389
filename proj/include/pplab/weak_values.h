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

#ifndef PPLAB_WEAK_VALUES_H
#define PPLAB_WEAK_VALUES_H

#include <string>

#include "pplab/operator_core.h"

namespace pplab {

/// Post-selection overlaps at or below this are rejected.
inline constexpr double kMinOverlap = 1e-12;

struct WeakValueReport {
    Complex value;
    DensityMatrix pre;
    DensityMatrix post;
    std::string operator_label;
    /// Eigenvalue range of the operator (of its Hermitian part if it is not Hermitian).
    double spectrum_min;
    double spectrum_max;
    bool anomalous;
    /// Tr(post pre).
    double overlap;
};

/// Tr(post A pre) / Tr(post pre). Throws PostSelectionImpossible when the overlap is
/// at most kMinOverlap.
WeakValueReport weak_value(
    const ComplexMatrix &a, const DensityMatrix &pre, const DensityMatrix &post, std::string label = "");

/// Re Tr(post pi_1 ... pi_k pre) / Tr(post pre) for a non-empty ordered product.
double real_weak_product(std::span<const Projector> factors, const DensityMatrix &pre, const DensityMatrix &post);

struct HJ {
    ComplexMatrix h;
    ComplexMatrix j;
};

/// P = H - iJ with H = (P + P^dagger)/2 and J = i(P - P^dagger)/2.
HJ hj_decompose(const ComplexMatrix &product);

/// pi / rank(pi): the normalized post-selection state for a projector.
DensityMatrix normalized_projector_state(const Projector &p);

struct FactorizationReport {
    /// <unit_pp(factors)>.
    double pseudo_probability;
    /// Tr(rho pi_1).
    double born_factor;
    /// real_weak_product(rest, rho, pi_1 / rank).
    double weak_factor;
    double identity_residual;
};

/// Throws FactorizationUndefined when Tr(rho pi_1) <= kMinOverlap.
FactorizationReport pp_weak_factorization(const DensityMatrix &state, std::span<const Projector> factors);

}  // namespace pplab

#endif

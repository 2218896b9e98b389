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

#ifndef PPLAB_PSEUDO_PROJECTION_H
#define PPLAB_PSEUDO_PROJECTION_H

#include <string_view>
#include <vector>

#include "pplab/operator_core.h"

namespace pplab {

enum class Prescription { kUnit, kSymmetrized, kConvex, kDisjunction };

std::string_view prescription_name(Prescription p);
/// Inverse of prescription_name for "unit" and "symmetrized".
Prescription parse_prescription(std::string_view name);

using Ordering = std::vector<std::size_t>;

struct PseudoProjection {
    ComplexMatrix matrix;
    std::vector<Projector> factors;
    Prescription prescription;
    /// Orderings (indices into factors) averaged with `weights`. Empty for kDisjunction.
    std::vector<Ordering> orderings;
    std::vector<double> weights;
};

/// (pi_1 pi_2 ... pi_N + h.c.) / 2 for N >= 2 factors of equal dimension.
PseudoProjection unit_pp(std::span<const Projector> factors);

/// Equal-weight average of unit_pp over canonical_orderings(N).
PseudoProjection symmetrized_pp(std::span<const Projector> factors);

/// Weighted average of unit_pp over the given orderings. Weights must be non-negative
/// and sum to 1; an empty weight list means equal weights.
PseudoProjection convex_pp(
    std::span<const Projector> factors, std::vector<Ordering> orderings, std::vector<double> weights = {});

/// pi_a + pi_b - {pi_a, pi_b} / 2.
PseudoProjection disjunction_pp(const Projector &pa, const Projector &pb);

/// Permutations of 0..n-1 in lexicographic order, keeping one of each pair related by
/// reversal (the one with perm.front() < perm.back()). n! / 2 entries for n >= 2.
std::vector<Ordering> canonical_orderings(std::size_t n);

/// Matrix-only helpers that accept any factor count >= 1 and do not validate the
/// factors as projectors. A single factor is returned unchanged.
ComplexMatrix unit_pp_matrix(std::span<const ComplexMatrix> factors);
ComplexMatrix symmetrized_pp_matrix(std::span<const ComplexMatrix> factors);

struct EigenCertificate {
    double min_eigenvalue;
    /// Unit vector with <w|Pi|w> = min_eigenvalue.
    std::vector<Complex> witness;
};

EigenCertificate min_eigen_certificate(const PseudoProjection &pp);
EigenCertificate min_eigen_certificate(const ComplexMatrix &hermitian);

}  // namespace pplab

#endif

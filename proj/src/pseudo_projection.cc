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

#include "pplab/pseudo_projection.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pplab/errors.h"

namespace pplab {

std::string_view prescription_name(Prescription p) {
    switch (p) {
        case Prescription::kUnit:
            return "unit";
        case Prescription::kSymmetrized:
            return "symmetrized";
        case Prescription::kConvex:
            return "convex";
        case Prescription::kDisjunction:
            return "disjunction";
    }
    return "unknown";
}

Prescription parse_prescription(std::string_view name) {
    if (name == "unit") {
        return Prescription::kUnit;
    }
    if (name == "symmetrized") {
        return Prescription::kSymmetrized;
    }
    throw InvalidInput("unknown prescription '" + std::string(name) + "' (expected unit or symmetrized)");
}

namespace {

std::vector<ComplexMatrix> matrices_of(std::span<const Projector> factors) {
    std::vector<ComplexMatrix> out;
    out.reserve(factors.size());
    for (const Projector &p : factors) {
        out.push_back(p.matrix());
    }
    return out;
}

void check_factors(std::span<const Projector> factors) {
    if (factors.size() < 2) {
        throw InvalidInput("a pseudo-projection needs at least 2 factors");
    }
    for (const Projector &p : factors) {
        if (p.dim() != factors[0].dim()) {
            throw InvalidInput("pseudo-projection factors must share a dimension");
        }
    }
}

ComplexMatrix hermitian_part_of_product(std::span<const ComplexMatrix> ordered) {
    ComplexMatrix p = ordered_product(ordered);
    return (p + p.adjoint()) * Complex{0.5, 0};
}

bool all_commute(std::span<const Projector> factors) {
    for (std::size_t i = 0; i < factors.size(); i++) {
        for (std::size_t j = i + 1; j < factors.size(); j++) {
            if (!commutes(factors[i].matrix(), factors[j].matrix())) {
                return false;
            }
        }
    }
    return true;
}

PseudoProjection finish(
    std::span<const Projector> factors,
    Prescription prescription,
    std::vector<Ordering> orderings,
    std::vector<double> weights) {
    std::vector<ComplexMatrix> mats = matrices_of(factors);
    ComplexMatrix sum(mats[0].rows(), mats[0].rows());
    std::vector<ComplexMatrix> ordered(mats.size());
    for (std::size_t k = 0; k < orderings.size(); k++) {
        for (std::size_t j = 0; j < mats.size(); j++) {
            ordered[j] = mats[orderings[k][j]];
        }
        sum += hermitian_part_of_product(ordered) * Complex{weights[k], 0};
    }
    if (all_commute(factors) && max_abs_diff(sum * sum, sum) > kSpectralTol) {
        throw NumericalError("pseudo-projection of commuting factors is not idempotent");
    }
    return PseudoProjection{
        std::move(sum),
        std::vector<Projector>(factors.begin(), factors.end()),
        prescription,
        std::move(orderings),
        std::move(weights)};
}

}  // namespace

std::vector<Ordering> canonical_orderings(std::size_t n) {
    Ordering perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Ordering> out;
    do {
        if (n < 2 || perm.front() < perm.back()) {
            out.push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PseudoProjection unit_pp(std::span<const Projector> factors) {
    check_factors(factors);
    Ordering identity(factors.size());
    std::iota(identity.begin(), identity.end(), 0);
    return finish(factors, Prescription::kUnit, {identity}, {1.0});
}

PseudoProjection symmetrized_pp(std::span<const Projector> factors) {
    check_factors(factors);
    std::vector<Ordering> orderings = canonical_orderings(factors.size());
    std::vector<double> weights(orderings.size(), 1.0 / static_cast<double>(orderings.size()));
    return finish(factors, Prescription::kSymmetrized, std::move(orderings), std::move(weights));
}

PseudoProjection convex_pp(
    std::span<const Projector> factors, std::vector<Ordering> orderings, std::vector<double> weights) {
    check_factors(factors);
    if (orderings.empty()) {
        throw InvalidInput("convex_pp: at least one ordering required");
    }
    for (const Ordering &o : orderings) {
        Ordering sorted = o;
        std::sort(sorted.begin(), sorted.end());
        Ordering expected(factors.size());
        std::iota(expected.begin(), expected.end(), 0);
        if (sorted != expected) {
            throw InvalidInput("convex_pp: each ordering must be a permutation of the factor indices");
        }
    }
    if (weights.empty()) {
        weights.assign(orderings.size(), 1.0 / static_cast<double>(orderings.size()));
    }
    if (weights.size() != orderings.size()) {
        throw InvalidInput("convex_pp: one weight per ordering required");
    }
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0) || !std::isfinite(w)) {
            throw InvalidInput("convex_pp: weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1) > kStructuralTol) {
        throw InvalidInput("convex_pp: weights must sum to 1");
    }
    return finish(factors, Prescription::kConvex, std::move(orderings), std::move(weights));
}

PseudoProjection disjunction_pp(const Projector &pa, const Projector &pb) {
    if (pa.dim() != pb.dim()) {
        throw InvalidInput("disjunction_pp: dimension mismatch");
    }
    ComplexMatrix m = pa.matrix() + pb.matrix() - anticommutator(pa.matrix(), pb.matrix()) * Complex{0.5, 0};
    return PseudoProjection{std::move(m), {pa, pb}, Prescription::kDisjunction, {}, {}};
}

ComplexMatrix unit_pp_matrix(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        throw InvalidInput("unit_pp_matrix: empty factor list");
    }
    if (factors.size() == 1) {
        return factors[0];
    }
    return hermitian_part_of_product(factors);
}

ComplexMatrix symmetrized_pp_matrix(std::span<const ComplexMatrix> factors) {
    if (factors.size() <= 2) {
        return unit_pp_matrix(factors);
    }
    std::vector<Ordering> orderings = canonical_orderings(factors.size());
    ComplexMatrix sum(factors[0].rows(), factors[0].rows());
    std::vector<ComplexMatrix> ordered(factors.size());
    for (const Ordering &o : orderings) {
        for (std::size_t j = 0; j < factors.size(); j++) {
            ordered[j] = factors[o[j]];
        }
        sum += hermitian_part_of_product(ordered);
    }
    return sum * Complex{1.0 / static_cast<double>(orderings.size()), 0};
}

EigenCertificate min_eigen_certificate(const PseudoProjection &pp) {
    return min_eigen_certificate(pp.matrix);
}

EigenCertificate min_eigen_certificate(const ComplexMatrix &hermitian) {
    EigenSystem es = hermitian_eigen(hermitian);
    std::vector<Complex> w(hermitian.rows());
    for (std::size_t r = 0; r < w.size(); r++) {
        w[r] = es.vectors(r, 0);
    }
    return EigenCertificate{es.values[0], std::move(w)};
}

}  // namespace pplab

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

#ifndef PPLAB_SCHEME_H
#define PPLAB_SCHEME_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pplab/pseudo_projection.h"
#include "pplab/qubit_geometry.h"

namespace pplab {

/// Largest number of observables in a scheme.
inline constexpr std::size_t kMaxSchemeObservables = 8;

/// A dichotomic (+1/-1) observable acting on one subsystem.
struct ObservableSpec {
    std::size_t subsystem = 0;
    /// Local operator on the subsystem; spectrum in {-1, +1}.
    ComplexMatrix matrix;
    std::string label;
    std::optional<UnitVector3> axis;

    /// sigma.axis on a qubit subsystem.
    static ObservableSpec qubit(const UnitVector3 &axis, std::size_t subsystem, std::string label);
    /// Validates Hermiticity and a spectrum within kSpectralTol of {-1, +1}.
    static ObservableSpec general(ComplexMatrix m, std::size_t subsystem, std::string label);

    /// (1 + outcome A) / 2; may be the zero matrix for a trivial observable.
    ComplexMatrix projector(int outcome) const;
};

/// Pseudo-probabilities over all joint outcomes of N dichotomic observables.
///
/// Outcome tuples are encoded as integers: bit (N-1-k) holds observable k, with +1 as 0
/// and -1 as 1, so observable 0 is the most significant bit.
struct Scheme {
    std::vector<ObservableSpec> observables;
    Prescription prescription = Prescription::kUnit;
    std::vector<std::size_t> subsystem_dims;
    std::vector<double> entries;

    std::size_t size() const {
        return observables.size();
    }
    /// Outcome of observable k (+1 or -1) inside the encoded tuple.
    int outcome(std::size_t index, std::size_t k) const;
    double entry(std::span<const int> outcomes) const;
    double total() const;
};

std::size_t encode_outcomes(std::span<const int> outcomes);
/// "+-+" style text for an encoded tuple of n outcomes.
std::string outcome_string(std::size_t index, std::size_t n);
/// Inverse of outcome_string; accepts ASCII '+'/'-' and the Unicode minus sign.
std::size_t parse_outcome_string(std::string_view text, std::size_t n);

/// Builds a scheme on `state`.
///
/// Subsystem dimensions are inferred when `subsystem_dims` is empty: a single subsystem
/// spans the whole state, more than one means qubits. Projectors on the same subsystem
/// enter that subsystem's pseudo-projection in observable order; the per-subsystem
/// operators are then tensored with subsystem 0 outermost.
Scheme build_scheme(
    const DensityMatrix &state,
    std::vector<ObservableSpec> observables,
    Prescription prescription = Prescription::kUnit,
    std::vector<std::size_t> subsystem_dims = {});

/// The operator whose expectation is entry `index` of a scheme with these observables.
ComplexMatrix scheme_operator(
    const std::vector<ObservableSpec> &observables,
    std::span<const std::size_t> subsystem_dims,
    Prescription prescription,
    std::size_t index);

Scheme marginalize(const Scheme &s, std::size_t drop_index);

struct NegativityReport {
    struct Entry {
        std::string outcomes;
        double value;
    };
    std::vector<Entry> negative_entries;
    double min_entry;
    std::string min_outcomes;
    bool nonclassical;
};

/// Verdict is min entry < -tol.
NegativityReport negativity_report(const Scheme &s, double tol = kSpectralTol);

/// Chains of equal outcomes, e.g. "A1=B1=~B2,A2=~B1".
///
/// Each chain requires its literals to agree, where a literal ~X stands for -X. Terms
/// name observables by label, or by zero-based index when no label matches.
struct EqualityPattern {
    struct Literal {
        std::size_t index;
        bool negated;
    };
    std::vector<std::vector<Literal>> chains;

    static EqualityPattern parse(std::string_view text, const std::vector<ObservableSpec> &observables);
    bool matches(const Scheme &s, std::size_t index) const;
};

double equality_sum(const Scheme &s, const EqualityPattern &pattern);
double equality_sum(const Scheme &s, std::string_view pattern);

}  // namespace pplab

#endif

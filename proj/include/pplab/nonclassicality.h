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

#ifndef PPLAB_NONCLASSICALITY_H
#define PPLAB_NONCLASSICALITY_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pplab/qubit_geometry.h"
#include "pplab/scheme.h"

namespace pplab {

/// Default margin used when turning a statistic into a verdict.
inline constexpr double kVerdictTol = 1e-10;

enum class VerdictRule {
    /// statistic < threshold - tol.
    kBelowThreshold,
    /// |statistic - threshold| > tol.
    kNonzero,
};

enum class Aggregate {
    /// The statistic is component 0.
    kSingle,
    /// The statistic is the largest component; below threshold means every one is.
    kMax,
};

struct LabeledValue {
    std::string label;
    double value;
};

/// One born x weak product in the decomposition of pseudo_probabilities[pp_index].
struct WeakTerm {
    std::string label;
    std::size_t pp_index;
    double weight;
    double born_factor;
    double weak_value;
    /// False when the born factor vanishes; the term then contributes 0.
    bool defined;

    double contribution() const {
        return defined ? weight * born_factor * weak_value : 0.0;
    }
};

/// coefficient x product of pseudo_probabilities[factors].
struct Monomial {
    double coefficient;
    std::vector<std::size_t> factors;
};

struct Component {
    std::string label;
    std::vector<Monomial> monomials;
};

struct Direction {
    std::string label;
    Vec3 vec;
};

struct TestInputs {
    std::string state_digest;
    std::size_t state_dim = 0;
    std::optional<double> alpha;
    std::vector<Direction> directions;
};

struct TestReport {
    std::string test;
    TestInputs inputs;
    std::vector<LabeledValue> pseudo_probabilities;
    std::vector<WeakTerm> weak_terms;
    std::vector<Component> components;
    Aggregate aggregate = Aggregate::kSingle;
    double statistic = 0;
    double threshold = 0;
    double tolerance = kVerdictTol;
    VerdictRule rule = VerdictRule::kBelowThreshold;
    bool verdict = false;
    std::optional<std::pair<double, double>> alpha_valid_range;
    bool alpha_in_range = true;
    /// The same statistic evaluated from Pauli (or operator) expectation values.
    double closed_form_statistic = 0;
    std::vector<LabeledValue> closed_forms;
    std::vector<std::string> flags;
    std::vector<std::string> notes;

    const LabeledValue &pp(std::string_view label) const;
    const LabeledValue &closed_form(std::string_view label) const;
    bool has_flag(std::string_view flag) const;
};

/// Evaluates the components from pseudo_probabilities; optionally returns each one.
double recompute_statistic(const TestReport &r, std::vector<double> *component_values = nullptr);
bool decide_verdict(double statistic, double threshold, double tol, VerdictRule rule);
/// Largest |sum of weak-term contributions - pseudo-probability| over entries that have terms.
double weak_term_residual(const TestReport &r);
/// Short hex digest of a matrix's entries.
std::string state_digest(const ComplexMatrix &m);

TestReport coherence_test(
    const DensityMatrix &state, const UnitVector3 &a1, const UnitVector3 &a2, double tol = kVerdictTol);

TestReport boolean_state_dep_test(
    const DensityMatrix &state, const UnitVector3 &a1, const UnitVector3 &a2, double tol = kVerdictTol);

TestReport boolean_state_indep_test(const UnitVector3 &a1, const UnitVector3 &a2, double tol = kVerdictTol);

TestReport distributivity_test(
    const DensityMatrix &state,
    const UnitVector3 &a1,
    const UnitVector3 &a2,
    const UnitVector3 &a3,
    double tol = kVerdictTol);

struct ChshObservables {
    ObservableSpec a1;
    ObservableSpec a2;
    ObservableSpec b1;
    ObservableSpec b2;
};

/// A1 = x, A2 = y, B1 = (x + y)/sqrt2, B2 = (x - y)/sqrt2.
ChshObservables default_chsh_observables();

/// A's act on subsystem 0, B's on subsystem 1; dimensions come from the observables.
TestReport chsh_test(const DensityMatrix &state, const ChshObservables &obs, double tol = kVerdictTol);

enum class LinearVariant { kI, kII };
enum class NonlinearVariant { kI, kII, kIII };

std::pair<double, double> alpha_range(LinearVariant v);
std::pair<double, double> alpha_range(NonlinearVariant v);

TestReport linear_ent_test(
    const DensityMatrix &state, const EntanglementGeometry &geom, LinearVariant variant, double tol = kVerdictTol);

TestReport nonlinear_ent_test(
    const DensityMatrix &state,
    const EntanglementGeometry &geom,
    NonlinearVariant variant,
    double tol = kVerdictTol);

struct DiscordOptions {
    AzimuthRule rule = AzimuthRule::kDefault;
    /// Second-qubit axes b_1, b_2; default to the first-qubit axes.
    std::optional<std::array<UnitVector3, 2>> b_axes;
};

TestReport discord_test(
    const DensityMatrix &state, double alpha, double tol = kVerdictTol, const DiscordOptions &options = {});

}  // namespace pplab

#endif

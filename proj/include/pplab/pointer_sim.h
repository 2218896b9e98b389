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

#ifndef PPLAB_POINTER_SIM_H
#define PPLAB_POINTER_SIM_H

#include <vector>

#include "pplab/operator_core.h"

namespace pplab {

/// Upper bound on grid_points^N x 2 amplitudes held by one simulation.
inline constexpr std::size_t kMaxPointerAmplitudes = std::size_t{1} << 24;
inline constexpr std::size_t kMaxPointers = 3;

/// Gaussian pointers psi(x) ~ exp(-x^2 / 2 sigma^2) coupled through H = g sum_i pi_i (x) p_i
/// for a duration t (hbar = 1).
struct PointerConfig {
    double sigma = 1.0;
    double g = 0.05;
    double t = 1.0;
    /// Power of two >= 32 per pointer axis; 0 picks 128 for up to two pointers and 64 for three.
    std::size_t grid_points = 0;
    /// Half the grid extent, in units of sigma; at least 6.
    double grid_halfwidth = 8.0;
    /// Repeat the run on a grid with half the spacing and report the relative change.
    bool estimate_convergence = true;

    void validate() const;
    std::size_t grid_points_for(std::size_t pointers) const;
};

struct PointerResult {
    /// <x_1 ... x_N> of the pointers, conditioned on the post-selection.
    double correlation;
    /// Re Tr(post Pi pre) / Tr(post pre) with Pi the symmetrized pseudo-projection.
    double pseudo_probability;
    /// correlation / (g t)^N.
    double ratio;
    /// Relative change of the correlation under grid refinement (0 if not computed).
    double convergence_estimate;
    double prediction;
    /// Largest deviation of the evolved joint-state norm from 1.
    double norm_error;
    std::size_t grid_points;
    std::size_t pointers;
};

/// Exact evolution on a momentum grid followed by post-selection of the qubit on `post`.
///
/// Throws PostSelectionImpossible when Tr(post pre) <= 1e-12 and ResourceError for more
/// than kMaxPointers pointers or more than kMaxPointerAmplitudes amplitudes.
PointerResult simulate_pointers(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg);

/// The (g t)^N coefficient of <x_1 ... x_N> in the weak-coupling expansion.
///
/// With kappa = g t the leading term is
///   (kappa/2)^N sum over subsets S of 1/(|S|! |T|!) sum over orderings of T and S of
///   Re Tr(pi_T post pi_S pre) / Tr(post pre),
/// where T is the complement of S. When post is proportional to the identity this is
/// kappa^N times the symmetrized pseudo-probability.
double leading_coefficient(
    const DensityMatrix &state, std::span<const Projector> projectors, const DensityMatrix &post);

/// leading_coefficient x (g t)^N. Accepts any number of pointers up to 8.
double perturbative_prediction(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg);

/// Re Tr(post Pi_sym pre) / Tr(post pre).
double conditioned_pseudo_probability(
    const DensityMatrix &state, std::span<const Projector> projectors, const DensityMatrix &post);

struct ProportionalityReport {
    std::vector<double> couplings;
    std::vector<double> correlations;
    /// Least-squares slope of correlation against (g t)^N through the origin.
    double fitted_slope;
    double predicted_slope;
    double pseudo_probability;
    /// |fitted - predicted| / |predicted|.
    double relative_deviation;
    bool sign_match;
    /// False when the pointer count exceeds kMaxPointers and the correlations come
    /// from perturbative_prediction.
    bool simulated;
};

ProportionalityReport proportionality_check(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg,
    const std::vector<double> &couplings);

}  // namespace pplab

#endif

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


#ifndef PPLAB_GAME_H
#define PPLAB_GAME_H

#include <array>
#include <vector>

#include "pplab/qubit_geometry.h"
#include "pplab/scheme.h"

namespace pplab {

/// Joint pseudo-probabilities of (sigma.m, sigma.n) in the order (++, --, +-, -+).
using Scheme4 = std::array<double, 4>;
using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Transition matrix for Larmor precession about z at unit frequency:
/// 1/4 [1 +- 2 cos t, 1 +- 2 sin t] with the sign pattern of the (++, --, +-, -+) ordering.
///
/// T(t1) T(t2) = T(t1 + t2). T(0) is the projector onto schemes whose (++, --) and
/// (+-, -+) pairs each sum to one half, which every qubit scheme of two orthogonal
/// observables satisfies; it acts as the identity there.
Matrix4 transition_matrix(double t);
Matrix4 multiply(const Matrix4 &a, const Matrix4 &b);

/// T(t) s0. Throws InvalidInput unless the entries sum to 1 within 1e-10.
Scheme4 evolve_scheme(const Scheme4 &s0, double t);

/// 1 - min entry: the largest sum of three entries.
double game_score(const Scheme4 &s);

/// m = (cos theta, sin theta, 0), n = (-sin theta, cos theta, 0).
std::array<UnitVector3, 2> game_observable_axes(double theta);

/// The (sigma.m, sigma.n) scheme of a qubit state, reordered to (++, --, +-, -+).
Scheme4 game_scheme(const DensityMatrix &qubit, double theta = 0);

/// rho(t) under H = -omega/2 sigma.axis.
DensityMatrix larmor_evolve(const DensityMatrix &qubit, const UnitVector3 &axis, double omega, double t);

struct TrajectoryPoint {
    double t;
    Scheme4 scheme;
    double score;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    /// Index of the first point with the highest score.
    std::size_t best = 0;
};

Trajectory evaluate_strategy(
    const BlochVector &bloch,
    const UnitVector3 &axis,
    double omega,
    const std::vector<double> &t_grid,
    double theta = 0);

/// n evenly spaced points from t_min to t_max inclusive.
std::vector<double> time_grid(double t_min, double t_max, std::size_t steps);

struct StrategyCandidate {
    Vec3 bloch;
    Vec3 axis;
    double t;
    double score;
};

/// Brute-force scan over pure initial states and Hamiltonian axes drawn from a
/// `resolution` x 2*`resolution` polar/azimuthal grid; returns the best candidate.
StrategyCandidate scan_strategies(
    std::size_t resolution, double omega, const std::vector<double> &t_grid, double theta = 0);

}  // namespace pplab

#endif

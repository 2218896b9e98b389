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


#include "pplab/game.h"

#include <cmath>
#include <numbers>

#include "pplab/errors.h"

namespace pplab {

Matrix4 transition_matrix(double t) {
    double c = 2 * std::cos(t);
    double s = 2 * std::sin(t);
    Matrix4 m{{
        {1 + c, 1 - c, 1 - s, 1 + s},
        {1 - c, 1 + c, 1 + s, 1 - s},
        {1 + s, 1 - s, 1 + c, 1 - c},
        {1 - s, 1 + s, 1 - c, 1 + c},
    }};
    for (auto &row : m) {
        for (double &v : row) {
            v *= 0.25;
        }
    }
    return m;
}

Matrix4 multiply(const Matrix4 &a, const Matrix4 &b) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t k = 0; k < 4; k++) {
            for (std::size_t j = 0; j < 4; j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

namespace {

void require_normalized(const Scheme4 &s) {
    double sum = 0;
    for (double v : s) {
        if (!std::isfinite(v)) {
            throw InvalidInput("scheme entries must be finite");
        }
        sum += v;
    }
    if (std::abs(sum - 1) > 1e-10) {
        throw InvalidInput("scheme entries must sum to 1");
    }
}

}  // namespace

Scheme4 evolve_scheme(const Scheme4 &s0, double t) {
    require_normalized(s0);
    if (!std::isfinite(t)) {
        throw InvalidInput("time must be finite");
    }
    Matrix4 m = transition_matrix(t);
    Scheme4 out{};
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t j = 0; j < 4; j++) {
            out[i] += m[i][j] * s0[j];
        }
    }
    return out;
}

double game_score(const Scheme4 &s) {
    require_normalized(s);
    double lo = s[0];
    for (double v : s) {
        lo = std::min(lo, v);
    }
    return 1 - lo;
}

std::array<UnitVector3, 2> game_observable_axes(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidInput("theta must be finite");
    }
    return {UnitVector3::normalized({std::cos(theta), std::sin(theta), 0}),
            UnitVector3::normalized({-std::sin(theta), std::cos(theta), 0})};
}

Scheme4 game_scheme(const DensityMatrix &qubit, double theta) {
    if (qubit.dim() != 2) {
        throw InvalidInput("game schemes are defined on a single qubit");
    }
    auto axes = game_observable_axes(theta);
    std::vector<ObservableSpec> obs{ObservableSpec::qubit(axes[0], 0, "m"), ObservableSpec::qubit(axes[1], 0, "n")};
    Scheme s = build_scheme(qubit, obs);
    // Encoded order is (++, +-, -+, --).
    return {s.entries[0], s.entries[3], s.entries[1], s.entries[2]};
}

DensityMatrix larmor_evolve(const DensityMatrix &qubit, const UnitVector3 &axis, double omega, double t) {
    if (qubit.dim() != 2) {
        throw InvalidInput("Larmor evolution acts on a single qubit");
    }
    if (!std::isfinite(omega) || !std::isfinite(t)) {
        throw InvalidInput("omega and t must be finite");
    }
    // U = exp(i omega t sigma.n / 2)
    double half = 0.5 * omega * t;
    ComplexMatrix u = ComplexMatrix::identity(2) * Complex{std::cos(half), 0} +
                      sigma_dot(axis) * Complex{0, std::sin(half)};
    ComplexMatrix rho = u * qubit.matrix() * u.adjoint();
    // Restore exact Hermiticity lost to rounding.
    rho = (rho + rho.adjoint()) * Complex{0.5, 0};
    return DensityMatrix(rho);
}

std::vector<double> time_grid(double t_min, double t_max, std::size_t steps) {
    if (steps == 0 || !std::isfinite(t_min) || !std::isfinite(t_max)) {
        throw InvalidInput("time grid needs at least one point and finite bounds");
    }
    if (steps == 1) {
        return {t_min};
    }
    if (t_max < t_min) {
        throw InvalidInput("time grid needs t_max >= t_min");
    }
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; i++) {
        out[i] = t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return out;
}

Trajectory evaluate_strategy(
    const BlochVector &bloch,
    const UnitVector3 &axis,
    double omega,
    const std::vector<double> &t_grid,
    double theta) {
    if (t_grid.empty()) {
        throw InvalidInput("evaluate_strategy needs at least one time point");
    }
    DensityMatrix rho0 = bloch_state(bloch);
    Trajectory out;
    for (double t : t_grid) {
        Scheme4 s = game_scheme(larmor_evolve(rho0, axis, omega, t), theta);
        double score = game_score(s);
        if (out.points.empty() || score > out.points[out.best].score) {
            out.best = out.points.size();
        }
        out.points.push_back({t, s, score});
    }
    return out;
}

StrategyCandidate scan_strategies(
    std::size_t resolution, double omega, const std::vector<double> &t_grid, double theta) {
    if (resolution < 2) {
        throw InvalidInput("scan resolution must be at least 2");
    }
    std::vector<Vec3> directions;
    for (std::size_t i = 0; i <= resolution; i++) {
        double polar = std::numbers::pi * static_cast<double>(i) / static_cast<double>(resolution);
        std::size_t azimuths = (i == 0 || i == resolution) ? 1 : 2 * resolution;
        for (std::size_t j = 0; j < azimuths; j++) {
            double az = std::numbers::pi * static_cast<double>(j) / static_cast<double>(resolution);
            directions.push_back({std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az), std::cos(polar)});
        }
    }
    StrategyCandidate best{{}, {}, 0, -1};
    for (const Vec3 &p : directions) {
        for (const Vec3 &n : directions) {
            Trajectory tr = evaluate_strategy(BlochVector(p), UnitVector3::normalized(n), omega, t_grid, theta);
            const TrajectoryPoint &pt = tr.points[tr.best];
            if (pt.score > best.score) {
                best = {p, n, pt.t, pt.score};
            }
        }
    }
    return best;
}

}  // namespace pplab

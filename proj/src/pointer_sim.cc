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

#include "pplab/pointer_sim.h"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>

#include "pplab/errors.h"
#include "pplab/pseudo_projection.h"
#include "pplab/weak_values.h"

namespace pplab {

void PointerConfig::validate() const {
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw InvalidInput("pointer width sigma must be positive");
    }
    if (!std::isfinite(g) || !std::isfinite(t)) {
        throw InvalidInput("coupling g and duration t must be finite");
    }
    if (!(grid_halfwidth >= 6) || !std::isfinite(grid_halfwidth)) {
        throw InvalidInput("grid half-width must be at least 6 sigma");
    }
    if (grid_points != 0 && (grid_points < 32 || (grid_points & (grid_points - 1)) != 0)) {
        throw InvalidInput("grid_points must be a power of two no smaller than 32");
    }
}

std::size_t PointerConfig::grid_points_for(std::size_t pointers) const {
    if (grid_points != 0) {
        return grid_points;
    }
    return pointers <= 2 ? 128 : 64;
}

namespace {

struct FftwFree {
    void operator()(fftw_complex *p) const {
        fftw_free(p);
    }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t n) {
    auto *p = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * n));
    if (p == nullptr) {
        throw ResourceError("could not allocate pointer grid");
    }
    return Buffer(p);
}

Complex &at(fftw_complex *buf, std::size_t i) {
    return reinterpret_cast<Complex *>(buf)[i];
}

void check_inputs(
    const DensityMatrix &state, std::span<const Projector> projectors, const DensityMatrix &post, std::size_t cap) {
    if (projectors.empty()) {
        throw InvalidInput("at least one pointer projector required");
    }
    if (projectors.size() > cap) {
        throw ResourceError("too many pointers for this operation");
    }
    if (state.dim() != 2 || post.dim() != 2) {
        throw InvalidInput("pointer models act on a single qubit");
    }
    for (const Projector &p : projectors) {
        if (p.dim() != 2) {
            throw InvalidInput("pointer projectors must be 2x2");
        }
    }
    if (!((post.matrix() * state.matrix()).trace().real() > kMinOverlap)) {
        throw PostSelectionImpossible("post-selection overlap Tr(post pre) vanishes");
    }
}

struct GridRun {
    double correlation;
    double norm_error;
};

GridRun run_grid(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg,
    std::size_t n) {
    const std::size_t dims = projectors.size();
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; d++) {
        total *= n;
    }
    if (total * 2 > kMaxPointerAmplitudes) {
        throw ResourceError("pointer grid exceeds the amplitude budget");
    }

    const double half = cfg.grid_halfwidth * cfg.sigma;
    const double dx = 2 * half / static_cast<double>(n);
    std::vector<double> x(n);
    std::vector<double> k(n);
    std::vector<double> phi(n);
    double phi_norm = 0;
    for (std::size_t j = 0; j < n; j++) {
        x[j] = -half + static_cast<double>(j) * dx;
        long m = j < n / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
        k[j] = 2 * std::numbers::pi * static_cast<double>(m) / (static_cast<double>(n) * dx);
        phi[j] = std::exp(-x[j] * x[j] / (2 * cfg.sigma * cfg.sigma));
        phi_norm += phi[j] * phi[j];
    }
    double phi_scale = 1 / std::sqrt(phi_norm);
    for (double &v : phi) {
        v *= phi_scale;
    }

    std::vector<std::size_t> digits(dims);
    auto decode = [&](std::size_t index) {
        for (std::size_t d = dims; d-- > 0;) {
            digits[d] = index % n;
            index /= n;
        }
    };

    Buffer pointer = allocate(total);
    for (std::size_t i = 0; i < total; i++) {
        decode(i);
        double v = 1;
        for (std::size_t d = 0; d < dims; d++) {
            v *= phi[digits[d]];
        }
        at(pointer.get(), i) = v;
    }

    std::vector<int> shape(dims, static_cast<int>(n));
    fftw_plan forward =
        fftw_plan_dft(static_cast<int>(dims), shape.data(), pointer.get(), pointer.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(forward);
    fftw_destroy_plan(forward);

    std::array<Buffer, 4> psi;  // psi[2 * a + s]: input basis state a, output qubit component s.
    for (Buffer &b : psi) {
        b = allocate(total);
    }
    const double kappa = cfg.g * cfg.t;
    std::vector<ComplexMatrix> pis;
    for (const Projector &p : projectors) {
        pis.push_back(p.matrix());
    }
    for (std::size_t i = 0; i < total; i++) {
        decode(i);
        Complex m00{0, 0};
        Complex m01{0, 0};
        Complex m11{0, 0};
        for (std::size_t d = 0; d < dims; d++) {
            double w = kappa * k[digits[d]];
            m00 += w * pis[d](0, 0);
            m01 += w * pis[d](0, 1);
            m11 += w * pis[d](1, 1);
        }
        double m0 = 0.5 * (m00.real() + m11.real());
        double mz = 0.5 * (m00.real() - m11.real());
        double mx = m01.real();
        double my = -m01.imag();
        double r = std::sqrt(mx * mx + my * my + mz * mz);
        double sinc = r > 1e-300 ? std::sin(r) / r : 1.0;
        Complex phase = std::polar(1.0, -m0);
        Complex cr{std::cos(r), 0};
        Complex mi{0, -sinc};
        // exp(-i M) = e^{-i m0} (cos r - i sin r (m . sigma) / r)
        Complex u00 = phase * (cr + mi * mz);
        Complex u11 = phase * (cr - mi * mz);
        Complex u01 = phase * mi * Complex{mx, -my};
        Complex u10 = phase * mi * Complex{mx, my};
        Complex f = at(pointer.get(), i);
        at(psi[0].get(), i) = u00 * f;
        at(psi[1].get(), i) = u10 * f;
        at(psi[2].get(), i) = u01 * f;
        at(psi[3].get(), i) = u11 * f;
    }
    pointer.reset();

    fftw_plan backward =
        fftw_plan_dft(static_cast<int>(dims), shape.data(), psi[0].get(), psi[0].get(), FFTW_BACKWARD, FFTW_ESTIMATE);
    for (Buffer &b : psi) {
        fftw_execute_dft(backward, b.get(), b.get());
    }
    fftw_destroy_plan(backward);
    const double inv_total = 1 / static_cast<double>(total);

    std::array<Complex, 16> moment{};
    std::array<Complex, 16> overlap{};
    std::array<double, 2> norms{0, 0};
    for (std::size_t i = 0; i < total; i++) {
        decode(i);
        double xs = 1;
        for (std::size_t d = 0; d < dims; d++) {
            xs *= x[digits[d]];
        }
        std::array<Complex, 4> v;
        for (std::size_t c = 0; c < 4; c++) {
            v[c] = at(psi[c].get(), i) * inv_total;
        }
        for (std::size_t p = 0; p < 4; p++) {
            Complex cp = std::conj(v[p]);
            for (std::size_t q = 0; q < 4; q++) {
                Complex prod = cp * v[q];
                overlap[4 * p + q] += prod;
                moment[4 * p + q] += prod * xs;
            }
        }
        norms[0] += std::norm(v[0]) + std::norm(v[1]);
        norms[1] += std::norm(v[2]) + std::norm(v[3]);
    }

    const ComplexMatrix &rho = state.matrix();
    const ComplexMatrix &e = post.matrix();
    Complex num{0, 0};
    Complex den{0, 0};
    for (std::size_t a = 0; a < 2; a++) {
        for (std::size_t b = 0; b < 2; b++) {
            for (std::size_t s = 0; s < 2; s++) {
                for (std::size_t t = 0; t < 2; t++) {
                    Complex w = rho(b, a) * e(s, t);
                    num += w * moment[4 * (2 * a + s) + (2 * b + t)];
                    den += w * overlap[4 * (2 * a + s) + (2 * b + t)];
                }
            }
        }
    }
    if (!(std::abs(den) > kMinOverlap)) {
        throw PostSelectionImpossible("post-selected pointer state has vanishing norm");
    }
    return GridRun{(num / den).real(), std::max(std::abs(norms[0] - 1), std::abs(norms[1] - 1))};
}

}  // namespace

double conditioned_pseudo_probability(
    const DensityMatrix &state, std::span<const Projector> projectors, const DensityMatrix &post) {
    check_inputs(state, projectors, post, 8);
    std::vector<ComplexMatrix> mats;
    for (const Projector &p : projectors) {
        mats.push_back(p.matrix());
    }
    ComplexMatrix pi = symmetrized_pp_matrix(mats);
    double overlap = (post.matrix() * state.matrix()).trace().real();
    return (post.matrix() * pi * state.matrix()).trace().real() / overlap;
}

double leading_coefficient(
    const DensityMatrix &state, std::span<const Projector> projectors, const DensityMatrix &post) {
    check_inputs(state, projectors, post, 8);
    const std::size_t n = projectors.size();
    const ComplexMatrix &rho = state.matrix();
    const ComplexMatrix &e = post.matrix();
    double overlap = (e * rho).trace().real();
    std::vector<double> factorial(n + 1, 1.0);
    for (std::size_t j = 1; j <= n; j++) {
        factorial[j] = factorial[j - 1] * static_cast<double>(j);
    }

    auto ordered_products = [&](const std::vector<std::size_t> &members) {
        std::vector<ComplexMatrix> out;
        std::vector<std::size_t> perm = members;
        std::sort(perm.begin(), perm.end());
        do {
            ComplexMatrix m = ComplexMatrix::identity(2);
            for (std::size_t j : perm) {
                m = m * projectors[j].matrix();
            }
            out.push_back(std::move(m));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    };

    double total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); mask++) {
        std::vector<std::size_t> s_members;
        std::vector<std::size_t> t_members;
        for (std::size_t j = 0; j < n; j++) {
            ((mask >> j) & 1 ? s_members : t_members).push_back(j);
        }
        std::vector<ComplexMatrix> left = ordered_products(t_members);
        std::vector<ComplexMatrix> right = ordered_products(s_members);
        double sum = 0;
        for (const ComplexMatrix &l : left) {
            ComplexMatrix le = l * e;
            for (const ComplexMatrix &r : right) {
                sum += (le * r * rho).trace().real();
            }
        }
        total += sum / (factorial[s_members.size()] * factorial[t_members.size()]);
    }
    return total / std::pow(2.0, static_cast<double>(n)) / overlap;
}

double perturbative_prediction(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg) {
    cfg.validate();
    double kappa = cfg.g * cfg.t;
    return leading_coefficient(state, projectors, post) * std::pow(kappa, static_cast<double>(projectors.size()));
}

PointerResult simulate_pointers(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg) {
    cfg.validate();
    check_inputs(state, projectors, post, kMaxPointers);
    const std::size_t dims = projectors.size();
    const std::size_t n = cfg.grid_points_for(dims);
    GridRun base = run_grid(state, projectors, post, cfg, n);

    double convergence = 0;
    if (cfg.estimate_convergence) {
        std::size_t refined_total = 1;
        for (std::size_t d = 0; d < dims; d++) {
            refined_total *= 2 * n;
        }
        std::size_t other = refined_total * 2 <= kMaxPointerAmplitudes ? 2 * n : n / 2;
        if (other >= 32) {
            GridRun alt = run_grid(state, projectors, post, cfg, other);
            double scale = std::max(std::abs(base.correlation), std::abs(alt.correlation));
            convergence = scale > 0 ? std::abs(alt.correlation - base.correlation) / scale : 0.0;
        }
    }

    double kappa_n = std::pow(cfg.g * cfg.t, static_cast<double>(dims));
    return PointerResult{
        base.correlation,
        conditioned_pseudo_probability(state, projectors, post),
        kappa_n != 0 ? base.correlation / kappa_n : 0.0,
        convergence,
        perturbative_prediction(state, projectors, post, cfg),
        base.norm_error,
        n,
        dims};
}

ProportionalityReport proportionality_check(
    const DensityMatrix &state,
    std::span<const Projector> projectors,
    const DensityMatrix &post,
    const PointerConfig &cfg,
    const std::vector<double> &couplings) {
    if (couplings.size() < 3) {
        throw InvalidInput("proportionality_check needs at least 3 coupling values");
    }
    cfg.validate();
    const bool simulate = projectors.size() <= kMaxPointers;
    const double power = static_cast<double>(projectors.size());
    ProportionalityReport rep;
    rep.couplings = couplings;
    rep.simulated = simulate;
    double sxy = 0;
    double sxx = 0;
    for (double g : couplings) {
        PointerConfig c = cfg;
        c.g = g;
        c.estimate_convergence = false;
        double y = simulate ? simulate_pointers(state, projectors, post, c).correlation
                            : perturbative_prediction(state, projectors, post, c);
        double xv = std::pow(g * cfg.t, power);
        rep.correlations.push_back(y);
        sxy += xv * y;
        sxx += xv * xv;
    }
    if (!(sxx > 0)) {
        throw InvalidInput("proportionality_check needs nonzero couplings");
    }
    rep.fitted_slope = sxy / sxx;
    rep.predicted_slope = leading_coefficient(state, projectors, post);
    rep.pseudo_probability = conditioned_pseudo_probability(state, projectors, post);
    rep.relative_deviation = rep.predicted_slope != 0
                                 ? std::abs(rep.fitted_slope - rep.predicted_slope) / std::abs(rep.predicted_slope)
                                 : std::abs(rep.fitted_slope);
    auto sign = [](double v) { return (v > 0) - (v < 0); };
    rep.sign_match = sign(rep.fitted_slope) == sign(rep.pseudo_probability);
    return rep;
}

}  // namespace pplab

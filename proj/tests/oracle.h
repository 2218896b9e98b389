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


// Test-only reference routines. Everything here works on plain row-major arrays with
// explicit loops and shares no code with the library beyond conversion helpers.

#ifndef PPLAB_TESTS_ORACLE_H
#define PPLAB_TESTS_ORACLE_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "pplab/operator_core.h"
#include "pplab/qubit_geometry.h"

namespace oracle {

using C = std::complex<double>;

struct Mat {
    std::size_t n = 0;
    std::vector<C> a;

    explicit Mat(std::size_t dim = 0) : n(dim), a(dim * dim) {
    }
    C &operator()(std::size_t r, std::size_t c) {
        return a[r * n + c];
    }
    C operator()(std::size_t r, std::size_t c) const {
        return a[r * n + c];
    }
};

inline Mat eye(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

inline Mat mul(const Mat &x, const Mat &y) {
    Mat m(x.n);
    for (std::size_t i = 0; i < x.n; i++) {
        for (std::size_t j = 0; j < x.n; j++) {
            C s = 0;
            for (std::size_t k = 0; k < x.n; k++) {
                s += x(i, k) * y(k, j);
            }
            m(i, j) = s;
        }
    }
    return m;
}

inline Mat add(const Mat &x, const Mat &y, C wy = 1) {
    Mat m(x.n);
    for (std::size_t i = 0; i < x.a.size(); i++) {
        m.a[i] = x.a[i] + wy * y.a[i];
    }
    return m;
}

inline Mat scale(const Mat &x, C w) {
    Mat m(x.n);
    for (std::size_t i = 0; i < x.a.size(); i++) {
        m.a[i] = w * x.a[i];
    }
    return m;
}

inline Mat dagger(const Mat &x) {
    Mat m(x.n);
    for (std::size_t i = 0; i < x.n; i++) {
        for (std::size_t j = 0; j < x.n; j++) {
            m(i, j) = std::conj(x(j, i));
        }
    }
    return m;
}

inline C trace(const Mat &x) {
    C s = 0;
    for (std::size_t i = 0; i < x.n; i++) {
        s += x(i, i);
    }
    return s;
}

inline Mat kron(const Mat &x, const Mat &y) {
    Mat m(x.n * y.n);
    for (std::size_t i = 0; i < x.n; i++) {
        for (std::size_t j = 0; j < x.n; j++) {
            for (std::size_t k = 0; k < y.n; k++) {
                for (std::size_t l = 0; l < y.n; l++) {
                    m(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
                }
            }
        }
    }
    return m;
}

inline double max_diff(const Mat &x, const Mat &y) {
    double d = 0;
    for (std::size_t i = 0; i < x.a.size(); i++) {
        d = std::max(d, std::abs(x.a[i] - y.a[i]));
    }
    return d;
}

/// Hermitian part (X + X^dagger) / 2.
inline Mat herm(const Mat &x) {
    return scale(add(x, dagger(x)), 0.5);
}

inline Mat sx() {
    Mat m(2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    return m;
}
inline Mat sy() {
    Mat m(2);
    m(0, 1) = C(0, -1);
    m(1, 0) = C(0, 1);
    return m;
}
inline Mat sz() {
    Mat m(2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return m;
}

inline Mat sdot(double x, double y, double z) {
    return add(add(scale(sx(), x), scale(sy(), y)), scale(sz(), z));
}

/// (1 + s sigma.n) / 2.
inline Mat qproj(double x, double y, double z, int s = +1) {
    return scale(add(eye(2), sdot(x, y, z), static_cast<double>(s)), 0.5);
}

inline Mat bloch(double x, double y, double z) {
    return scale(add(eye(2), sdot(x, y, z)), 0.5);
}

/// (1 - eta sigma.sigma) / 4.
inline Mat werner(double eta) {
    Mat ss = add(add(kron(sx(), sx()), kron(sy(), sy())), kron(sz(), sz()));
    return scale(add(eye(4), ss, -eta), 0.25);
}

inline double expect(const Mat &rho, const Mat &op) {
    return trace(mul(rho, op)).real();
}

/// Average of the Hermitian parts of all n! ordered products.
inline Mat symmetrized_all_permutations(const std::vector<Mat> &ps) {
    std::vector<std::size_t> perm(ps.size());
    std::iota(perm.begin(), perm.end(), 0);
    Mat acc(ps[0].n);
    double count = 0;
    do {
        Mat prod = eye(ps[0].n);
        for (std::size_t i : perm) {
            prod = mul(prod, ps[i]);
        }
        acc = add(acc, herm(prod));
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return scale(acc, 1 / count);
}

inline Mat unit_pp(const std::vector<Mat> &ps) {
    Mat prod = eye(ps[0].n);
    for (const Mat &p : ps) {
        prod = mul(prod, p);
    }
    return herm(prod);
}

inline pplab::ComplexMatrix to_lib(const Mat &m) {
    return pplab::ComplexMatrix(m.n, m.n, m.a);
}

inline Mat from_lib(const pplab::ComplexMatrix &m) {
    Mat out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

inline pplab::DensityMatrix state(const Mat &m) {
    return pplab::DensityMatrix(to_lib(m));
}

inline pplab::Projector projector(const Mat &m) {
    return pplab::Projector(to_lib(m));
}

/// Fixed-seed generator for reproducible property tests.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 20261019) : gen_(seed) {
    }

    double normal() {
        return normal_(gen_);
    }
    double uniform(double lo = 0, double hi = 1) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
    }

    std::vector<C> complex_vector(std::size_t n) {
        std::vector<C> v(n);
        double norm = 0;
        for (C &z : v) {
            z = C(normal(), normal());
            norm += std::norm(z);
        }
        for (C &z : v) {
            z /= std::sqrt(norm);
        }
        return v;
    }

    pplab::Vec3 unit_vec() {
        double x = normal();
        double y = normal();
        double z = normal();
        double n = std::sqrt(x * x + y * y + z * z);
        return {x / n, y / n, z / n};
    }

    pplab::Vec3 bloch_vec() {
        pplab::Vec3 u = unit_vec();
        double r = std::cbrt(uniform());
        return {u.x * r, u.y * r, u.z * r};
    }

    /// G G^dagger / Tr with G an n x rank Ginibre matrix.
    Mat ginibre_state(std::size_t n, std::size_t rank = 0) {
        if (rank == 0) {
            rank = n;
        }
        std::vector<C> g(n * rank);
        for (C &z : g) {
            z = C(normal(), normal());
        }
        Mat m(n);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                C s = 0;
                for (std::size_t k = 0; k < rank; k++) {
                    s += g[i * rank + k] * std::conj(g[j * rank + k]);
                }
                m(i, j) = s;
            }
        }
        return scale(m, 1 / trace(m).real());
    }

    Mat rank_one_projector(std::size_t n) {
        std::vector<C> v = complex_vector(n);
        Mat m(n);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                m(i, j) = v[i] * std::conj(v[j]);
            }
        }
        return m;
    }

    /// Projector onto the span of `rank` random vectors, via Gram-Schmidt.
    Mat projector(std::size_t n, std::size_t rank) {
        std::vector<std::vector<C>> basis;
        while (basis.size() < rank) {
            std::vector<C> v = complex_vector(n);
            for (const auto &b : basis) {
                C ov = 0;
                for (std::size_t i = 0; i < n; i++) {
                    ov += std::conj(b[i]) * v[i];
                }
                for (std::size_t i = 0; i < n; i++) {
                    v[i] -= ov * b[i];
                }
            }
            double norm = 0;
            for (C z : v) {
                norm += std::norm(z);
            }
            for (C &z : v) {
                z /= std::sqrt(norm);
            }
            basis.push_back(v);
        }
        Mat m(n);
        for (const auto &b : basis) {
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = 0; j < n; j++) {
                    m(i, j) += b[i] * std::conj(b[j]);
                }
            }
        }
        return m;
    }

    /// Convex mixture of k product states of two qubits.
    Mat separable_state(std::size_t k) {
        Mat m(4);
        double total = 0;
        std::vector<double> w(k);
        for (double &x : w) {
            x = uniform(0.05, 1);
            total += x;
        }
        for (std::size_t i = 0; i < k; i++) {
            pplab::Vec3 p = bloch_vec();
            pplab::Vec3 q = bloch_vec();
            m = add(m, kron(bloch(p.x, p.y, p.z), bloch(q.x, q.y, q.z)), w[i] / total);
        }
        return m;
    }

    /// sum_k p_k |e_k><e_k| (x) rho_k with {e_k} an orthonormal basis of the first qubit.
    Mat classical_quantum_state(std::size_t k) {
        pplab::Vec3 u = unit_vec();
        double p0 = k == 1 ? 1.0 : uniform();
        Mat m(4);
        for (std::size_t i = 0; i < k; i++) {
            int s = i == 0 ? +1 : -1;
            pplab::Vec3 q = bloch_vec();
            double w = i == 0 ? p0 : 1 - p0;
            m = add(m, kron(qproj(u.x, u.y, u.z, s), bloch(q.x, q.y, q.z)), w);
        }
        return m;
    }

   private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace oracle

#endif

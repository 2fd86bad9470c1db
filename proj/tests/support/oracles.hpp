// Copyright 2026 The gaplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only reference computations. Nothing here calls the code path it is
// used to check.

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gaplab/hilbert.hpp"
#include "gaplab/randomness.hpp"

namespace gaplab::testing {

/// Random density matrix: Haar eigenbasis, flat-Dirichlet spectrum.
inline DensityMatrix random_density(RngStream &rng, Index d) {
    std::vector<double> p(static_cast<std::size_t>(d));
    double total = 0.0;
    for (auto &x : p) {
        x = rng.exponential();
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }
    return DensityMatrix::from_spectrum(p, haar_unitary(rng, d).matrix());
}

/// Random (unnormalized) Gaussian bipartite state, normalized.
inline BipartiteState random_bipartite(RngStream &rng, Index d1, Index d2) {
    CVector v(d1 * d2);
    for (Index i = 0; i < v.size(); ++i) {
        v[i] = {rng.normal(), rng.normal()};
    }
    return {d1, d2, StateVector::normalized(v)};
}

/// Partial trace by explicit index loops.
inline CMatrix partial_trace_loops(const CVector &amps, Index d1, Index d2) {
    CMatrix out = CMatrix::Zero(d1, d1);
    for (Index a = 0; a < d1; ++a) {
        for (Index b = 0; b < d1; ++b) {
            for (Index j = 0; j < d2; ++j) {
                out(a, b) += amps[a * d2 + j] * std::conj(amps[b * d2 + j]);
            }
        }
    }
    return out;
}

/// Trace norm of a Hermitian matrix as the sum of |eigenvalues|.
inline double hermitian_trace_norm(const CMatrix &h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

/// Bisection for a decreasing function crossing zero on [lo, hi].
inline double bisect_decreasing(const std::function<double(double)> &g,
                                double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// GA(rho) by rejection from G(rho): draw a batch of G samples by whitening
/// i.i.d. Gaussians with rho^{1/2}, then accept psi with probability
/// ||psi||^2 / C, C the largest ||psi||^2 in the batch.
inline std::vector<double> rejection_ga_norms_sq(RngStream &rng,
                                                 const DensityMatrix &rho,
                                                 std::size_t wanted) {
    const Index d = rho.dim();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
    const RVector root_values = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const CMatrix root = solver.eigenvectors() *
                         root_values.cast<Complex>().asDiagonal() *
                         solver.eigenvectors().adjoint();
    std::vector<double> accepted;
    while (accepted.size() < wanted) {
        const std::size_t batch = 4 * wanted;
        std::vector<double> norms(batch);
        double ceiling = 0.0;
        for (auto &n : norms) {
            CVector z(d);
            for (Index i = 0; i < d; ++i) {
                z[i] = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
            }
            n = (root * z).squaredNorm();
            ceiling = std::max(ceiling, n);
        }
        for (double n : norms) {
            if (accepted.size() < wanted && rng.uniform() < n / ceiling) {
                accepted.push_back(n);
            }
        }
    }
    return accepted;
}

/// Entrywise mean of |psi><psi| without Eigen's rank update.
inline CMatrix outer_mean(const std::vector<CVector> &samples) {
    const Index d = samples.front().size();
    CMatrix out = CMatrix::Zero(d, d);
    for (const auto &s : samples) {
        for (Index a = 0; a < d; ++a) {
            for (Index b = 0; b < d; ++b) {
                out(a, b) += s[a] * std::conj(s[b]);
            }
        }
    }
    return out / static_cast<double>(samples.size());
}

inline double exp1_cdf(double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); }

} // namespace gaplab::testing

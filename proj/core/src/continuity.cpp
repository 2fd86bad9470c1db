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

#include <algorithm>
#include <cmath>

#include "gaplab/parallel.hpp"
#include "gaplab/stats.hpp"
#include "gaplab/typicality.hpp"

namespace gaplab {

namespace {

/// Uniform point of the probability simplex in dimension n.
std::vector<double> dirichlet_flat(RngStream &rng, std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto &x : w) {
        x = rng.exponential();
        total += x;
    }
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

DensityMatrix with_haar_basis(RngStream &rng, const std::vector<double> &spectrum) {
    const auto d = static_cast<Index>(spectrum.size());
    return DensityMatrix::from_spectrum(spectrum, haar_unitary(rng, d).matrix());
}

/// Spectrum in D_{>=gamma}: gamma + (1 - d gamma) * flat Dirichlet.
std::vector<double> spectrum_above(RngStream &rng, Index d, double gamma) {
    auto w = dirichlet_flat(rng, static_cast<std::size_t>(d));
    const double free_mass = 1.0 - static_cast<double>(d) * gamma;
    for (auto &x : w) {
        x = gamma + free_mass * x;
    }
    return w;
}

/// As spectrum_above but with one eigenvalue pinned to gamma.
std::vector<double> spectrum_on_boundary(RngStream &rng, Index d, double gamma) {
    std::vector<double> w{gamma};
    if (d > 1) {
        const auto rest = dirichlet_flat(rng, static_cast<std::size_t>(d - 1));
        const double free_mass = 1.0 - static_cast<double>(d) * gamma;
        for (double x : rest) {
            w.push_back(gamma + free_mass * x);
        }
    }
    return w;
}

} // namespace

ContinuityPair compare_gap_measures(const DensityMatrix &rho,
                                    const DensityMatrix &omega,
                                    std::span<const CVector> probes,
                                    const TestFunction &f) {
    if (rho.dim() != omega.dim()) {
        throw DimensionError("compare_gap_measures: dimensions differ");
    }
    const GapSphereDensity density_rho(rho);
    const GapSphereDensity density_omega(omega);
    double sup_gap = 0.0;
    for (Index i = 0; i < rho.dim(); ++i) {
        for (const CMatrix *vectors :
             {&rho.spectrum().vectors, &omega.spectrum().vectors}) {
            const CVector psi = vectors->col(i);
            sup_gap = std::max(
                sup_gap, std::abs(density_rho(psi) - density_omega(psi)));
        }
    }
    double weighted = 0.0;
    for (const auto &psi : probes) {
        const double gap = density_rho(psi) - density_omega(psi);
        sup_gap = std::max(sup_gap, std::abs(gap));
        weighted += gap * f(psi);
    }
    ContinuityPair pair{};
    pair.trace_distance = trace_norm(rho.matrix() - omega.matrix());
    pair.sup_density_gap = sup_gap;
    pair.expectation_gap =
        probes.empty() ? 0.0 : std::abs(weighted) / static_cast<double>(probes.size());
    pair.omega_min_eigenvalue = omega.min_eigenvalue();
    return pair;
}

ContinuityProbeResult continuity_probe(const RngStream &root, Index d,
                                       double gamma, std::size_t n_pairs,
                                       std::size_t sphere_points,
                                       const std::optional<TestFunction> &f,
                                       const ExperimentOptions &options) {
    if (d < 1) {
        throw DomainError("continuity_probe: dimension must be >= 1");
    }
    if (!(gamma > 0.0 && gamma < 1.0 / static_cast<double>(d))) {
        throw DomainError("continuity_probe: need 0 < gamma < 1/d");
    }
    if (n_pairs == 0 || sphere_points == 0) {
        throw DomainError("continuity_probe: need pairs and probe points");
    }
    const TestFunction observable =
        f ? *f : TestFunction::cap_indicator(CVector::Unit(d, 0), 0.5);

    // Probe points are shared by all pairs.
    RngStream probe_rng = root.split(kReferenceStream);
    std::vector<CVector> probes;
    probes.reserve(sphere_points);
    for (std::size_t s = 0; s < sphere_points; ++s) {
        probes.push_back(uniform_sphere(probe_rng, d).amplitudes());
    }

    ContinuityProbeResult result;
    result.dim = d;
    result.gamma = gamma;
    result.pairs.resize(n_pairs);
    parallel_for(
        n_pairs,
        [&](std::size_t t) {
            RngStream rng = root.split(t);
            const DensityMatrix omega =
                with_haar_basis(rng, spectrum_on_boundary(rng, d, gamma));
            const DensityMatrix sigma =
                with_haar_basis(rng, spectrum_above(rng, d, gamma));
            const double mix = std::pow(10.0, -3.0 * rng.uniform());
            const DensityMatrix rho(
                (1.0 - mix) * omega.matrix() + mix * sigma.matrix());

            result.pairs[t] = compare_gap_measures(rho, omega, probes, observable);
        },
        options.workers);

    std::vector<double> distances;
    std::vector<double> gaps;
    std::vector<double> ratios;
    for (const auto &pair : result.pairs) {
        distances.push_back(pair.trace_distance);
        gaps.push_back(pair.sup_density_gap);
        if (pair.trace_distance > 0.0) {
            ratios.push_back(pair.sup_density_gap / pair.trace_distance);
        }
    }
    result.spearman = n_pairs >= 2 ? stats::spearman(distances, gaps) : 0.0;
    result.median_gap_ratio = ratios.empty() ? 0.0 : stats::median(ratios);
    return result;
}

} // namespace gaplab

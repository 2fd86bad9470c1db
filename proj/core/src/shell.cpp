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
#include <string>

#include "gaplab/typicality.hpp"

namespace gaplab {

Shell::Shell(Index d1, Index d2, CMatrix basis)
    : d1_(d1), d2_(d2), basis_(std::move(basis)) {
    if (d1 <= 0 || d2 <= 0 || basis_.rows() != d1 * d2) {
        throw DimensionError("Shell: basis rows must equal d1 * d2");
    }
    // Validates orthonormality (BasisError) and 1 <= dR <= d1 d2.
    (void)OrthonormalSystem(basis_);
}

DensityMatrix Shell::reduced_state() const {
    CMatrix sum = CMatrix::Zero(d1_, d1_);
    for (Index k = 0; k < basis_.cols(); ++k) {
        const Eigen::Map<const AmplitudeGrid> grid(basis_.col(k).data(), d1_,
                                                   d2_);
        sum.noalias() += grid * grid.adjoint();
    }
    return DensityMatrix(sum / static_cast<double>(basis_.cols()));
}

BipartiteState Shell::sample_uniform(RngStream &rng) const {
    CVector coordinates(basis_.cols());
    for (Index k = 0; k < coordinates.size(); ++k) {
        coordinates[k] = sample_complex_gaussian(rng, 1.0);
    }
    coordinates.normalize();
    return {d1_, d2_, StateVector::normalized(basis_ * coordinates)};
}

Shell random_subspace(RngStream &rng, Index d1, Index d2, Index dR) {
    if (d1 <= 0 || d2 <= 0 || dR < 1 || dR > d1 * d2) {
        throw DomainError("random_subspace: need 1 <= dR <= d1 * d2, got dR=" +
                          std::to_string(dR));
    }
    return {d1, d2, random_ons(rng, d1 * d2, dR).matrix()};
}

DensityMatrix MicrocanonicalShell::reduced_state() const {
    std::vector<double> p(occupation.size());
    const auto total = static_cast<double>(member_pairs.size());
    for (std::size_t i = 0; i < occupation.size(); ++i) {
        p[i] = static_cast<double>(occupation[i]) / total;
    }
    return DensityMatrix::diagonal(p);
}

MicrocanonicalShell microcanonical_shell(std::span<const double> system_levels,
                                         std::span<const double> bath_levels,
                                         double energy, double delta_energy) {
    if (!(delta_energy > 0.0)) {
        throw DomainError("microcanonical_shell: window width must be > 0");
    }
    if (system_levels.empty() || bath_levels.empty()) {
        throw DomainError("microcanonical_shell: empty spectrum");
    }
    const auto d1 = static_cast<Index>(system_levels.size());
    const auto d2 = static_cast<Index>(bath_levels.size());
    const double low = energy;
    const double high = energy + delta_energy;
    // Absorbs rounding in levels produced by arithmetic (e.g. linspace).
    const double slack = 1e-12 * std::max({1.0, std::abs(low), std::abs(high)});

    std::vector<std::pair<Index, Index>> pairs;
    std::vector<std::size_t> occupation(system_levels.size(), 0);
    for (Index i = 0; i < d1; ++i) {
        for (Index j = 0; j < d2; ++j) {
            const double total = system_levels[static_cast<std::size_t>(i)] +
                                 bath_levels[static_cast<std::size_t>(j)];
            if (total >= low - slack && total <= high + slack) {
                pairs.emplace_back(i, j);
                ++occupation[static_cast<std::size_t>(i)];
            }
        }
    }
    if (pairs.empty()) {
        throw EmptyShellError("microcanonical_shell: no eigenvalue in [" +
                              std::to_string(low) + ", " +
                              std::to_string(high) + "]");
    }
    CMatrix basis = CMatrix::Zero(d1 * d2, static_cast<Index>(pairs.size()));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        basis(pairs[k].first * d2 + pairs[k].second, static_cast<Index>(k)) = 1.0;
    }
    return MicrocanonicalShell{
        {system_levels.begin(), system_levels.end()},
        {bath_levels.begin(), bath_levels.end()},
        low,
        high,
        std::move(pairs),
        std::move(occupation),
        Shell(d1, d2, std::move(basis)),
    };
}

std::vector<double> evenly_spaced_levels(std::size_t n, double low, double high) {
    if (n == 0) {
        throw DomainError("evenly_spaced_levels: need at least one level");
    }
    std::vector<double> levels(n);
    if (n == 1) {
        levels[0] = low;
        return levels;
    }
    const double step = (high - low) / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        levels[j] = low + step * static_cast<double>(j);
    }
    return levels;
}

BetaFit fit_beta(std::span<const double> system_levels,
                 const DensityMatrix &target, double beta_max) {
    if (static_cast<Index>(system_levels.size()) != target.dim()) {
        throw DimensionError("fit_beta: level count differs from target size");
    }
    const CMatrix &m = target.matrix();
    const CMatrix diag = m.diagonal().asDiagonal();
    if (max_abs_difference(m, diag) > 1e-10) {
        throw DomainError("fit_beta: target must be diagonal");
    }
    const RVector p = m.diagonal().real();
    auto residual = [&](double beta) {
        const auto rho = canonical_density(system_levels, beta);
        return (rho.matrix().diagonal().real() - p).cwiseAbs().sum();
    };

    // Golden-section search. The objective is unimodal in beta for a
    // diagonal target; iterate until the bracket is below 1e-12.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = -beta_max;
    double b = beta_max;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = residual(c);
    double fd = residual(d);
    for (int iter = 0; iter < 400 && (b - a) > 1e-12; ++iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = residual(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = residual(d);
        }
    }
    const double beta = 0.5 * (a + b);
    return {beta, residual(beta)};
}

} // namespace gaplab

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

#include "gaplab/gap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>

namespace gaplab {

GapSampler::GapSampler(const DensityMatrix &rho)
    : basis_(rho.spectrum().vectors) {
    const auto &values = rho.spectrum().values;
    weights_.reserve(static_cast<std::size_t>(values.size()));
    cumulative_.reserve(static_cast<std::size_t>(values.size()));
    double running = 0.0;
    for (Index i = 0; i < values.size(); ++i) {
        const double p = values[i] > kSupportTolerance ? values[i] : 0.0;
        weights_.push_back(p);
        running += p;
        cumulative_.push_back(running);
    }
    for (double &c : cumulative_) {
        c /= running;
    }
}

std::size_t GapSampler::pick_index(RngStream &rng) const {
    const double u = rng.uniform();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    auto index = static_cast<std::size_t>(it - cumulative_.begin());
    index = std::min(index, weights_.size() - 1);
    // upper_bound never lands on a zero-weight slot unless rounding pushed
    // u past the last positive entry; walk back to it.
    while (weights_[index] == 0.0 && index > 0) {
        --index;
    }
    return index;
}

CVector GapSampler::sample_g(RngStream &rng) const {
    CVector coefficients(static_cast<Index>(weights_.size()));
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        coefficients[static_cast<Index>(i)] =
            sample_complex_gaussian(rng, weights_[i]);
    }
    return basis_ * coefficients;
}

CVector GapSampler::sample_ga(RngStream &rng) const {
    const std::size_t biased = pick_index(rng);
    CVector coefficients(static_cast<Index>(weights_.size()));
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i == biased) {
            // |c|^2 ~ Gamma(shape 2, scale p) as a sum of two exponentials.
            const double radius_sq =
                weights_[i] * (rng.exponential() + rng.exponential());
            const double phase = 2.0 * std::numbers::pi * rng.uniform();
            coefficients[static_cast<Index>(i)] =
                std::polar(std::sqrt(radius_sq), phase);
        } else {
            coefficients[static_cast<Index>(i)] =
                sample_complex_gaussian(rng, weights_[i]);
        }
    }
    return basis_ * coefficients;
}

GapSample GapSampler::sample_gap(RngStream &rng) const {
    return {StateVector::normalized(sample_ga(rng))};
}

CVector sample_g(RngStream &rng, const DensityMatrix &rho) {
    return GapSampler(rho).sample_g(rng);
}

CVector sample_ga(RngStream &rng, const DensityMatrix &rho) {
    return GapSampler(rho).sample_ga(rng);
}

GapSample sample_gap(RngStream &rng, const DensityMatrix &rho) {
    return GapSampler(rho).sample_gap(rng);
}

double g_density(const DensityMatrix &rho, const CVector &psi) {
    if (psi.size() != rho.dim()) {
        throw DimensionError("g_density: vector and matrix sizes differ");
    }
    const auto &spectrum = rho.spectrum();
    const CVector coefficients = spectrum.vectors.adjoint() * psi;
    double off_support_sq = 0.0;
    double quadratic = 0.0;
    double log_det = 0.0;
    int rank = 0;
    for (Index i = 0; i < coefficients.size(); ++i) {
        const double p = spectrum.values[i];
        const double c_sq = std::norm(coefficients[i]);
        if (p > kSupportTolerance) {
            quadratic += c_sq / p;
            log_det += std::log(p);
            ++rank;
        } else {
            off_support_sq += c_sq;
        }
    }
    if (std::sqrt(off_support_sq) > 1e-8) {
        return 0.0;
    }
    return std::exp(-quadratic - log_det - rank * std::log(std::numbers::pi));
}

GapSphereDensity::GapSphereDensity(const DensityMatrix &rho) {
    const auto &spectrum = rho.spectrum();
    if (!(spectrum.values.minCoeff() > kSupportTolerance)) {
        throw SingularDensityError(
            "gap_sphere_density: rho has a zero eigenvalue");
    }
    const RVector inverse_values = spectrum.values.cwiseInverse();
    inverse_ = spectrum.vectors * inverse_values.cast<Complex>().asDiagonal() *
               spectrum.vectors.adjoint();
    const auto d = static_cast<double>(rho.dim());
    log_prefactor_ = std::log(d) - spectrum.values.array().log().sum();
    exponent_ = -(d + 1.0);
}

double GapSphereDensity::operator()(const CVector &psi) const {
    if (psi.size() != inverse_.rows()) {
        throw DimensionError(
            "gap_sphere_density: vector and matrix sizes differ");
    }
    const double quadratic = psi.dot(inverse_ * psi).real();
    return std::exp(log_prefactor_ + exponent_ * std::log(quadratic));
}

double gap_sphere_density(const DensityMatrix &rho, const StateVector &psi) {
    return GapSphereDensity(rho)(psi.amplitudes());
}

TailRadius tail_radius(double epsilon, Index d) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw DomainError("tail_radius: epsilon must lie in (0, 1)");
    }
    if (d < 1) {
        throw DomainError("tail_radius: dimension must be >= 1");
    }
    const double shape = static_cast<double>(d) + 1.0;
    const double target = epsilon / static_cast<double>(d);
    // Q(d+1, x) decreases from 1 at x = 0 to 0; bracket the crossing.
    auto excess = [&](double x) {
        return boost::math::gamma_q(shape, x) - target;
    };
    double hi = shape;
    while (excess(hi) > 0.0) {
        hi *= 2.0;
    }
    boost::math::tools::eps_tolerance<double> tolerance(50);
    std::uintmax_t max_iter = 200;
    const auto bracket =
        boost::math::tools::toms748_solve(excess, 0.0, hi, tolerance, max_iter);
    // Right end of the bracket: the strict inequality holds there.
    return {epsilon, d, std::sqrt(bracket.second)};
}

CMatrix covariance_estimate(std::span<const CVector> samples) {
    if (samples.empty()) {
        throw DomainError("covariance_estimate: no samples");
    }
    const Index d = samples.front().size();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto &psi : samples) {
        if (psi.size() != d) {
            throw DimensionError("covariance_estimate: mixed dimensions");
        }
        sum.selfadjointView<Eigen::Lower>().rankUpdate(psi);
    }
    CMatrix full = sum.selfadjointView<Eigen::Lower>();
    return full / static_cast<double>(samples.size());
}

} // namespace gaplab

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

#include <span>
#include <vector>

#include "gaplab/hilbert.hpp"
#include "gaplab/randomness.hpp"

namespace gaplab {

/// Eigenvalues at or below this are treated as the kernel of rho.
inline constexpr double kSupportTolerance = 1e-12;

/// Unit vector drawn from GAP(rho).
struct GapSample {
    StateVector vector;
};

/// Samplers for the Gaussian measure G(rho), the adjusted Gaussian GA(rho)
/// (G reweighted by ||psi||^2) and GAP(rho) (GA pushed to the unit sphere).
///
/// Holds one eigendecomposition of rho so repeated draws cost O(d^2).
/// Draws are expressed in rho's eigenbasis {chi_i} and rotated back; the
/// coefficient along a kernel direction is exactly zero.
class GapSampler {
  public:
    explicit GapSampler(const DensityMatrix &rho);

    [[nodiscard]] Index dim() const { return basis_.rows(); }
    [[nodiscard]] std::span<const double> weights() const { return weights_; }

    /// Coefficients <chi_i|psi> independent, complex Gaussian, variance p_i.
    [[nodiscard]] CVector sample_g(RngStream &rng) const;
    /// Size-biased mixture: pick i with probability p_i, draw coefficient i
    /// with |c_i|^2 ~ Gamma(2, p_i) and uniform phase, others as in G.
    [[nodiscard]] CVector sample_ga(RngStream &rng) const;
    [[nodiscard]] GapSample sample_gap(RngStream &rng) const;

  private:
    [[nodiscard]] std::size_t pick_index(RngStream &rng) const;

    CMatrix basis_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
};

[[nodiscard]] CVector sample_g(RngStream &rng, const DensityMatrix &rho);
[[nodiscard]] CVector sample_ga(RngStream &rng, const DensityMatrix &rho);
[[nodiscard]] GapSample sample_gap(RngStream &rng, const DensityMatrix &rho);

/// Lebesgue density of G(rho) on the support subspace S of rho,
/// exp(-<psi|rho_+^{-1}|psi>) / (pi^{d'} det rho_+) with d' = rank rho.
/// Zero when psi has a component of norm > 1e-8 outside S.
[[nodiscard]] double g_density(const DensityMatrix &rho, const CVector &psi);

/// Density of GAP(rho) with respect to the normalized uniform measure on the
/// unit sphere of C^d: d * <psi|rho^{-1}|psi>^{-(d+1)} / det rho.
///
/// The same density relative to the unnormalized surface measure is this
/// value times (d-1)! / (2 pi^d). Throws SingularDensityError when rho has
/// a zero eigenvalue.
[[nodiscard]] double gap_sphere_density(const DensityMatrix &rho,
                                        const StateVector &psi);

/// gap_sphere_density with rho^{-1} and log det rho computed once.
class GapSphereDensity {
  public:
    explicit GapSphereDensity(const DensityMatrix &rho);

    /// `psi` is assumed to be a unit vector.
    double operator()(const CVector &psi) const;

  private:
    CMatrix inverse_;
    double log_prefactor_;
    double exponent_;
};

struct TailRadius {
    double epsilon;
    Index dim;
    double radius;
};

/// Smallest R with E[S 1{S < R^2}] >= d - epsilon for S ~ Gamma(d, 1),
/// i.e. Q(d + 1, R^2) = epsilon / d. For that R every rho on C^d satisfies
/// int_{||psi|| < R} ||psi||^2 G(rho)(dpsi) > 1 - epsilon.
[[nodiscard]] TailRadius tail_radius(double epsilon, Index d);

/// (1/N) sum |psi><psi| over the samples.
[[nodiscard]] CMatrix covariance_estimate(std::span<const CVector> samples);

} // namespace gaplab

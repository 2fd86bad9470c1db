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

#include <concepts>
#include <vector>

#include "gaplab/hilbert.hpp"
#include "gaplab/randomness.hpp"

namespace gaplab {

/// Atoms lighter than this carry no mass and are dropped.
inline constexpr double kNegligibleWeight = 1e-14;

struct Atom {
    CVector vector;
    double weight;
};

/// Finitely supported measure sum_j w_j delta_{v_j}. Immutable.
class DiscreteMeasure {
  public:
    /// Weights must be >= 0; when `normalized` they must sum to 1 within
    /// 1e-10 (DomainError otherwise).
    DiscreteMeasure(std::vector<Atom> atoms, bool normalized);

    [[nodiscard]] const std::vector<Atom> &atoms() const { return atoms_; }
    [[nodiscard]] std::size_t size() const { return atoms_.size(); }
    [[nodiscard]] bool normalized() const { return normalized_; }
    [[nodiscard]] double total_mass() const;
    /// integral of ||psi||^2.
    [[nodiscard]] double second_moment() const;

  private:
    std::vector<Atom> atoms_;
    bool normalized_;
};

struct ConditionalSample {
    Index j;
    StateVector vector;
    double weight;
};

/// Distribution of the conditional wave function: atom j is
/// (<b_j|psi> / ||<b_j|psi>||, ||<b_j|psi>||^2); zero-mass branches dropped.
[[nodiscard]] DiscreteMeasure mu1(const BipartiteState &psi,
                                  const OrthonormalSystem &basis);

/// Equal weights 1/d2 on sqrt(d2) <b_j|psi>, all d2 atoms kept.
[[nodiscard]] DiscreteMeasure mu1_tilde(const BipartiteState &psi,
                                        const OrthonormalSystem &basis);

/// Reweights every atom by ||v||^2. The result is flagged normalized only
/// when the new total mass is 1 within 1e-10.
[[nodiscard]] DiscreteMeasure adjust(const DiscreteMeasure &m);

/// Pushes the measure to the unit sphere, keeping weights. Atoms below
/// kNegligibleWeight are dropped, as in mu1.
[[nodiscard]] DiscreteMeasure project(const DiscreteMeasure &m);

template <typename F>
    requires std::invocable<const F &, const CVector &>
[[nodiscard]] double integrate(const DiscreteMeasure &m, const F &f) {
    double total = 0.0;
    for (const auto &atom : m.atoms()) {
        total += atom.weight * f(atom.vector);
    }
    return total;
}

/// sum_j w_j |v_j><v_j|.
[[nodiscard]] CMatrix measure_covariance(const DiscreteMeasure &m);

/// Samples psi from u_{rho1}: psi = sum_i sqrt(p_i) chi_i (x) phi_i with
/// {chi_i, p_i} a fixed eigendecomposition of rho1 and {phi_i} a uniformly
/// random orthonormal system of d1 vectors in C^{d2}.
class URho1Sampler {
  public:
    URho1Sampler(const DensityMatrix &rho1, Index d2);
    /// Uses the supplied eigenbasis (columns) instead of the solver's; it
    /// must diagonalize rho1.
    URho1Sampler(const DensityMatrix &rho1, Index d2, const CMatrix &eigenbasis);

    [[nodiscard]] Index d1() const { return scaled_basis_.rows(); }
    [[nodiscard]] Index d2() const { return d2_; }
    [[nodiscard]] BipartiteState sample(RngStream &rng) const;

  private:
    CMatrix scaled_basis_; ///< column i is sqrt(p_i) chi_i
    Index d2_;
};

[[nodiscard]] BipartiteState sample_u_rho1(RngStream &rng,
                                           const DensityMatrix &rho1, Index d2);

/// Draws J with probability ||<b_J|psi>||^2 and returns the normalized
/// partial inner product.
[[nodiscard]] ConditionalSample conditional_draw(RngStream &rng,
                                                 const BipartiteState &psi,
                                                 const OrthonormalSystem &basis);

} // namespace gaplab

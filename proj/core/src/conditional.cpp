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

#include "gaplab/conditional.hpp"

#include <cmath>
#include <string>

namespace gaplab {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, bool normalized)
    : atoms_(std::move(atoms)), normalized_(normalized) {
    for (const auto &atom : atoms_) {
        if (!(atom.weight >= 0.0) || !std::isfinite(atom.weight)) {
            throw DomainError("DiscreteMeasure: weights must be finite and >= 0");
        }
    }
    if (normalized_ && std::abs(total_mass() - 1.0) > 1e-10) {
        throw DomainError("DiscreteMeasure: weights sum to " +
                          std::to_string(total_mass()) + ", not 1");
    }
}

double DiscreteMeasure::total_mass() const {
    double total = 0.0;
    for (const auto &atom : atoms_) {
        total += atom.weight;
    }
    return total;
}

double DiscreteMeasure::second_moment() const {
    double total = 0.0;
    for (const auto &atom : atoms_) {
        total += atom.weight * atom.vector.squaredNorm();
    }
    return total;
}

namespace {

/// Column j is <b_j|psi> in H1.
CMatrix branch_vectors(const BipartiteState &psi,
                       const OrthonormalSystem &basis) {
    if (basis.dim() != psi.d2() || !basis.is_basis()) {
        throw BasisError("conditional: need an orthonormal basis of H2 with " +
                         std::to_string(psi.d2()) + " vectors, got " +
                         std::to_string(basis.size()) + " in dimension " +
                         std::to_string(basis.dim()));
    }
    return psi.grid() * basis.matrix().conjugate();
}

} // namespace

DiscreteMeasure mu1(const BipartiteState &psi, const OrthonormalSystem &basis) {
    const CMatrix branches = branch_vectors(psi, basis);
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(branches.cols()));
    for (Index j = 0; j < branches.cols(); ++j) {
        const double weight = branches.col(j).squaredNorm();
        if (weight < kNegligibleWeight) {
            continue;
        }
        atoms.push_back({branches.col(j) / std::sqrt(weight), weight});
    }
    return DiscreteMeasure(std::move(atoms), true);
}

DiscreteMeasure mu1_tilde(const BipartiteState &psi,
                          const OrthonormalSystem &basis) {
    const CMatrix branches = branch_vectors(psi, basis);
    const auto d2 = static_cast<double>(branches.cols());
    const double scale = std::sqrt(d2);
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(branches.cols()));
    for (Index j = 0; j < branches.cols(); ++j) {
        atoms.push_back({scale * branches.col(j), 1.0 / d2});
    }
    return DiscreteMeasure(std::move(atoms), true);
}

DiscreteMeasure adjust(const DiscreteMeasure &m) {
    std::vector<Atom> atoms;
    atoms.reserve(m.size());
    double total = 0.0;
    for (const auto &atom : m.atoms()) {
        const double weight = atom.weight * atom.vector.squaredNorm();
        total += weight;
        atoms.push_back({atom.vector, weight});
    }
    const bool normalized = std::abs(total - 1.0) <= 1e-10;
    return DiscreteMeasure(std::move(atoms), normalized);
}

DiscreteMeasure project(const DiscreteMeasure &m) {
    std::vector<Atom> atoms;
    atoms.reserve(m.size());
    for (const auto &atom : m.atoms()) {
        if (atom.weight < kNegligibleWeight) {
            continue;
        }
        const double norm = atom.vector.norm();
        if (norm == 0.0) {
            throw SingularProjectionError(
                "project: zero vector carries positive weight");
        }
        atoms.push_back({atom.vector / norm, atom.weight});
    }
    return DiscreteMeasure(std::move(atoms), m.normalized());
}

CMatrix measure_covariance(const DiscreteMeasure &m) {
    if (m.size() == 0) {
        throw DomainError("measure_covariance: empty measure");
    }
    const Index d = m.atoms().front().vector.size();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto &atom : m.atoms()) {
        sum.noalias() += atom.weight * atom.vector * atom.vector.adjoint();
    }
    return sum;
}

// ---------------------------------------------------------------------------
// u_{rho1}

namespace {

CMatrix scale_columns(const CMatrix &basis, const RVector &probabilities) {
    CMatrix out = basis;
    for (Index i = 0; i < out.cols(); ++i) {
        out.col(i) *= std::sqrt(std::max(probabilities[i], 0.0));
    }
    return out;
}

} // namespace

URho1Sampler::URho1Sampler(const DensityMatrix &rho1, Index d2)
    : scaled_basis_(
          scale_columns(rho1.spectrum().vectors, rho1.spectrum().values)),
      d2_(d2) {
    if (d2 < rho1.dim()) {
        throw DomainError("u_rho1: need d2 >= d1, got d2=" +
                          std::to_string(d2) + " d1=" +
                          std::to_string(rho1.dim()));
    }
}

URho1Sampler::URho1Sampler(const DensityMatrix &rho1, Index d2,
                           const CMatrix &eigenbasis)
    : d2_(d2) {
    if (d2 < rho1.dim()) {
        throw DomainError("u_rho1: need d2 >= d1");
    }
    const OrthonormalSystem checked(eigenbasis);
    if (!checked.is_basis() || checked.dim() != rho1.dim()) {
        throw BasisError("u_rho1: eigenbasis must span H1");
    }
    const CMatrix rotated = eigenbasis.adjoint() * rho1.matrix() * eigenbasis;
    const CMatrix diag = rotated.diagonal().asDiagonal();
    if (max_abs_difference(rotated, diag) > 1e-8) {
        throw BasisError("u_rho1: supplied basis does not diagonalize rho1");
    }
    scaled_basis_ = scale_columns(eigenbasis, rotated.diagonal().real());
}

BipartiteState URho1Sampler::sample(RngStream &rng) const {
    const OrthonormalSystem phis = random_ons(rng, d2_, d1());
    // grid(a, b) = sum_i sqrt(p_i) chi_i[a] phi_i[b]
    AmplitudeGrid grid = scaled_basis_ * phis.matrix().transpose();
    // Renormalize away rounding in sum p_i.
    grid /= grid.norm();
    return BipartiteState::from_grid(grid);
}

BipartiteState sample_u_rho1(RngStream &rng, const DensityMatrix &rho1,
                             Index d2) {
    return URho1Sampler(rho1, d2).sample(rng);
}

ConditionalSample conditional_draw(RngStream &rng, const BipartiteState &psi,
                                   const OrthonormalSystem &basis) {
    const CMatrix branches = branch_vectors(psi, basis);
    const RVector weights = branches.colwise().squaredNorm().transpose();
    const double u = rng.uniform() * weights.sum();
    double running = 0.0;
    Index chosen = -1;
    for (Index j = 0; j < weights.size(); ++j) {
        if (weights[j] < kNegligibleWeight) {
            continue;
        }
        chosen = j;
        running += weights[j];
        if (u < running) {
            break;
        }
    }
    return {chosen, StateVector::normalized(branches.col(chosen)),
            weights[chosen]};
}

} // namespace gaplab

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

#include "gaplab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gaplab {

namespace {

std::string dims(Index a, Index b) {
    return std::to_string(a) + " vs " + std::to_string(b);
}

} // namespace

double max_abs_difference(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_difference: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(CVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw DomainError("StateVector: dimension must be positive");
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw DomainError("StateVector: norm " + std::to_string(norm) +
                          " is not 1");
    }
}

StateVector StateVector::normalized(const CVector &raw) {
    const double norm = raw.norm();
    if (raw.size() == 0 || norm == 0.0 || !std::isfinite(norm)) {
        throw DomainError("StateVector::normalized: cannot normalize");
    }
    return StateVector(raw / norm);
}

StateVector StateVector::basis(Index dim, Index index) {
    if (index < 0 || index >= dim) {
        throw DimensionError("StateVector::basis: index out of range");
    }
    CVector e = CVector::Zero(dim);
    e[index] = 1.0;
    return StateVector(std::move(e));
}

// ---------------------------------------------------------------------------
// DensityMatrix

Spectrum hermitian_spectrum(const CMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw DomainError("hermitian_spectrum: eigensolver failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

DensityMatrix::DensityMatrix(const CMatrix &entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw DimensionError("DensityMatrix: need a nonempty square matrix");
    }
    if (!entries.allFinite()) {
        throw DomainError("DensityMatrix: non-finite entry");
    }
    if (max_abs_difference(entries, entries.adjoint()) > kHermitianTolerance) {
        throw DomainError("DensityMatrix: matrix is not Hermitian");
    }
    const double trace = entries.trace().real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw DomainError("DensityMatrix: trace " + std::to_string(trace) +
                          " is not 1");
    }
    entries_ = 0.5 * (entries + entries.adjoint());
    spectrum_ = hermitian_spectrum(entries_);

    const double smallest = spectrum_.values.minCoeff();
    if (smallest < -kPsdRepairTolerance) {
        throw DomainError("DensityMatrix: eigenvalue " +
                          std::to_string(smallest) + " is negative");
    }
    if (smallest < 0.0) {
        spectrum_.values = spectrum_.values.cwiseMax(0.0);
        spectrum_.values /= spectrum_.values.sum();
        entries_ = spectrum_.vectors *
                   spectrum_.values.cast<Complex>().asDiagonal() *
                   spectrum_.vectors.adjoint();
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
    CMatrix m = CMatrix::Zero(static_cast<Index>(probabilities.size()),
                              static_cast<Index>(probabilities.size()));
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        m(static_cast<Index>(i), static_cast<Index>(i)) = probabilities[i];
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
    if (dim <= 0) {
        throw DomainError("maximally_mixed: dimension must be positive");
    }
    return DensityMatrix(CMatrix::Identity(dim, dim) /
                         static_cast<double>(dim));
}

DensityMatrix DensityMatrix::from_spectrum(std::span<const double> probabilities,
                                           const CMatrix &basis) {
    const auto k = static_cast<Index>(probabilities.size());
    if (basis.cols() != k) {
        throw DimensionError("from_spectrum: " + dims(basis.cols(), k));
    }
    RVector p(k);
    for (Index i = 0; i < k; ++i) {
        p[i] = probabilities[static_cast<std::size_t>(i)];
    }
    return DensityMatrix(basis * p.cast<Complex>().asDiagonal() *
                         basis.adjoint());
}

double DensityMatrix::expectation(const CVector &phi) const {
    if (phi.size() != dim()) {
        throw DimensionError("expectation: " + dims(phi.size(), dim()));
    }
    return phi.dot(entries_ * phi).real();
}

// ---------------------------------------------------------------------------
// BipartiteState

BipartiteState::BipartiteState(Index d1, Index d2, StateVector state)
    : d1_(d1), d2_(d2), state_(std::move(state)) {
    if (d1 <= 0 || d2 <= 0 || state_.dim() != d1 * d2) {
        throw DimensionError("BipartiteState: dim " +
                             std::to_string(state_.dim()) + " != " +
                             std::to_string(d1) + "*" + std::to_string(d2));
    }
}

BipartiteState BipartiteState::product(const StateVector &chi,
                                       const StateVector &phi) {
    const Index d1 = chi.dim();
    const Index d2 = phi.dim();
    CVector amps(d1 * d2);
    for (Index i = 0; i < d1; ++i) {
        amps.segment(i * d2, d2) = chi[i] * phi.amplitudes();
    }
    return {d1, d2, StateVector::normalized(amps)};
}

BipartiteState BipartiteState::from_grid(const AmplitudeGrid &grid) {
    const CVector amps =
        Eigen::Map<const CVector>(grid.data(), grid.rows() * grid.cols());
    return {grid.rows(), grid.cols(), StateVector(amps)};
}

Eigen::Map<const AmplitudeGrid> BipartiteState::grid() const {
    return {state_.amplitudes().data(), d1_, d2_};
}

// ---------------------------------------------------------------------------
// OrthonormalSystem

OrthonormalSystem::OrthonormalSystem(CMatrix columns)
    : columns_(std::move(columns)) {
    if (columns_.rows() == 0 || columns_.cols() == 0 ||
        columns_.cols() > columns_.rows()) {
        throw BasisError("OrthonormalSystem: need 1 <= k <= n columns");
    }
    const CMatrix gram = columns_.adjoint() * columns_;
    const double deviation = max_abs_difference(
        gram, CMatrix::Identity(columns_.cols(), columns_.cols()));
    if (!(deviation <= kGramTolerance)) {
        throw BasisError("OrthonormalSystem: Gram deviation " +
                         std::to_string(deviation));
    }
}

OrthonormalSystem OrthonormalSystem::computational(Index dim) {
    return OrthonormalSystem(CMatrix::Identity(dim, dim));
}

StateVector OrthonormalSystem::vector(Index j) const {
    return StateVector(columns_.col(j));
}

// ---------------------------------------------------------------------------
// Operations

CVector partial_inner(const BipartiteState &psi, const CVector &b) {
    if (b.size() != psi.d2()) {
        throw DimensionError("partial_inner: " + dims(b.size(), psi.d2()));
    }
    return psi.grid() * b.conjugate();
}

CVector partial_inner(const BipartiteState &psi, const StateVector &b) {
    return partial_inner(psi, b.amplitudes());
}

DensityMatrix partial_trace_2(const BipartiteState &psi) {
    const auto grid = psi.grid();
    return DensityMatrix(grid * grid.adjoint());
}

CVector SchmidtDecomposition::reconstruct() const {
    const Index d1 = left.front().dim();
    const Index d2 = right.front().dim();
    AmplitudeGrid grid = AmplitudeGrid::Zero(d1, d2);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        grid += coefficients[k] * left[k].amplitudes() *
                right[k].amplitudes().transpose();
    }
    return Eigen::Map<const CVector>(grid.data(), d1 * d2);
}

SchmidtDecomposition schmidt(const BipartiteState &psi) {
    if (psi.d1() > psi.d2()) {
        throw UnsupportedShapeError("schmidt: requires d1 <= d2, got " +
                                    dims(psi.d1(), psi.d2()));
    }
    const CMatrix grid = psi.grid();
    Eigen::JacobiSVD<CMatrix> svd(grid, Eigen::ComputeThinU |
                                            Eigen::ComputeThinV);
    // grid = U S V^*, so psi = sum_k s_k u_k (x) conj(v_k).
    SchmidtDecomposition out;
    const Index rank = svd.singularValues().size();
    out.coefficients.reserve(static_cast<std::size_t>(rank));
    for (Index k = 0; k < rank; ++k) {
        out.coefficients.push_back(svd.singularValues()[k]);
        out.left.emplace_back(StateVector::normalized(svd.matrixU().col(k)));
        out.right.emplace_back(
            StateVector::normalized(svd.matrixV().col(k).conjugate()));
    }
    return out;
}

double trace_norm(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("trace_norm: matrix is " + dims(m.rows(), m.cols()));
    }
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues().sum();
}

DensityMatrix canonical_density(std::span<const double> levels, double beta) {
    if (levels.empty()) {
        throw DomainError("canonical_density: empty spectrum");
    }
    if (!std::isfinite(beta)) {
        throw DomainError("canonical_density: beta must be finite");
    }
    std::vector<double> exponents(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!std::isfinite(levels[i])) {
            throw DomainError("canonical_density: non-finite level");
        }
        exponents[i] = -beta * levels[i];
    }
    const double shift = *std::max_element(exponents.begin(), exponents.end());
    double partition = 0.0;
    for (double &e : exponents) {
        e = std::exp(e - shift);
        partition += e;
    }
    for (double &e : exponents) {
        e /= partition;
    }
    return DensityMatrix::diagonal(exponents);
}

} // namespace gaplab

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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gaplab/errors.hpp"

namespace gaplab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Row-major view of a bipartite amplitude vector: element (i, j) is
/// amplitudes[i * d2 + j].
using AmplitudeGrid =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
/// Eigenvalues in [-kPsdRepairTolerance, 0) are clipped to zero.
inline constexpr double kPsdRepairTolerance = 1e-10;
/// Gram-matrix deviation tolerated for an orthonormal system.
inline constexpr double kGramTolerance = 1e-8;

/// Unit vector in a finite-dimensional Hilbert space.
class StateVector {
  public:
    /// Throws DomainError unless | ||amplitudes|| - 1 | <= kNormTolerance.
    explicit StateVector(CVector amplitudes);

    /// Rescales `raw` to unit norm; throws DomainError for the zero vector.
    static StateVector normalized(const CVector &raw);
    /// Computational basis vector e_index.
    static StateVector basis(Index dim, Index index);

    [[nodiscard]] Index dim() const { return amplitudes_.size(); }
    [[nodiscard]] const CVector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex operator[](Index i) const { return amplitudes_[i]; }

  private:
    CVector amplitudes_;
};

/// Eigen-decomposition of a Hermitian matrix with ascending eigenvalues.
struct Spectrum {
    RVector values;
    CMatrix vectors;
};

[[nodiscard]] Spectrum hermitian_spectrum(const CMatrix &hermitian);

/// Hermitian, positive-semidefinite, trace-one matrix.
///
/// Construction checks hermiticity and trace within 1e-10. Eigenvalues in
/// [-1e-10, 0) are clipped to zero and the matrix renormalized; anything
/// more negative is a DomainError. The spectrum is computed once and kept.
class DensityMatrix {
  public:
    explicit DensityMatrix(const CMatrix &entries);

    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix diagonal(std::span<const double> probabilities);
    static DensityMatrix maximally_mixed(Index dim);
    /// sum_i p_i |basis_i><basis_i| for orthonormal columns `basis`.
    static DensityMatrix from_spectrum(std::span<const double> probabilities,
                                       const CMatrix &basis);

    [[nodiscard]] Index dim() const { return entries_.rows(); }
    [[nodiscard]] const CMatrix &matrix() const { return entries_; }
    /// Ascending eigenvalues (all >= 0) and matching eigenvectors.
    [[nodiscard]] const Spectrum &spectrum() const { return spectrum_; }
    [[nodiscard]] double min_eigenvalue() const { return spectrum_.values[0]; }
    [[nodiscard]] double max_eigenvalue() const {
        return spectrum_.values[spectrum_.values.size() - 1];
    }
    [[nodiscard]] double expectation(const CVector &phi) const;

  private:
    CMatrix entries_;
    Spectrum spectrum_;
};

/// Unit vector on H1 (x) H2 with explicit factor dimensions.
class BipartiteState {
  public:
    BipartiteState(Index d1, Index d2, StateVector state);

    static BipartiteState product(const StateVector &chi,
                                  const StateVector &phi);
    /// Builds the state from a d1 x d2 amplitude grid (must have unit
    /// Frobenius norm).
    static BipartiteState from_grid(const AmplitudeGrid &grid);

    [[nodiscard]] Index d1() const { return d1_; }
    [[nodiscard]] Index d2() const { return d2_; }
    [[nodiscard]] const StateVector &state() const { return state_; }
    [[nodiscard]] Complex amplitude(Index i, Index j) const {
        return state_.amplitudes()[i * d2_ + j];
    }
    /// The amplitudes as a d1 x d2 matrix.
    [[nodiscard]] Eigen::Map<const AmplitudeGrid> grid() const;

  private:
    Index d1_;
    Index d2_;
    StateVector state_;
};

/// Columns form an orthonormal system (k <= n vectors in C^n).
class OrthonormalSystem {
  public:
    /// Throws BasisError when max |G - I| > kGramTolerance.
    explicit OrthonormalSystem(CMatrix columns);

    static OrthonormalSystem computational(Index dim);

    [[nodiscard]] Index dim() const { return columns_.rows(); }
    [[nodiscard]] Index size() const { return columns_.cols(); }
    [[nodiscard]] bool is_basis() const { return size() == dim(); }
    [[nodiscard]] const CMatrix &matrix() const { return columns_; }
    [[nodiscard]] StateVector vector(Index j) const;

  private:
    CMatrix columns_;
};

struct SchmidtDecomposition {
    std::vector<double> coefficients; ///< descending
    std::vector<StateVector> left;    ///< orthonormal in H1
    std::vector<StateVector> right;   ///< orthonormal in H2

    [[nodiscard]] CVector reconstruct() const;
};

/// <b|psi> taken in H2: v[i] = sum_j conj(b[j]) psi(i, j). Not normalized.
[[nodiscard]] CVector partial_inner(const BipartiteState &psi,
                                    const CVector &b);
[[nodiscard]] CVector partial_inner(const BipartiteState &psi,
                                    const StateVector &b);

/// Reduced density matrix tr_2 |psi><psi|.
[[nodiscard]] DensityMatrix partial_trace_2(const BipartiteState &psi);

/// Requires d1 <= d2 (UnsupportedShapeError otherwise).
[[nodiscard]] SchmidtDecomposition schmidt(const BipartiteState &psi);

/// Sum of singular values of a square matrix.
[[nodiscard]] double trace_norm(const CMatrix &m);

/// Gibbs weights exp(-beta E_i) / Z, diagonal in the given eigenbasis.
[[nodiscard]] DensityMatrix canonical_density(std::span<const double> levels,
                                              double beta);

/// Largest |entry| of a - b.
[[nodiscard]] double max_abs_difference(const CMatrix &a, const CMatrix &b);

} // namespace gaplab

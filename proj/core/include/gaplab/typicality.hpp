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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gaplab/conditional.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/hilbert.hpp"
#include "gaplab/randomness.hpp"
#include "gaplab/test_function.hpp"

namespace gaplab {

/// Stream index reserved for reference-value estimation; trial t always uses
/// root.split(t).
inline constexpr std::uint64_t kReferenceStream = 0xfffffffffffff000ULL;

struct ExperimentOptions {
    /// 0 selects default_worker_count().
    std::size_t workers = 0;
    /// Monte Carlo budget for GAP(target)(f) when no closed form exists.
    /// 0 selects max(10 * n_trials, 100000).
    std::size_t reference_samples = 0;
};

// ---------------------------------------------------------------------------
// GAP expectations

struct GapExpectation {
    double estimate;
    double standard_error;
    std::optional<double> closed_form;
};

/// Monte Carlo mean of f over GAP(rho), plus the closed form if f has one.
[[nodiscard]] GapExpectation gap_expectation(RngStream &rng,
                                             const DensityMatrix &rho,
                                             const TestFunction &f,
                                             std::size_t n_samples);

// ---------------------------------------------------------------------------
// Trial records

struct TrialRecord {
    std::size_t trial = 0;
    double discrepancy = 0.0; ///< |mu1(f) - reference|
    bool pass = false;        ///< discrepancy < threshold
    double value = 0.0;       ///< mu1^{psi,b}(f)
    /// ||rho_1^psi - target||_tr where the experiment has a target; NaN
    /// otherwise.
    double trace_distance = 0.0;
};

struct TheoremResult {
    std::vector<TrialRecord> records;
    double reference = 0.0;       ///< GAP(target)(f)
    double reference_error = 0.0; ///< 0 when a closed form was used
    double threshold = 0.0;
    /// ||tr_2 rho_R - Omega||_tr for theorem 4, NaN elsewhere.
    double target_distance = 0.0;

    [[nodiscard]] double pass_fraction() const;
    [[nodiscard]] std::vector<double> discrepancies() const;
    [[nodiscard]] double median_discrepancy() const;
};

/// Theorem 1: psi ~ u_{rho1} in C^{d1} (x) C^{d2}, b the computational basis
/// of H2; pass when |mu1^{psi,b}(f) - GAP(rho1)(f)| < epsilon ||f||_inf.
[[nodiscard]] TheoremResult theorem1_experiment(const RngStream &root,
                                                const DensityMatrix &rho1,
                                                Index d2, const TestFunction &f,
                                                double epsilon,
                                                std::size_t n_trials,
                                                const ExperimentOptions &options = {});

/// Theorem 2: psi fixed, b uniformly random; compared with GAP(rho_1^psi).
[[nodiscard]] TheoremResult theorem2_experiment(const RngStream &root,
                                                const BipartiteState &psi,
                                                const TestFunction &f,
                                                double epsilon,
                                                std::size_t n_trials,
                                                const ExperimentOptions &options = {});

// ---------------------------------------------------------------------------
// Shells

/// Subspace H_R of C^{d1} (x) C^{d2} given by orthonormal columns.
class Shell {
  public:
    Shell(Index d1, Index d2, CMatrix basis);

    [[nodiscard]] Index d1() const { return d1_; }
    [[nodiscard]] Index d2() const { return d2_; }
    [[nodiscard]] Index dim() const { return basis_.cols(); }
    [[nodiscard]] const CMatrix &basis() const { return basis_; }

    /// tr_2 rho_R with rho_R the normalized projection onto the shell.
    [[nodiscard]] DensityMatrix reduced_state() const;
    /// Uniform point of the shell's unit sphere: Gaussian shell coordinates,
    /// normalized and embedded.
    [[nodiscard]] BipartiteState sample_uniform(RngStream &rng) const;

  private:
    Index d1_;
    Index d2_;
    CMatrix basis_;
};

/// First dR columns of a Haar unitary on C^{d1 d2}.
[[nodiscard]] Shell random_subspace(RngStream &rng, Index d1, Index d2, Index dR);

/// Energy shell of H = H1 (x) I + I (x) H2 for diagonal H1, H2.
struct MicrocanonicalShell {
    std::vector<double> system_levels;
    std::vector<double> bath_levels;
    double energy_low = 0.0;
    double energy_high = 0.0;
    std::vector<std::pair<Index, Index>> member_pairs; ///< (i, j)
    std::vector<std::size_t> occupation;               ///< n_i per level
    Shell shell;

    [[nodiscard]] Index dim() const { return shell.dim(); }
    /// diag(n_i / dR), exact for a separable Hamiltonian.
    [[nodiscard]] DensityMatrix reduced_state() const;
};

/// Pairs (i, j) with E <= E1_i + E2_j <= E + deltaE. Throws EmptyShellError
/// when the window contains no eigenvalue.
[[nodiscard]] MicrocanonicalShell microcanonical_shell(
    std::span<const double> system_levels, std::span<const double> bath_levels,
    double energy, double delta_energy);

/// n evenly spaced levels on [low, high].
[[nodiscard]] std::vector<double> evenly_spaced_levels(std::size_t n, double low,
                                                       double high);

struct BetaFit {
    double beta;
    double residual; ///< ||rho_beta - target||_tr
};

/// Golden-section search for beta in [-beta_max, beta_max] minimizing
/// ||rho_beta - target||_tr. Target must be diagonal (DomainError otherwise).
[[nodiscard]] BetaFit fit_beta(std::span<const double> system_levels,
                               const DensityMatrix &target,
                               double beta_max = 50.0);

// ---------------------------------------------------------------------------
// Canonical typicality

struct EtaCheck {
    double eta;
    double threshold;   ///< eta + d1 / sqrt(dR)
    double exceedance;  ///< fraction of trials with distance >= threshold
    double bound;       ///< 4 exp(-dR eta^2 / (18 pi^3))
    double standard_error;
    [[nodiscard]] bool within_bound() const {
        return exceedance <= bound + 3.0 * standard_error;
    }
};

struct CanonicalTypicalityResult {
    std::vector<double> distances; ///< ||rho_1^psi - tr_2 rho_R||_tr per trial
    double scale = 0.0;            ///< d1 / sqrt(dR)
    double mean = 0.0;
    double q10 = 0.0;
    double median = 0.0;
    double q90 = 0.0;
    std::vector<EtaCheck> checks;

    [[nodiscard]] bool bound_respected() const;
};

[[nodiscard]] std::vector<double> default_eta_grid();

[[nodiscard]] CanonicalTypicalityResult canonical_typicality_experiment(
    const RngStream &root, const Shell &shell, std::size_t n_trials,
    std::span<const double> eta_grid, const ExperimentOptions &options = {});

[[nodiscard]] CanonicalTypicalityResult canonical_typicality_experiment(
    const RngStream &root, const Shell &shell, std::size_t n_trials,
    const ExperimentOptions &options = {});

/// Theorem 3: (psi, b) ~ u_R x u_ONB; pass when
/// |mu1^{psi,b}(f) - GAP(tr_2 rho_R)(f)| < epsilon.
[[nodiscard]] TheoremResult theorem3_experiment(const RngStream &root,
                                                const Shell &shell,
                                                const TestFunction &f,
                                                double epsilon,
                                                std::size_t n_trials,
                                                const ExperimentOptions &options = {});

/// Theorem 4: as theorem 3 but against GAP(Omega) with threshold
/// epsilon ||f||_inf. Omega must be nonsingular (DomainError otherwise).
[[nodiscard]] TheoremResult theorem4_experiment(const RngStream &root,
                                                const Shell &shell,
                                                const DensityMatrix &omega,
                                                const TestFunction &f,
                                                double epsilon,
                                                std::size_t n_trials,
                                                const ExperimentOptions &options = {});

// ---------------------------------------------------------------------------
// Haar submatrices

struct SubmatrixDensity {
    /// 1{||X||_op < sqrt n} det(I - X X^* / n)^{n - 2k}
    double unnormalized;
    /// ((n-1)/(pi n)) (1 - |x|^2/n)^{n-2}, only for k = 1.
    std::optional<double> normalized;
};

/// Requires n >= 2k (DomainError otherwise).
[[nodiscard]] SubmatrixDensity submatrix_density(Index k, Index n,
                                                 const CMatrix &x);

/// Radial quadrature of the normalized k = 1 density over C (should be 1).
[[nodiscard]] double submatrix_k1_mass(Index n);
/// L1 distance between the k = 1 density and exp(-|x|^2)/pi.
[[nodiscard]] double submatrix_k1_l1_distance(Index n);

struct ExpectationGap {
    std::string name;
    double sampled;  ///< Monte Carlo mean over sqrt(n) U columns
    double gaussian; ///< exact Gaussian expectation
    double standard_error;
    [[nodiscard]] double gap() const;
};

struct SubmatrixPoint {
    Index n = 0;
    /// KS statistic of |X_ij|^2 against Exp(1), per entry (row-major).
    std::vector<double> entry_ks;
    double max_ks = 0.0;
    std::optional<double> l1_distance;
    std::optional<double> mass;
    std::vector<ExpectationGap> expectation_gaps;
    double max_expectation_gap = 0.0;
};

/// Samples X = sqrt(n) * (top-left k x k block of a Haar U(n)) for each n.
/// The block is read off the phase-fixed thin QR of an n x k Ginibre matrix,
/// which has the law of the first k columns of a Haar unitary.
[[nodiscard]] std::vector<SubmatrixPoint> submatrix_convergence_experiment(
    const RngStream &root, Index k, std::span<const Index> n_values,
    std::size_t n_samples, const ExperimentOptions &options = {});

// ---------------------------------------------------------------------------
// Continuity of rho -> GAP(rho)

struct ContinuityPair {
    double trace_distance;   ///< ||rho - Omega||_tr
    double sup_density_gap;  ///< max over probe points of |d rho - d Omega|
    double expectation_gap;  ///< |GAP(rho)(f) - GAP(Omega)(f)|
    double omega_min_eigenvalue;
};

/// Compares GAP(rho) and GAP(Omega) on the given unit probe points plus the
/// eigenvectors of both matrices. The expectation gap is the importance
/// estimate mean_s (d rho - d Omega)(psi_s) f(psi_s), which is unbiased when
/// the probes are uniform on the sphere.
[[nodiscard]] ContinuityPair compare_gap_measures(const DensityMatrix &rho,
                                                  const DensityMatrix &omega,
                                                  std::span<const CVector> probes,
                                                  const TestFunction &f);

struct ContinuityProbeResult {
    Index dim = 0;
    double gamma = 0.0;
    std::vector<ContinuityPair> pairs;
    double spearman = 0.0; ///< rank correlation of trace distance vs sup gap
    /// Median of sup_density_gap / trace_distance.
    double median_gap_ratio = 0.0;
};

/// Samples pairs in D_{>=gamma}: Omega has spectrum with smallest eigenvalue
/// exactly gamma and a Haar eigenbasis; rho = (1-t) Omega + t sigma for a
/// random sigma in D_{>=gamma} and log-uniform t in [1e-3, 1]. Density gaps
/// are maximized over `sphere_points` uniform points plus the eigenvectors
/// of both matrices. The expectation gap uses f (default: cap indicator of
/// e_1 at 1/2) integrated by importance weighting on the same points.
/// Requires 0 < gamma < 1/d.
[[nodiscard]] ContinuityProbeResult continuity_probe(
    const RngStream &root, Index d, double gamma, std::size_t n_pairs,
    std::size_t sphere_points = 10000,
    const std::optional<TestFunction> &f = std::nullopt,
    const ExperimentOptions &options = {});

} // namespace gaplab

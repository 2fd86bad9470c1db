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

#include "gaplab/typicality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gaplab/parallel.hpp"
#include "gaplab/stats.hpp"

namespace gaplab {

GapExpectation gap_expectation(RngStream &rng, const DensityMatrix &rho,
                               const TestFunction &f, std::size_t n_samples) {
    if (n_samples == 0) {
        throw DomainError("gap_expectation: need at least one sample");
    }
    const GapSampler sampler(rho);
    std::vector<double> values(n_samples);
    for (auto &v : values) {
        v = f(sampler.sample_gap(rng).vector.amplitudes());
    }
    return {stats::mean(values), stats::standard_error(values),
            f.gap_closed_form(rho)};
}

double TheoremResult::pass_fraction() const {
    if (records.empty()) {
        return 0.0;
    }
    const auto passed = std::count_if(records.begin(), records.end(),
                                      [](const auto &r) { return r.pass; });
    return static_cast<double>(passed) / static_cast<double>(records.size());
}

std::vector<double> TheoremResult::discrepancies() const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto &r : records) {
        out.push_back(r.discrepancy);
    }
    return out;
}

double TheoremResult::median_discrepancy() const {
    return stats::median(discrepancies());
}

namespace {

constexpr double kNotApplicable = std::numeric_limits<double>::quiet_NaN();

std::size_t reference_budget(const ExperimentOptions &options,
                             std::size_t n_trials) {
    if (options.reference_samples > 0) {
        return options.reference_samples;
    }
    return std::max<std::size_t>(10 * n_trials, 100000);
}

/// GAP(target)(f): closed form if available, else Monte Carlo on the
/// reserved reference stream.
std::pair<double, double> gap_reference(const RngStream &root,
                                        const DensityMatrix &target,
                                        const TestFunction &f,
                                        std::size_t samples) {
    if (auto exact = f.gap_closed_form(target)) {
        return {*exact, 0.0};
    }
    RngStream rng = root.split(kReferenceStream);
    const auto estimate = gap_expectation(rng, target, f, samples);
    return {estimate.estimate, estimate.standard_error};
}

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw DomainError("experiment: epsilon must lie in (0, 1)");
    }
}

void require_dimension(const TestFunction &f, Index d1) {
    if (f.direction().size() != d1) {
        throw DimensionError("experiment: test function lives in dimension " +
                             std::to_string(f.direction().size()) +
                             ", system has " + std::to_string(d1));
    }
}

} // namespace

TheoremResult theorem1_experiment(const RngStream &root,
                                  const DensityMatrix &rho1, Index d2,
                                  const TestFunction &f, double epsilon,
                                  std::size_t n_trials,
                                  const ExperimentOptions &options) {
    require_epsilon(epsilon);
    require_dimension(f, rho1.dim());
    const URho1Sampler sampler(rho1, d2);
    const auto basis = OrthonormalSystem::computational(d2);

    TheoremResult result;
    std::tie(result.reference, result.reference_error) =
        gap_reference(root, rho1, f, reference_budget(options, n_trials));
    result.threshold = epsilon * f.bound();
    result.target_distance = kNotApplicable;
    result.records.resize(n_trials);

    parallel_for(
        n_trials,
        [&](std::size_t t) {
            RngStream rng = root.split(t);
            const BipartiteState psi = sampler.sample(rng);
            const double value = integrate(mu1(psi, basis), f);
            auto &record = result.records[t];
            record.trial = t;
            record.value = value;
            record.discrepancy = std::abs(value - result.reference);
            record.pass = record.discrepancy < result.threshold;
            record.trace_distance = kNotApplicable;
        },
        options.workers);
    return result;
}

TheoremResult theorem2_experiment(const RngStream &root,
                                  const BipartiteState &psi,
                                  const TestFunction &f, double epsilon,
                                  std::size_t n_trials,
                                  const ExperimentOptions &options) {
    require_epsilon(epsilon);
    require_dimension(f, psi.d1());
    const DensityMatrix target = partial_trace_2(psi);

    TheoremResult result;
    std::tie(result.reference, result.reference_error) =
        gap_reference(root, target, f, reference_budget(options, n_trials));
    result.threshold = epsilon * f.bound();
    result.target_distance = kNotApplicable;
    result.records.resize(n_trials);

    parallel_for(
        n_trials,
        [&](std::size_t t) {
            RngStream rng = root.split(t);
            const OrthonormalSystem basis = random_onb(rng, psi.d2());
            const double value = integrate(mu1(psi, basis), f);
            auto &record = result.records[t];
            record.trial = t;
            record.value = value;
            record.discrepancy = std::abs(value - result.reference);
            record.pass = record.discrepancy < result.threshold;
            record.trace_distance = kNotApplicable;
        },
        options.workers);
    return result;
}

// ---------------------------------------------------------------------------
// Canonical typicality and theorems 3-4

std::vector<double> default_eta_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 10; ++i) {
        grid.push_back(0.05 * i);
    }
    return grid;
}

bool CanonicalTypicalityResult::bound_respected() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const EtaCheck &c) { return c.within_bound(); });
}

CanonicalTypicalityResult canonical_typicality_experiment(
    const RngStream &root, const Shell &shell, std::size_t n_trials,
    std::span<const double> eta_grid, const ExperimentOptions &options) {
    if (n_trials == 0) {
        throw DomainError("canonical_typicality: need at least one trial");
    }
    const DensityMatrix target = shell.reduced_state();
    CanonicalTypicalityResult result;
    result.distances.resize(n_trials);
    parallel_for(
        n_trials,
        [&](std::size_t t) {
            RngStream rng = root.split(t);
            const BipartiteState psi = shell.sample_uniform(rng);
            result.distances[t] =
                trace_norm(partial_trace_2(psi).matrix() - target.matrix());
        },
        options.workers);

    const auto d_r = static_cast<double>(shell.dim());
    result.scale = static_cast<double>(shell.d1()) / std::sqrt(d_r);
    result.mean = stats::mean(result.distances);
    result.q10 = stats::quantile(result.distances, 0.1);
    result.median = stats::median(result.distances);
    result.q90 = stats::quantile(result.distances, 0.9);

    constexpr double kPiCubed =
        std::numbers::pi * std::numbers::pi * std::numbers::pi;
    for (double eta : eta_grid) {
        EtaCheck check{};
        check.eta = eta;
        check.threshold = eta + result.scale;
        const auto exceed =
            std::count_if(result.distances.begin(), result.distances.end(),
                          [&](double d) { return d >= check.threshold; });
        check.exceedance =
            static_cast<double>(exceed) / static_cast<double>(n_trials);
        check.bound = 4.0 * std::exp(-d_r * eta * eta / (18.0 * kPiCubed));
        check.standard_error =
            stats::binomial_standard_error(std::min(check.bound, 1.0), n_trials);
        result.checks.push_back(check);
    }
    return result;
}

CanonicalTypicalityResult canonical_typicality_experiment(
    const RngStream &root, const Shell &shell, std::size_t n_trials,
    const ExperimentOptions &options) {
    return canonical_typicality_experiment(root, shell, n_trials,
                                           default_eta_grid(), options);
}

namespace {

TheoremResult shell_trials(const RngStream &root, const Shell &shell,
                           const DensityMatrix &target, const TestFunction &f,
                           double threshold, std::size_t n_trials,
                           const ExperimentOptions &options) {
    require_dimension(f, shell.d1());
    TheoremResult result;
    std::tie(result.reference, result.reference_error) =
        gap_reference(root, target, f, reference_budget(options, n_trials));
    result.threshold = threshold;
    result.target_distance = kNotApplicable;
    result.records.resize(n_trials);

    parallel_for(
        n_trials,
        [&](std::size_t t) {
            RngStream rng = root.split(t);
            const BipartiteState psi = shell.sample_uniform(rng);
            const OrthonormalSystem basis = random_onb(rng, shell.d2());
            const double value = integrate(mu1(psi, basis), f);
            auto &record = result.records[t];
            record.trial = t;
            record.value = value;
            record.discrepancy = std::abs(value - result.reference);
            record.pass = record.discrepancy < result.threshold;
            record.trace_distance =
                trace_norm(partial_trace_2(psi).matrix() - target.matrix());
        },
        options.workers);
    return result;
}

} // namespace

TheoremResult theorem3_experiment(const RngStream &root, const Shell &shell,
                                  const TestFunction &f, double epsilon,
                                  std::size_t n_trials,
                                  const ExperimentOptions &options) {
    require_epsilon(epsilon);
    return shell_trials(root, shell, shell.reduced_state(), f, epsilon,
                        n_trials, options);
}

TheoremResult theorem4_experiment(const RngStream &root, const Shell &shell,
                                  const DensityMatrix &omega,
                                  const TestFunction &f, double epsilon,
                                  std::size_t n_trials,
                                  const ExperimentOptions &options) {
    require_epsilon(epsilon);
    if (omega.dim() != shell.d1()) {
        throw DimensionError("theorem4: Omega must act on H1");
    }
    if (!(omega.min_eigenvalue() > kSupportTolerance)) {
        throw DomainError("theorem4: Omega must have strictly positive "
                          "eigenvalues");
    }
    TheoremResult result = shell_trials(root, shell, omega, f,
                                        epsilon * f.bound(), n_trials, options);
    result.target_distance =
        trace_norm(shell.reduced_state().matrix() - omega.matrix());
    return result;
}

} // namespace gaplab

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

#include "harness/runner.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "gaplab/conditional.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/parallel.hpp"
#include "gaplab/stats.hpp"
#include "gaplab/typicality.hpp"

namespace gaplab::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kShellStream = kReferenceStream + 1;
constexpr std::uint64_t kStateStream = kReferenceStream + 2;

/// Asymptotic 1% critical value of the one-sample KS statistic times sqrt(n).
constexpr double kKsCritical = 1.6276;

struct Context {
    const ExperimentConfig &config;
    ExperimentOptions options;
};

Json eigenvalues_json(const DensityMatrix &rho) {
    Json out = Json::array();
    for (Index i = 0; i < rho.spectrum().values.size(); ++i) {
        out.push_back(rho.spectrum().values[i]);
    }
    return out;
}

void add_theorem(SweepPoint &point, const TheoremResult &r) {
    for (const auto &rec : r.records) {
        point.rows.push_back({rec.trial, rec.discrepancy, rec.pass, rec.value, rec.trace_distance});
    }
    point.details["reference"] = r.reference;
    point.details["reference_error"] = r.reference_error;
    point.details["threshold"] = r.threshold;
    point.details["target_distance"] = r.target_distance;
}

Shell make_shell(const Context &ctx, const PlannedPoint &p, const RngStream &root) {
    const auto &c = ctx.config;
    if (c.shell == "full") {
        const Index n = c.d1 * p.d2;
        return Shell(c.d1, p.d2, CMatrix::Identity(n, n));
    }
    RngStream rng = root.split(kShellStream);
    return random_subspace(rng, c.d1, p.d2, p.dR);
}

SweepPoint run_theorem12(const Context &ctx, const PlannedPoint &p, const RngStream &root) {
    const auto &c = ctx.config;
    const auto rho = c.rho.build();
    const auto f = c.f.build(c.d1);
    SweepPoint point;
    point.dim = p.dim;
    if (c.experiment == ExperimentKind::theorem1) {
        add_theorem(point, theorem1_experiment(root, rho, p.d2, f, c.epsilon, c.n_trials,
                                               ctx.options));
    } else {
        RngStream rng = root.split(kStateStream);
        const auto psi = sample_u_rho1(rng, rho, p.d2);
        add_theorem(point, theorem2_experiment(root, psi, f, c.epsilon, c.n_trials, ctx.options));
        point.details["frozen_state_reduced_spectrum"] = eigenvalues_json(partial_trace_2(psi));
    }
    point.details["d2"] = p.d2;
    point.details["f"] = f.describe();
    return point;
}

SweepPoint run_theorem34(const Context &ctx, const PlannedPoint &p, const RngStream &root) {
    const auto &c = ctx.config;
    const auto shell = make_shell(ctx, p, root);
    const auto f = c.f.build(c.d1);
    SweepPoint point;
    point.dim = p.dim;
    if (c.experiment == ExperimentKind::theorem3) {
        add_theorem(point, theorem3_experiment(root, shell, f, c.epsilon, c.n_trials, ctx.options));
    } else {
        const auto omega = c.omega ? c.omega->build() : shell.reduced_state();
        add_theorem(point,
                    theorem4_experiment(root, shell, omega, f, c.epsilon, c.n_trials, ctx.options));
    }
    point.details["d2"] = p.d2;
    point.details["shell_dim"] = shell.dim();
    point.details["shell_reduced_spectrum"] = eigenvalues_json(shell.reduced_state());
    point.details["f"] = f.describe();
    return point;
}

SweepPoint run_canonical(const Context &ctx, const PlannedPoint &p, const RngStream &root) {
    const auto &c = ctx.config;
    const auto shell = make_shell(ctx, p, root);
    const auto grid = c.eta_grid.empty() ? default_eta_grid() : c.eta_grid;
    const auto r = canonical_typicality_experiment(root, shell, c.n_trials, grid, ctx.options);
    SweepPoint point;
    point.dim = p.dim;
    for (std::size_t t = 0; t < r.distances.size(); ++t) {
        const double d = r.distances[t];
        point.rows.push_back({t, d, d < r.scale + c.epsilon, r.scale, kNaN});
    }
    point.details["d2"] = p.d2;
    point.details["shell_dim"] = shell.dim();
    point.details["scale"] = r.scale;
    point.details["mean_distance"] = r.mean;
    point.details["bound_respected"] = r.bound_respected();
    Json checks = Json::array();
    for (const auto &check : r.checks) {
        checks.push_back({{"eta", check.eta},
                          {"threshold", check.threshold},
                          {"exceedance", check.exceedance},
                          {"bound", check.bound},
                          {"standard_error", check.standard_error},
                          {"within_bound", check.within_bound()}});
    }
    point.details["eta_checks"] = std::move(checks);
    return point;
}

SweepPoint run_thermal(const Context &ctx, const RngStream &root) {
    const auto &c = ctx.config;
    const auto bath = evenly_spaced_levels(c.bath.count, c.bath.min, c.bath.max);
    const auto ms = microcanonical_shell(c.system_levels, bath, c.energy, c.energy_width);
    const auto fit = fit_beta(c.system_levels, ms.reduced_state());
    const auto omega = canonical_density(c.system_levels, fit.beta);
    const auto f = c.f.build(c.d1);
    SweepPoint point;
    point.dim = ms.dim();
    add_theorem(point,
                theorem4_experiment(root, ms.shell, omega, f, c.epsilon, c.n_trials, ctx.options));
    point.details["beta"] = fit.beta;
    point.details["fit_trace_distance"] = fit.residual;
    point.details["shell_dim"] = ms.dim();
    point.details["occupation"] = ms.occupation;
    point.details["f"] = f.describe();
    return point;
}

std::vector<SweepPoint> run_submatrix(const Context &ctx, const RngStream &root) {
    const auto &c = ctx.config;
    const auto results =
        submatrix_convergence_experiment(root, c.k, c.n_values, c.n_samples, ctx.options);
    const double critical = kKsCritical / std::sqrt(static_cast<double>(c.n_samples));
    std::vector<SweepPoint> points;
    for (const auto &r : results) {
        SweepPoint point;
        point.dim = r.n;
        for (std::size_t e = 0; e < r.entry_ks.size(); ++e) {
            point.rows.push_back({e, r.entry_ks[e], r.entry_ks[e] < critical,
                                  r.l1_distance.value_or(kNaN), r.max_expectation_gap});
        }
        point.details["ks_critical_1pct"] = critical;
        point.details["l1_distance"] = r.l1_distance ? Json(*r.l1_distance) : Json(nullptr);
        point.details["mass"] = r.mass ? Json(*r.mass) : Json(nullptr);
        Json gaps = Json::array();
        for (const auto &g : r.expectation_gaps) {
            gaps.push_back({{"name", g.name},
                            {"sampled", g.sampled},
                            {"gaussian", g.gaussian},
                            {"standard_error", g.standard_error}});
        }
        point.details["expectation_gaps"] = std::move(gaps);
        points.push_back(std::move(point));
    }
    return points;
}

SweepPoint run_continuity(const Context &ctx, const RngStream &root) {
    const auto &c = ctx.config;
    const auto f = c.f.build(c.d1);
    const auto r = continuity_probe(root, c.d1, c.gamma, c.n_trials, c.n_samples, f, ctx.options);
    SweepPoint point;
    point.dim = c.d1;
    for (std::size_t t = 0; t < r.pairs.size(); ++t) {
        const auto &pair = r.pairs[t];
        point.rows.push_back({t, pair.sup_density_gap, pair.expectation_gap < c.epsilon * f.bound(),
                              pair.trace_distance, pair.expectation_gap});
    }
    point.details["gamma"] = c.gamma;
    point.details["spearman"] = r.spearman;
    point.details["median_gap_ratio"] = r.median_gap_ratio;
    point.details["f"] = f.describe();
    return point;
}

/// Per trial: covariance of n_samples GAP draws against rho, and the Monte
/// Carlo mean of f against its closed form.
SweepPoint run_gap_selftest(const Context &ctx, const RngStream &root) {
    const auto &c = ctx.config;
    const auto rho = c.rho.build();
    const auto f = c.f.build(c.d1);
    const auto closed = f.gap_closed_form(rho);
    const GapSampler sampler(rho);
    SweepPoint point;
    point.dim = c.d1;
    point.rows.resize(c.n_trials);
    parallel_for(
        c.n_trials,
        [&](std::size_t t) {
            RngStream rng = root.split(t);
            std::vector<CVector> samples;
            std::vector<double> values;
            samples.reserve(c.n_samples);
            values.reserve(c.n_samples);
            for (std::size_t s = 0; s < c.n_samples; ++s) {
                samples.push_back(sampler.sample_gap(rng).vector.amplitudes());
                values.push_back(f(samples.back()));
            }
            const double error = max_abs_difference(covariance_estimate(samples), rho.matrix());
            const double estimate = stats::mean(values);
            const double se = stats::standard_error(values);
            const double z = closed && se > 0.0 ? (estimate - *closed) / se : kNaN;
            point.rows[t] = {t, error, error < c.epsilon, estimate, z};
        },
        ctx.options.workers);
    point.details["closed_form"] = closed ? Json(*closed) : Json(nullptr);
    if (rho.min_eigenvalue() > kSupportTolerance) {
        // Mean of the sphere density over uniform points should be one.
        const GapSphereDensity density(rho);
        RngStream rng = root.split(kReferenceStream);
        std::vector<double> values(c.n_samples);
        for (auto &v : values) {
            v = density(uniform_sphere(rng, c.d1).amplitudes());
        }
        point.details["sphere_density_mean"] = stats::mean(values);
        point.details["sphere_density_standard_error"] = stats::standard_error(values);
    } else {
        point.details["sphere_density_mean"] = nullptr;
        point.details["sphere_density_standard_error"] = nullptr;
    }
    point.details["f"] = f.describe();
    return point;
}

std::pair<const char *, const char *> column_names(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::canonical_typicality:
        return {"scale_d1_over_sqrt_dR", "unused"};
    case ExperimentKind::submatrix:
        return {"l1_distance", "max_expectation_gap"};
    case ExperimentKind::continuity:
        return {"trace_distance", "expectation_gap"};
    case ExperimentKind::gap_selftest:
        return {"f_estimate", "f_z_score"};
    default:
        return {"mu1_value", "reduced_trace_distance"};
    }
}

} // namespace

std::vector<PlannedPoint> schedule(const ExperimentConfig &c) {
    const auto natural_dim = [&](Index d2, Index dR) -> std::int64_t {
        switch (c.experiment) {
        case ExperimentKind::theorem1:
        case ExperimentKind::theorem2:
            return d2;
        case ExperimentKind::theorem3:
        case ExperimentKind::theorem4:
        case ExperimentKind::canonical_typicality:
            return c.shell == "full" ? c.d1 * d2 : dR;
        default:
            return c.d1;
        }
    };
    if (!c.sweep) {
        const Index dR = c.shell == "full" ? c.d1 * c.d2 : c.dR;
        return {{natural_dim(c.d2, dR), c.d2, dR, 0}};
    }
    std::vector<PlannedPoint> plan;
    for (std::size_t i = 0; i < c.sweep->values.size(); ++i) {
        const Index v = c.sweep->values[i];
        Index d2 = c.d2;
        Index dR = c.dR;
        if (c.sweep->parameter == "d2" || c.sweep->parameter == "d2_dR") {
            d2 = v;
        }
        if (c.sweep->parameter == "dR" || c.sweep->parameter == "d2_dR") {
            dR = v;
        }
        if (c.shell == "full") {
            dR = c.d1 * d2;
        }
        plan.push_back({static_cast<std::int64_t>(v), d2, dR, i});
    }
    return plan;
}

ExperimentReport run(const ExperimentConfig &config, const RunOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    Context ctx{config, {options.workers, config.reference_samples}};
    ExperimentReport report;
    report.config = config;
    const auto [aux1, aux2] = column_names(config.experiment);
    report.aux1_name = aux1;
    report.aux2_name = aux2;
    const RngStream base(config.seed, 0);
    for (const auto &p : schedule(config)) {
        const RngStream root = config.sweep ? base.split(p.stream) : base;
        switch (config.experiment) {
        case ExperimentKind::theorem1:
        case ExperimentKind::theorem2:
            report.points.push_back(run_theorem12(ctx, p, root));
            break;
        case ExperimentKind::theorem3:
        case ExperimentKind::theorem4:
            report.points.push_back(run_theorem34(ctx, p, root));
            break;
        case ExperimentKind::canonical_typicality:
            report.points.push_back(run_canonical(ctx, p, root));
            break;
        case ExperimentKind::thermal:
            report.points.push_back(run_thermal(ctx, root));
            break;
        case ExperimentKind::submatrix:
            for (auto &point : run_submatrix(ctx, root)) {
                report.points.push_back(std::move(point));
            }
            break;
        case ExperimentKind::continuity:
            report.points.push_back(run_continuity(ctx, root));
            break;
        case ExperimentKind::gap_selftest:
            report.points.push_back(run_gap_selftest(ctx, root));
            break;
        }
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace gaplab::harness

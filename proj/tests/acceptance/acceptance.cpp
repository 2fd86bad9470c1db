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

// Acceptance suite: one PASS/FAIL line per criterion.
//
// The process exits 0 once every criterion has been evaluated, so a
// scientific FAIL is reported without breaking the build. Pass --strict to
// exit 1 when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gaplab/conditional.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/stats.hpp"
#include "gaplab/typicality.hpp"
#include "harness/presets.hpp"
#include "harness/report.hpp"
#include "harness/runner.hpp"
#include "support/oracles.hpp"

using namespace gaplab;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> body;
};

std::string fmt(const char *format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

DensityMatrix diag2(double a, double b) {
    const std::vector<double> p{a, b};
    return DensityMatrix::diagonal(p);
}

/// (I (x) U) psi.
BipartiteState apply_right(const BipartiteState &psi, const CMatrix &u) {
    const AmplitudeGrid rotated = psi.grid() * u.transpose();
    return BipartiteState::from_grid(rotated);
}

double atomwise_distance(const DiscreteMeasure &a, const DiscreteMeasure &b) {
    if (a.size() != b.size()) {
        return INFINITY;
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a.atoms()[j].weight - b.atoms()[j].weight));
        worst = std::max(worst, max_abs_difference(a.atoms()[j].vector, b.atoms()[j].vector));
    }
    return worst;
}

Outcome exact_identities() {
    RngStream rng(1001, 0);
    double tilde = 0.0;
    double round_trip = 0.0;
    double mass = 0.0;
    double equivariance = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Index d1 = 2 + static_cast<Index>(rng.below(2));
        const Index d2 = rng.below(2) == 0 ? 8 : 32;
        const auto psi = testing::random_bipartite(rng, d1, d2);
        const auto basis = random_onb(rng, d2);
        const auto t = mu1_tilde(psi, basis);
        const auto m = mu1(psi, basis);
        tilde = std::max(tilde, std::abs(t.second_moment() - 1.0));
        mass = std::max(mass, std::abs(m.total_mass() - 1.0));
        round_trip = std::max(round_trip, atomwise_distance(project(adjust(t)), m));
        const CMatrix u = haar_unitary(rng, d2).matrix();
        const OrthonormalSystem rotated(u.adjoint() * basis.matrix());
        equivariance = std::max(
            equivariance, atomwise_distance(mu1(psi, rotated), mu1(apply_right(psi, u), basis)));
    }
    const double worst = std::max({tilde, round_trip, mass, equivariance});
    return {worst < 1e-10,
            fmt("1000 states: |tilde 2nd moment - 1| %.1e, project(adjust) %.1e, "
                "|mass - 1| %.1e, equivariance %.1e",
                tilde, round_trip, mass, equivariance)};
}

Outcome gap_covariance() {
    RngStream rng(1002, 0);
    double worst_cov = 0.0;
    double worst_z = 0.0;
    for (int r = 0; r < 5; ++r) {
        const auto rho = testing::random_density(rng, 4);
        const auto f = TestFunction::overlap_sq(uniform_sphere(rng, 4).amplitudes());
        const GapSampler sampler(rho);
        std::vector<CVector> samples(100000);
        std::vector<double> values(samples.size());
        for (std::size_t s = 0; s < samples.size(); ++s) {
            samples[s] = sampler.sample_gap(rng).vector.amplitudes();
            values[s] = f(samples[s]);
        }
        worst_cov = std::max(worst_cov, max_abs_difference(covariance_estimate(samples), rho.matrix()));
        const double z = std::abs(stats::mean(values) - *f.gap_closed_form(rho)) /
                         stats::standard_error(values);
        worst_z = std::max(worst_z, z);
    }
    return {worst_cov < 0.01 && worst_z < 4.0,
            fmt("5 rho, d = 4, 1e5 samples: max entry error %.4f, max |z| %.2f", worst_cov,
                worst_z)};
}

Outcome sphere_density() {
    RngStream rng(1003, 0);
    double flat = 0.0;
    double worst_norm = 0.0;
    for (Index d : {2, 3, 4}) {
        const auto mixed = DensityMatrix::maximally_mixed(d);
        for (int i = 0; i < 1000; ++i) {
            flat = std::max(flat, std::abs(gap_sphere_density(mixed, uniform_sphere(rng, d)) - 1.0));
        }
        const auto rho = testing::random_density(rng, d);
        const DensityMatrix lifted(0.5 * rho.matrix() + 0.5 * mixed.matrix());
        const GapSphereDensity density(lifted);
        std::vector<double> w(100000);
        for (auto &x : w) {
            x = density(uniform_sphere(rng, d).amplitudes());
        }
        worst_norm = std::max(worst_norm, std::abs(stats::mean(w) - 1.0));
    }
    return {flat < 1e-10 && worst_norm < 0.02,
            fmt("|density(I/d) - 1| %.1e at 3000 points, |normalization - 1| %.4f", flat,
                worst_norm)};
}

Outcome ga_sampler() {
    RngStream rng(1004, 0);
    const auto rho = diag2(0.7, 0.3);
    std::vector<double> mixture(100000);
    for (auto &x : mixture) {
        x = sample_ga(rng, rho).squaredNorm();
    }
    const auto oracle = testing::rejection_ga_norms_sq(rng, rho, 100000);
    const auto test = stats::chi_square_two_sample(mixture, oracle, 32);
    return {test.p_value > 0.01,
            fmt("chi-square %.2f, p = %.3f (32 bins, 1e5 each)", test.statistic, test.p_value)};
}

Outcome theorem1_trend() {
    const RngStream root(1005, 0);
    const auto rho1 = diag2(0.7, 0.3);
    const CVector e1 = CVector::Unit(2, 0);
    std::vector<double> medians;
    std::vector<double> fractions;
    std::vector<double> x2_medians;
    for (Index d2 : {16, 64, 256}) {
        const auto point = root.split(static_cast<std::uint64_t>(d2));
        const auto r = theorem1_experiment(point, rho1, d2, TestFunction::overlap_sq(e1), 0.1, 500);
        medians.push_back(r.median_discrepancy());
        fractions.push_back(r.pass_fraction());
        x2_medians.push_back(theorem1_experiment(point, rho1, d2,
                                                 TestFunction::polynomial(e1, {0.0, 0.0, 1.0}),
                                                 0.1, 500)
                                 .median_discrepancy());
    }
    const bool decreasing = medians[1] < medians[0] && medians[2] < medians[1];
    return {fractions[1] >= 0.9 && decreasing,
            fmt("overlap_sq pass %.3f/%.3f/%.3f, medians %.2e/%.2e/%.2e (rounding level); "
                "f = x^2 medians %.2e/%.2e/%.2e",
                fractions[0], fractions[1], fractions[2], medians[0], medians[1], medians[2],
                x2_medians[0], x2_medians[1], x2_medians[2])};
}

Outcome theorem2_duality() {
    const RngStream root(1006, 0);
    const auto rho1 = diag2(0.7, 0.3);
    const auto f = TestFunction::polynomial(CVector::Unit(2, 0), {0.0, 0.0, 1.0});
    RngStream rng = root.split(1);
    const auto psi = sample_u_rho1(rng, rho1, 32);
    const auto fixed_basis = theorem1_experiment(root.split(2), rho1, 32, f, 0.1, 1000);
    const auto random_basis = theorem2_experiment(root.split(3), psi, f, 0.1, 1000);
    const auto test = stats::ks_two_sample(fixed_basis.discrepancies(), random_basis.discrepancies());
    return {test.p_value > 0.01,
            fmt("f = x^2, d2 = 32: KS %.4f, p = %.3f", test.statistic, test.p_value)};
}

Outcome tail_bound() {
    const RngStream root(1007, 0);
    RngStream rng = root.split(1);
    const auto shell = random_subspace(rng, 2, 50, 100);
    const auto r = canonical_typicality_experiment(root, shell, 1000);
    std::size_t within = 0;
    for (const auto &check : r.checks) {
        within += check.within_bound() ? 1 : 0;
    }
    return {r.bound_respected() && r.checks.size() == 10 && r.mean < 0.4,
            fmt("%zu/%zu eta within bound, mean distance %.4f", within, r.checks.size(), r.mean)};
}

Outcome submatrix_convergence() {
    const RngStream root(1008, 0);
    const std::vector<Index> ns{4, 16, 64, 256};
    bool decreasing = true;
    double worst_mass = 0.0;
    double previous = INFINITY;
    std::string l1s;
    for (Index n : ns) {
        const double l1 = submatrix_k1_l1_distance(n);
        decreasing = decreasing && l1 < previous;
        previous = l1;
        worst_mass = std::max(worst_mass, std::abs(submatrix_k1_mass(n) - 1.0));
        l1s += fmt("%s%.4f", l1s.empty() ? "" : "/", l1);
    }
    const std::vector<Index> last{256};
    const auto points = submatrix_convergence_experiment(root, 1, last, 10000);
    const double ks = points[0].max_ks;
    return {decreasing && worst_mass < 1e-6 && ks < 0.02,
            fmt("L1 %s, |mass - 1| %.1e, KS at n = 256 %.4f", l1s.c_str(), worst_mass, ks)};
}

Outcome thermal() {
    const auto config = harness::parse_config_text(harness::find_preset("thermal-twolevel")->json);
    const auto report = harness::run(config);
    const auto &point = report.points[0];
    const double fit = point.details["fit_trace_distance"].get<double>();
    const double fraction = point.summary().pass_fraction;
    return {fit < 0.05 && fraction >= 0.85,
            fmt("dR = %lld, beta %.2e, fit distance %.1e, overlap_sq pass fraction %.3f "
                "(need 0.85)",
                static_cast<long long>(point.dim), point.details["beta"].get<double>(), fit,
                fraction)};
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Outcome reproducibility() {
    namespace fs = std::filesystem;
    const auto config = harness::parse_config_text(harness::find_preset("theorem1-sweep")->json);
    const auto base = fs::temp_directory_path() / "gaplab_acceptance";
    fs::remove_all(base);
    harness::write_report(harness::run(config), base / "a");
    harness::write_report(harness::run(config), base / "b");
    const auto a = read_file(base / "a" / "trials.csv");
    const auto b = read_file(base / "b" / "trials.csv");
    fs::remove_all(base);
    return {!a.empty() && a == b, fmt("%zu bytes, identical: %s", a.size(), a == b ? "yes" : "no")};
}

} // namespace

int main(int argc, char **argv) {
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<Criterion> criteria{
        {1, "exact identities", 60, exact_identities},
        {2, "GAP covariance", 120, gap_covariance},
        {3, "GAP sphere density", 60, sphere_density},
        {4, "GA sampler vs rejection", 60, ga_sampler},
        {5, "conditional measure trend in d2", 300, theorem1_trend},
        {6, "fixed basis vs fixed state duality", 120, theorem2_duality},
        {7, "reduced state tail bound", 180, tail_bound},
        {8, "submatrix convergence", 120, submatrix_convergence},
        {9, "thermal two-level shell", 300, thermal},
        {10, "reproducibility", 60, reproducibility},
    };
    int passed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.body();
        } catch (const std::exception &e) {
            outcome = {false, std::string("error: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = outcome.pass && seconds < c.limit_seconds;
        passed += ok ? 1 : 0;
        std::printf("%s criterion %d %s (%.1f s, limit %.0f s): %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name, seconds, c.limit_seconds, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", passed, criteria.size());
    return strict && passed != static_cast<int>(criteria.size()) ? 1 : 0;
}

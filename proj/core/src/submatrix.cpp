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

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gaplab/parallel.hpp"
#include "gaplab/stats.hpp"
#include "gaplab/typicality.hpp"

namespace gaplab {

namespace {

void require_regime(Index k, Index n) {
    if (k < 1 || n < 2 * k) {
        throw DomainError("submatrix: need k >= 1 and n >= 2k, got k=" +
                          std::to_string(k) + " n=" + std::to_string(n));
    }
}

/// ((n-1)/(pi n)) (1 - r^2/n)^{n-2} on r < sqrt(n).
double k1_density(double n, double r_sq) {
    if (r_sq >= n) {
        return 0.0;
    }
    const double base = 1.0 - r_sq / n;
    return (n - 1.0) / (std::numbers::pi * n) * std::pow(base, n - 2.0);
}

double gaussian_density(double r_sq) {
    return std::exp(-r_sq) / std::numbers::pi;
}

template <typename F> double radial_integral(F &&integrand, double upper) {
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
    return Quadrature::integrate(integrand, 0.0, upper, 20, 1e-14);
}

} // namespace

SubmatrixDensity submatrix_density(Index k, Index n, const CMatrix &x) {
    require_regime(k, n);
    if (x.rows() != k || x.cols() != k) {
        throw DimensionError("submatrix_density: X must be k x k");
    }
    const auto nd = static_cast<double>(n);
    SubmatrixDensity out{0.0, std::nullopt};
    Eigen::JacobiSVD<CMatrix> svd(x);
    const double op_norm = svd.singularValues()[0];
    if (op_norm < std::sqrt(nd)) {
        const CMatrix inner = CMatrix::Identity(k, k) - x * x.adjoint() / nd;
        const double det = inner.determinant().real();
        out.unnormalized = std::pow(det, static_cast<double>(n - 2 * k));
    }
    if (k == 1) {
        out.normalized = k1_density(nd, std::norm(x(0, 0)));
    }
    return out;
}

double submatrix_k1_mass(Index n) {
    require_regime(1, n);
    const auto nd = static_cast<double>(n);
    auto integrand = [&](double r) {
        return 2.0 * std::numbers::pi * r * k1_density(nd, r * r);
    };
    return radial_integral(integrand, std::sqrt(nd));
}

double submatrix_k1_l1_distance(Index n) {
    require_regime(1, n);
    const auto nd = static_cast<double>(n);
    auto integrand = [&](double r) {
        const double r_sq = r * r;
        return 2.0 * std::numbers::pi * r *
               std::abs(k1_density(nd, r_sq) - gaussian_density(r_sq));
    };
    // Beyond sqrt(n) only the Gaussian has mass: exactly exp(-n).
    return radial_integral(integrand, std::sqrt(nd)) + std::exp(-nd);
}

double ExpectationGap::gap() const { return std::abs(sampled - gaussian); }

std::vector<SubmatrixPoint> submatrix_convergence_experiment(
    const RngStream &root, Index k, std::span<const Index> n_values,
    std::size_t n_samples, const ExperimentOptions &options) {
    if (n_samples == 0) {
        throw DomainError("submatrix experiment: need at least one sample");
    }
    for (Index n : n_values) {
        require_regime(k, n);
    }
    const auto entries = static_cast<std::size_t>(k * k);
    const std::vector<double> cap_thresholds{0.5, 1.0, 2.0};
    std::vector<TestFunction> caps;
    for (double t : cap_thresholds) {
        caps.push_back(TestFunction::cap_indicator(CVector::Unit(k, 0), t));
    }

    std::vector<SubmatrixPoint> points;
    for (std::size_t p = 0; p < n_values.size(); ++p) {
        const Index n = n_values[p];
        const RngStream point_root = root.split(p);
        // modulus_sq[e][s]: |X_e|^2 for entry e of sample s.
        std::vector<std::vector<double>> modulus_sq(
            entries, std::vector<double>(n_samples));
        std::vector<std::vector<double>> g_values(
            caps.size() + 1, std::vector<double>(n_samples));
        const double scale = std::sqrt(static_cast<double>(n));
        parallel_for(
            n_samples,
            [&](std::size_t s) {
                RngStream rng = point_root.split(s);
                const CMatrix block =
                    scale * random_ons(rng, n, k).matrix().topRows(k);
                for (Index i = 0; i < k; ++i) {
                    for (Index j = 0; j < k; ++j) {
                        modulus_sq[static_cast<std::size_t>(i * k + j)][s] =
                            std::norm(block(i, j));
                    }
                }
                const CVector column = block.col(0);
                for (std::size_t c = 0; c < caps.size(); ++c) {
                    g_values[c][s] = caps[c](column);
                }
                g_values[caps.size()][s] = std::exp(-column.squaredNorm());
            },
            options.workers);

        SubmatrixPoint point;
        point.n = n;
        const auto exp_cdf = [](double x) {
            return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x);
        };
        for (const auto &sample : modulus_sq) {
            const double ks = stats::ks_one_sample(sample, exp_cdf).statistic;
            point.entry_ks.push_back(ks);
            point.max_ks = std::max(point.max_ks, ks);
        }
        if (k == 1) {
            point.l1_distance = submatrix_k1_l1_distance(n);
            point.mass = submatrix_k1_mass(n);
        }
        for (std::size_t c = 0; c < caps.size(); ++c) {
            point.expectation_gaps.push_back(
                {"cap(|v1|^2>=" + std::to_string(cap_thresholds[c]) + ")",
                 stats::mean(g_values[c]), std::exp(-cap_thresholds[c]),
                 stats::standard_error(g_values[c])});
        }
        point.expectation_gaps.push_back(
            {"exp(-|v|^2)", stats::mean(g_values[caps.size()]),
             std::pow(0.5, static_cast<double>(k)),
             stats::standard_error(g_values[caps.size()])});
        for (const auto &gap : point.expectation_gaps) {
            point.max_expectation_gap =
                std::max(point.max_expectation_gap, gap.gap());
        }
        points.push_back(std::move(point));
    }
    return points;
}

} // namespace gaplab

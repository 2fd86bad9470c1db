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
#include <vector>

#include "catch_amalgamated.hpp"

#include "gaplab/stats.hpp"
#include "gaplab/typicality.hpp"
#include "support/oracles.hpp"

using namespace gaplab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

CMatrix scalar(Complex x) {
    CMatrix m(1, 1);
    m(0, 0) = x;
    return m;
}

/// Trapezoid rule on a fine radial grid, independent of the library's
/// Gauss-Kronrod quadrature.
double trapezoid_l1(Index n) {
    const auto nd = static_cast<double>(n);
    const double upper = std::max(std::sqrt(nd), 8.0);
    constexpr int steps = 400000;
    const double h = upper / steps;
    double total = 0.0;
    for (int s = 0; s <= steps; ++s) {
        const double r = s * h;
        const double r_sq = r * r;
        const double f_n = r_sq < nd ? (nd - 1.0) / (std::numbers::pi * nd) *
                                           std::pow(1.0 - r_sq / nd, nd - 2.0)
                                     : 0.0;
        const double g = std::exp(-r_sq) / std::numbers::pi;
        const double w = (s == 0 || s == steps) ? 0.5 : 1.0;
        total += w * 2.0 * std::numbers::pi * r * std::abs(f_n - g);
    }
    return total * h + (upper > std::sqrt(nd) ? 0.0 : std::exp(-nd));
}

} // namespace

TEST_CASE("submatrix_density", "[submatrix]") {
    SECTION("k = 1, n = 2 at the origin") {
        const auto d = submatrix_density(1, 2, scalar(0.0));
        REQUIRE_THAT(*d.normalized, WithinAbs(1.0 / (2.0 * std::numbers::pi), 1e-15));
        REQUIRE(d.unnormalized == 1.0);
    }
    SECTION("large n approaches the Gaussian density") {
        const auto d = submatrix_density(1, 1000000, scalar(0.0));
        REQUIRE_THAT(*d.normalized, WithinAbs(1.0 / std::numbers::pi, 1e-5));
    }
    SECTION("outside the operator-norm ball") {
        REQUIRE(submatrix_density(1, 4, scalar(2.0)).unnormalized == 0.0);
        REQUIRE(*submatrix_density(1, 4, scalar(Complex(0.0, 2.5))).normalized == 0.0);
        CMatrix x = CMatrix::Zero(2, 2);
        x(0, 1) = 3.0;
        REQUIRE(submatrix_density(2, 8, x).unnormalized == 0.0);
        REQUIRE_FALSE(submatrix_density(2, 8, x).normalized);
    }
    SECTION("k = 1 normalized is the unnormalized value times (n-1)/(pi n)") {
        for (double r : {0.0, 0.3, 1.1, 2.2}) {
            const auto d = submatrix_density(1, 9, scalar(r));
            REQUIRE_THAT(*d.normalized, WithinRel(d.unnormalized * 8.0 / (9.0 * std::numbers::pi), 1e-13));
        }
    }
    SECTION("k = 2 determinant formula") {
        CMatrix x(2, 2);
        x << Complex(0.3, 0.1), Complex(-0.2, 0.0), Complex(0.0, 0.4), Complex(0.5, -0.1);
        // det(I - X X^* / n)^{n - 2k} by the explicit 2 x 2 determinant.
        const double n = 10.0;
        const CMatrix m = CMatrix::Identity(2, 2) - x * x.adjoint() / n;
        const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
        REQUIRE_THAT(submatrix_density(2, 10, x).unnormalized, WithinRel(std::pow(det, 6.0), 1e-13));
    }
    SECTION("regime and shape") {
        REQUIRE_THROWS_AS(submatrix_density(2, 3, CMatrix::Zero(2, 2)), DomainError);
        REQUIRE_THROWS_AS(submatrix_density(1, 4, CMatrix::Zero(2, 2)), DimensionError);
    }
}

TEST_CASE("k = 1 quadrature", "[submatrix]") {
    double previous = 2.0;
    for (Index n : {4, 16, 64, 256}) {
        REQUIRE_THAT(submatrix_k1_mass(n), WithinAbs(1.0, 1e-6));
        const double l1 = submatrix_k1_l1_distance(n);
        REQUIRE(l1 < previous);
        REQUIRE_THAT(l1, WithinAbs(trapezoid_l1(n), 1e-6));
        previous = l1;
    }
    REQUIRE_THROWS_AS(submatrix_k1_mass(1), DomainError);
}

TEST_CASE("submatrix convergence experiment", "[submatrix]") {
    const RngStream root(91, 0);

    SECTION("k = 1") {
        const std::vector<Index> ns{4, 16, 64, 256};
        const auto points = submatrix_convergence_experiment(root, 1, ns, 10000);
        REQUIRE(points.size() == 4);
        for (std::size_t p = 1; p < points.size(); ++p) {
            REQUIRE(*points[p].l1_distance < *points[p - 1].l1_distance);
        }
        REQUIRE(points[3].entry_ks.size() == 1);
        REQUIRE(points[3].max_ks < 0.02);
        for (const auto &gap : points[3].expectation_gaps) {
            REQUIRE(gap.gap() < 4.0 * gap.standard_error + 1.0 / 256.0);
        }
        // At n = 4, E exp(-|x|^2) = 3 int_0^1 (1-u)^2 e^{-4u} du
        // = 3 (5 - e^{-4}) / 32, visibly below the Gaussian value 1/2.
        const auto &exp_gap = points[0].expectation_gaps.back();
        const double exact = 3.0 * (5.0 - std::exp(-4.0)) / 32.0;
        REQUIRE(std::abs(exp_gap.sampled - exact) < 4.0 * exp_gap.standard_error);
        REQUIRE(exp_gap.gaussian == 0.5);
        REQUIRE(exp_gap.gap() > 5.0 * exp_gap.standard_error);
    }
    SECTION("k = 2 entries") {
        const std::vector<Index> ns{8, 128};
        const auto points = submatrix_convergence_experiment(root, 2, ns, 5000);
        REQUIRE(points[0].entry_ks.size() == 4);
        REQUIRE_FALSE(points[0].l1_distance);
        REQUIRE(points[1].max_ks < points[0].max_ks);
    }
    SECTION("columns are exchangeable") {
        RngStream rng = root.split(99);
        std::vector<double> first(10000);
        std::vector<double> second(10000);
        for (std::size_t s = 0; s < first.size(); ++s) {
            const CMatrix block = random_ons(rng, 16, 2).matrix().topRows(2) * 4.0;
            first[s] = std::norm(block(0, 0));
            second[s] = std::norm(block(0, 1));
        }
        REQUIRE(stats::ks_two_sample(first, second).p_value > 0.01);
    }
    SECTION("regime") {
        const std::vector<Index> ns{3};
        REQUIRE_THROWS_AS(submatrix_convergence_experiment(root, 2, ns, 10), DomainError);
    }
}

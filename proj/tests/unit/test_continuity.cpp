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
#include <vector>

#include "catch_amalgamated.hpp"

#include "gaplab/stats.hpp"
#include "gaplab/typicality.hpp"
#include "support/oracles.hpp"

using namespace gaplab;
using Catch::Matchers::WithinAbs;

TEST_CASE("identical states have no gap", "[continuity]") {
    RngStream rng(101, 0);
    const std::vector<double> p{0.6, 0.4};
    const auto rho = DensityMatrix::from_spectrum(p, haar_unitary(rng, 2).matrix());
    std::vector<CVector> probes;
    for (int i = 0; i < 200; ++i) {
        probes.push_back(uniform_sphere(rng, 2).amplitudes());
    }
    const auto pair = compare_gap_measures(rho, rho, probes,
                                           TestFunction::overlap_sq(CVector::Unit(2, 0)));
    REQUIRE(pair.trace_distance == 0.0);
    REQUIRE(pair.sup_density_gap == 0.0);
    REQUIRE(pair.expectation_gap == 0.0);
}

TEST_CASE("importance estimate of the expectation gap", "[continuity]") {
    // For overlap_sq the exact gap is |<phi|rho - omega|phi>|.
    RngStream rng(102, 0);
    const std::vector<double> a{0.7, 0.3};
    const std::vector<double> b{0.45, 0.55};
    const auto rho = DensityMatrix::diagonal(a);
    const auto omega = DensityMatrix::diagonal(b);
    std::vector<CVector> probes;
    for (int i = 0; i < 100000; ++i) {
        probes.push_back(uniform_sphere(rng, 2).amplitudes());
    }
    const auto pair = compare_gap_measures(rho, omega, probes,
                                           TestFunction::overlap_sq(CVector::Unit(2, 0)));
    REQUIRE_THAT(pair.trace_distance, WithinAbs(0.5, 1e-15));
    REQUIRE_THAT(pair.expectation_gap, WithinAbs(0.25, 0.01));
    REQUIRE_THROWS_AS(compare_gap_measures(rho, DensityMatrix::maximally_mixed(3), probes,
                                           TestFunction::overlap_sq(CVector::Unit(2, 0))),
                      DimensionError);
}

TEST_CASE("density gap tracks trace distance", "[continuity]") {
    const RngStream root(103, 0);
    const auto r = continuity_probe(root, 2, 0.1, 200);
    REQUIRE(r.pairs.size() == 200);
    REQUIRE(r.spearman > 0.8);
    for (const auto &pair : r.pairs) {
        REQUIRE_THAT(pair.omega_min_eigenvalue, WithinAbs(0.1, 1e-12));
        REQUIRE(pair.trace_distance > 0.0);
    }
}

TEST_CASE("continuity degrades near the boundary", "[continuity]") {
    const RngStream root(104, 0);
    const auto tight = continuity_probe(root, 2, 0.001, 200, 2000);
    const auto loose = continuity_probe(root, 2, 0.2, 200, 2000);
    // Gap per unit trace distance.
    REQUIRE(tight.median_gap_ratio >= 10.0 * loose.median_gap_ratio);
}

TEST_CASE("continuity_probe validation", "[continuity]") {
    const RngStream root(105, 0);
    REQUIRE_THROWS_AS(continuity_probe(root, 2, 0.0, 10), DomainError);
    REQUIRE_THROWS_AS(continuity_probe(root, 2, 0.5, 10), DomainError);
    REQUIRE_THROWS_AS(continuity_probe(root, 2, 0.1, 0), DomainError);
}

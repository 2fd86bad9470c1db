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

#include "gaplab/errors.hpp"
#include "gaplab/randomness.hpp"
#include "gaplab/stats.hpp"
#include "support/oracles.hpp"

using namespace gaplab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("moments and quantiles", "[stats]") {
    const std::vector<double> xs{4.0, 1.0, 3.0, 2.0};
    REQUIRE(stats::mean(xs) == 2.5);
    REQUIRE_THAT(stats::standard_error(xs),
                 WithinAbs(std::sqrt(5.0 / 3.0 / 4.0), 1e-15));
    REQUIRE(stats::median(xs) == 2.5);
    REQUIRE(stats::quantile(xs, 0.0) == 1.0);
    REQUIRE(stats::quantile(xs, 1.0) == 4.0);
    REQUIRE_THAT(stats::quantile(xs, 0.1), WithinAbs(1.3, 1e-15));
    REQUIRE_THROWS_AS(stats::mean(std::vector<double>{}), DomainError);
    REQUIRE_THROWS_AS(stats::quantile(xs, 1.5), DomainError);
    REQUIRE_THAT(stats::binomial_standard_error(0.5, 100), WithinAbs(0.05, 1e-15));
}

TEST_CASE("Kolmogorov survival function", "[stats]") {
    // Tabulated values of the asymptotic Kolmogorov distribution.
    REQUIRE_THAT(stats::kolmogorov_survival(1.0), WithinAbs(0.2699996716, 1e-9));
    REQUIRE_THAT(stats::kolmogorov_survival(1.36), WithinAbs(0.0494, 5e-4));
    REQUIRE_THAT(stats::kolmogorov_survival(1.63), WithinAbs(0.0098, 3e-4));
    REQUIRE(stats::kolmogorov_survival(0.0) == 1.0);
    REQUIRE(stats::kolmogorov_survival(10.0) < 1e-80);
}

TEST_CASE("KS tests detect shifts and accept matching laws", "[stats]") {
    RngStream rng(31, 0);
    std::vector<double> a(5000);
    std::vector<double> b(5000);
    std::vector<double> shifted(5000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = rng.exponential();
        b[i] = rng.exponential();
        shifted[i] = rng.exponential() * 1.1;
    }
    REQUIRE(stats::ks_one_sample(a, testing::exp1_cdf).p_value > 0.01);
    REQUIRE(stats::ks_two_sample(a, b).p_value > 0.01);
    REQUIRE(stats::ks_two_sample(a, shifted).p_value < 1e-3);

    // Statistic of a tiny sample computed by hand: sorted {0.1, 0.6} vs U(0,1)
    // has D = max(0.5 - 0.1, 1 - 0.6, 0.6 - 0.5, 0.1) = 0.4.
    const std::vector<double> tiny{0.6, 0.1};
    const auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    REQUIRE_THAT(stats::ks_one_sample(tiny, uniform_cdf).statistic,
                 WithinAbs(0.4, 1e-15));
    // Disjoint samples have D = 1.
    REQUIRE(stats::ks_two_sample(std::vector<double>{1.0, 2.0},
                                 std::vector<double>{3.0, 4.0})
                .statistic == 1.0);
}

TEST_CASE("chi-square p-values", "[stats]") {
    // Pearson statistic ((60-50)^2 + (40-50)^2) / 50 = 4 on 1 dof.
    const std::vector<double> observed{60.0, 40.0};
    const std::vector<double> expected{50.0, 50.0};
    const auto r = stats::chi_square_counts(observed, expected);
    REQUIRE_THAT(r.statistic, WithinAbs(4.0, 1e-12));
    REQUIRE_THAT(r.p_value, WithinAbs(0.0455003, 1e-6));

    RngStream rng(32, 0);
    std::vector<double> a(20000);
    std::vector<double> b(20000);
    std::vector<double> c(20000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = rng.normal();
        b[i] = rng.normal();
        c[i] = rng.normal() * 1.1;
    }
    REQUIRE(stats::chi_square_two_sample(a, b, 32).p_value > 0.01);
    REQUIRE(stats::chi_square_two_sample(a, c, 32).p_value < 1e-3);
}

TEST_CASE("ranks and Spearman correlation", "[stats]") {
    const std::vector<double> xs{10.0, 30.0, 20.0, 20.0};
    const auto r = stats::ranks(xs);
    REQUIRE(r == std::vector<double>{1.0, 4.0, 2.5, 2.5});

    const std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
    const std::vector<double> up{2.0, 4.0, 9.0, 16.0, 100.0};
    const std::vector<double> down{5.0, 4.0, 3.0, 2.0, 1.0};
    REQUIRE_THAT(stats::spearman(x, up), WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(stats::spearman(x, down), WithinAbs(-1.0, 1e-15));
    // d = (0, 0, 1, -1, 0): 1 - 6 * 2 / (5 * 24) = 0.9.
    const std::vector<double> swapped{1.0, 2.0, 4.0, 3.0, 5.0};
    REQUIRE_THAT(stats::spearman(x, swapped), WithinAbs(0.9, 1e-15));
}

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
#include <functional>
#include <span>
#include <vector>

namespace gaplab::stats {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

[[nodiscard]] double mean(std::span<const double> xs);
/// Standard error of the mean (sample standard deviation / sqrt(n)).
[[nodiscard]] double standard_error(std::span<const double> xs);
/// Linear-interpolation quantile (type 7), q in [0, 1].
[[nodiscard]] double quantile(std::span<const double> xs, double q);
[[nodiscard]] double median(std::span<const double> xs);
[[nodiscard]] double binomial_standard_error(double p, std::size_t n);

/// Kolmogorov survival function Q_KS(lambda) = 2 sum (-1)^{k-1} e^{-2k^2 lambda^2}.
[[nodiscard]] double kolmogorov_survival(double lambda);

/// One-sample KS test of `xs` against a continuous CDF.
[[nodiscard]] TestResult ks_one_sample(std::span<const double> xs,
                                       const std::function<double(double)> &cdf);
[[nodiscard]] TestResult ks_two_sample(std::span<const double> a,
                                       std::span<const double> b);

/// Two-sample chi-square homogeneity test on `bins` bins whose edges are
/// quantiles of the pooled sample.
[[nodiscard]] TestResult chi_square_two_sample(std::span<const double> a,
                                               std::span<const double> b,
                                               std::size_t bins);

/// Pearson goodness-of-fit of observed counts against expected counts.
[[nodiscard]] TestResult chi_square_counts(std::span<const double> observed,
                                           std::span<const double> expected);

/// Spearman rank correlation (average ranks for ties).
[[nodiscard]] double spearman(std::span<const double> x,
                              std::span<const double> y);

[[nodiscard]] std::vector<double> ranks(std::span<const double> xs);

} // namespace gaplab::stats

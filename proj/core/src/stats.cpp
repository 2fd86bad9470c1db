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

#include "gaplab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "gaplab/errors.hpp"

namespace gaplab::stats {

namespace {

void require_nonempty(std::span<const double> xs, const char *what) {
    if (xs.empty()) {
        throw DomainError(std::string(what) + ": empty sample");
    }
}

std::vector<double> sorted(std::span<const double> xs) {
    std::vector<double> out(xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

double mean(std::span<const double> xs) {
    require_nonempty(xs, "mean");
    return std::accumulate(xs.begin(), xs.end(), 0.0) /
           static_cast<double>(xs.size());
}

double standard_error(std::span<const double> xs) {
    require_nonempty(xs, "standard_error");
    if (xs.size() < 2) {
        return 0.0;
    }
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - m) * (x - m);
    }
    const auto n = static_cast<double>(xs.size());
    return std::sqrt(ss / (n - 1.0) / n);
}

double quantile(std::span<const double> xs, double q) {
    require_nonempty(xs, "quantile");
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError("quantile: q must lie in [0, 1]");
    }
    const auto s = sorted(xs);
    const double pos = q * static_cast<double>(s.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, s.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return s[lo] + frac * (s[hi] - s[lo]);
}

double median(std::span<const double> xs) { return quantile(xs, 0.5); }

double binomial_standard_error(double p, std::size_t n) {
    if (n == 0) {
        throw DomainError("binomial_standard_error: n must be positive");
    }
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double kolmogorov_survival(double lambda) {
    if (lambda <= 0.0) {
        return 1.0;
    }
    if (lambda < 0.2) {
        return 1.0;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term =
            sign * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16) {
            break;
        }
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double ks_p_value(double statistic, double effective_n) {
    const double root = std::sqrt(effective_n);
    return kolmogorov_survival((root + 0.12 + 0.11 / root) * statistic);
}

} // namespace

TestResult ks_one_sample(std::span<const double> xs,
                         const std::function<double(double)> &cdf) {
    require_nonempty(xs, "ks_one_sample");
    const auto s = sorted(xs);
    const auto n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return {d, ks_p_value(d, n)};
}

TestResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
    require_nonempty(a, "ks_two_sample");
    require_nonempty(b, "ks_two_sample");
    const auto sa = sorted(a);
    const auto sb = sorted(b);
    const auto na = static_cast<double>(sa.size());
    const auto nb = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) {
            ++i;
        }
        while (j < sb.size() && sb[j] <= x) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return {d, ks_p_value(d, na * nb / (na + nb))};
}

TestResult chi_square_counts(std::span<const double> observed,
                             std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.size() < 2) {
        throw DomainError("chi_square_counts: need matching bins (>= 2)");
    }
    double stat = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) {
            continue;
        }
        const double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
        ++used;
    }
    if (used < 2) {
        throw DomainError("chi_square_counts: fewer than two usable bins");
    }
    const double dof = static_cast<double>(used - 1);
    return {stat, boost::math::gamma_q(0.5 * dof, 0.5 * stat)};
}

TestResult chi_square_two_sample(std::span<const double> a,
                                 std::span<const double> b, std::size_t bins) {
    require_nonempty(a, "chi_square_two_sample");
    require_nonempty(b, "chi_square_two_sample");
    if (bins < 2) {
        throw DomainError("chi_square_two_sample: need at least two bins");
    }
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<double> edges;
    for (std::size_t k = 1; k < bins; ++k) {
        edges.push_back(quantile(pooled, static_cast<double>(k) /
                                             static_cast<double>(bins)));
    }
    auto histogram = [&](std::span<const double> xs) {
        std::vector<double> counts(bins, 0.0);
        for (double x : xs) {
            const auto bin = static_cast<std::size_t>(
                std::upper_bound(edges.begin(), edges.end(), x) -
                edges.begin());
            counts[bin] += 1.0;
        }
        return counts;
    };
    const auto ca = histogram(a);
    const auto cb = histogram(b);
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    const double ka = std::sqrt(nb / na);
    const double kb = std::sqrt(na / nb);
    double stat = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < bins; ++i) {
        const double total = ca[i] + cb[i];
        if (total == 0.0) {
            continue;
        }
        const double diff = ka * ca[i] - kb * cb[i];
        stat += diff * diff / total;
        ++used;
    }
    if (used < 2) {
        return {0.0, 1.0};
    }
    const double dof = static_cast<double>(used - 1);
    return {stat, boost::math::gamma_q(0.5 * dof, 0.5 * stat)};
}

std::vector<double> ranks(std::span<const double> xs) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return xs[l] < xs[r]; });
    std::vector<double> out(xs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) {
            ++j;
        }
        const double average = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            out[order[k]] = average;
        }
        i = j + 1;
    }
    return out;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("spearman: need two equal-length samples (n >= 2)");
    }
    const auto rx = ranks(x);
    const auto ry = ranks(y);
    const double mx = mean(rx);
    const double my = mean(ry);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) {
        return 0.0;
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace gaplab::stats

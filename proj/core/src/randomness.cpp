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

#include "gaplab/randomness.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gaplab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index),
      key_(stream_key(master_seed, stream_index)), engine_(key_) {}

RngStream RngStream::split(std::uint64_t child_index) const {
    return {key_, child_index};
}

double RngStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
}

double RngStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

double RngStream::exponential() { return -std::log(uniform_open()); }

std::uint64_t RngStream::below(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("RngStream::below: empty range");
    }
    // Rejection keeps the result exactly uniform.
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % n;
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw DimensionError("UnitaryMatrix: need a nonempty square matrix");
    }
    const double deviation = max_abs_difference(
        entries_ * entries_.adjoint(),
        CMatrix::Identity(entries_.rows(), entries_.rows()));
    if (!(deviation <= 1e-10)) {
        throw DomainError("UnitaryMatrix: U U^* deviates from I by " +
                          std::to_string(deviation));
    }
}

Complex sample_complex_gaussian(RngStream &rng, double variance) {
    if (!(variance >= 0.0)) {
        throw DomainError("sample_complex_gaussian: negative variance");
    }
    if (variance == 0.0) {
        return {0.0, 0.0};
    }
    const double scale = std::sqrt(0.5 * variance);
    const double re = rng.normal();
    const double im = rng.normal();
    return {scale * re, scale * im};
}

CMatrix ginibre(RngStream &rng, Index rows, Index cols) {
    CMatrix z(rows, cols);
    // Column-major fill order is part of the reproducibility contract.
    for (Index c = 0; c < cols; ++c) {
        for (Index r = 0; r < rows; ++r) {
            z(r, c) = sample_complex_gaussian(rng, 1.0);
        }
    }
    return z;
}

namespace {

/// Thin Q of the QR factorization of `z` with R's diagonal made positive.
CMatrix phase_fixed_q(const CMatrix &z) {
    const Index n = z.rows();
    const Index k = z.cols();
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, k);
    const auto &r = qr.matrixQR();
    for (Index j = 0; j < k; ++j) {
        const Complex diag = r(j, j);
        const double modulus = std::abs(diag);
        // |diag| == 0 has probability zero for a Ginibre input.
        if (modulus > 0.0) {
            q.col(j) *= diag / modulus;
        }
    }
    return q;
}

} // namespace

UnitaryMatrix haar_unitary(RngStream &rng, Index n) {
    if (n < 1) {
        throw DomainError("haar_unitary: n must be >= 1");
    }
    return UnitaryMatrix(phase_fixed_q(ginibre(rng, n, n)));
}

OrthonormalSystem random_onb(RngStream &rng, Index n) {
    return OrthonormalSystem(haar_unitary(rng, n).matrix());
}

OrthonormalSystem random_ons(RngStream &rng, Index n, Index k) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("random_ons: need 1 <= k <= n, got k=" +
                          std::to_string(k) + " n=" + std::to_string(n));
    }
    return OrthonormalSystem(phase_fixed_q(ginibre(rng, n, k)));
}

StateVector uniform_sphere(RngStream &rng, Index d) {
    if (d < 1) {
        throw DomainError("uniform_sphere: d must be >= 1");
    }
    CVector v(d);
    for (Index i = 0; i < d; ++i) {
        v[i] = sample_complex_gaussian(rng, 1.0);
    }
    return StateVector::normalized(v);
}

} // namespace gaplab

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

#include <cstdint>
#include <random>

#include "gaplab/hilbert.hpp"

namespace gaplab {

/// Reproducible random stream addressed by (master_seed, stream_index).
///
/// The stream key is derived from both numbers with the SplitMix64 mixer and
/// seeds a std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform and Gaussian variates are produced by code in this
/// library rather than by <random> distributions, whose algorithms are
/// implementation-defined, so sample sequences are bit-identical across
/// standard libraries.
///
/// A stream is single-owner; use split() to hand independent children to
/// worker threads.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    [[nodiscard]] std::uint64_t master_seed() const { return master_seed_; }
    [[nodiscard]] std::uint64_t stream_index() const { return stream_index_; }

    /// Child stream keyed by this stream's key and `child_index`. Does not
    /// advance this stream.
    [[nodiscard]] RngStream split(std::uint64_t child_index) const;

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1).
    double uniform_open();
    /// Standard normal (Box-Muller, second variate cached).
    double normal();
    /// Unit-rate exponential.
    double exponential();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t key_;
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// SplitMix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x);

/// Unitary matrix, U U^* = I within 1e-10.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(CMatrix entries);

    [[nodiscard]] Index dim() const { return entries_.rows(); }
    [[nodiscard]] const CMatrix &matrix() const { return entries_; }

  private:
    CMatrix entries_;
};

/// Complex Gaussian with E z = 0, E|z|^2 = variance (real and imaginary
/// parts independent with variance/2 each).
[[nodiscard]] Complex sample_complex_gaussian(RngStream &rng, double variance);

/// rows x cols matrix of i.i.d. unit-variance complex Gaussians.
[[nodiscard]] CMatrix ginibre(RngStream &rng, Index rows, Index cols);

/// Haar-distributed unitary: QR of a Ginibre matrix with the diagonal of R
/// rotated onto the positive reals.
[[nodiscard]] UnitaryMatrix haar_unitary(RngStream &rng, Index n);

/// Uniformly random orthonormal basis of C^n (columns of a Haar unitary).
[[nodiscard]] OrthonormalSystem random_onb(RngStream &rng, Index n);

/// k orthonormal vectors distributed as the first k columns of a Haar
/// unitary on C^n. Uses the phase-fixed thin QR of an n x k Ginibre matrix,
/// which has that law without forming the full n x n unitary.
[[nodiscard]] OrthonormalSystem random_ons(RngStream &rng, Index n, Index k);

/// Uniform point on the unit sphere of C^d.
[[nodiscard]] StateVector uniform_sphere(RngStream &rng, Index d);

} // namespace gaplab

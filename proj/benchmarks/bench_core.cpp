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

#include <benchmark/benchmark.h>

#include <vector>

#include "gaplab/conditional.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/hilbert.hpp"
#include "gaplab/randomness.hpp"

namespace {

using namespace gaplab;

void BM_HaarUnitary(benchmark::State &state) {
    RngStream rng(1, 0);
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_unitary(rng, n));
    }
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(4)->Range(4, 256);

void BM_SampleGap(benchmark::State &state) {
    RngStream rng(2, 0);
    const auto d = static_cast<Index>(state.range(0));
    std::vector<double> p(static_cast<std::size_t>(d), 1.0 / static_cast<double>(d));
    const GapSampler sampler(DensityMatrix::from_spectrum(p, haar_unitary(rng, d).matrix()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.sample_gap(rng));
    }
}
BENCHMARK(BM_SampleGap)->RangeMultiplier(4)->Range(2, 128);

void BM_Mu1(benchmark::State &state) {
    RngStream rng(3, 0);
    const auto d2 = static_cast<Index>(state.range(0));
    const BipartiteState psi(2, d2, uniform_sphere(rng, 2 * d2));
    const auto basis = random_onb(rng, d2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mu1(psi, basis));
    }
}
BENCHMARK(BM_Mu1)->RangeMultiplier(4)->Range(8, 512);

void BM_PartialTrace(benchmark::State &state) {
    RngStream rng(4, 0);
    const auto d2 = static_cast<Index>(state.range(0));
    const BipartiteState psi(4, d2, uniform_sphere(rng, 4 * d2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace_2(psi));
    }
}
BENCHMARK(BM_PartialTrace)->RangeMultiplier(4)->Range(8, 2048);

} // namespace

BENCHMARK_MAIN();

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
#include <vector>

#include "harness/config.hpp"
#include "harness/report.hpp"

namespace gaplab::harness {

/// One scheduled sub-experiment.
struct PlannedPoint {
    std::int64_t dim = 0;
    Index d2 = 0;
    Index dR = 0;
    /// Child stream of RngStream(seed, 0); unused without a sweep.
    std::uint64_t stream = 0;
};

/// Sweep points in the order they run. Without a sweep there is one point.
[[nodiscard]] std::vector<PlannedPoint> schedule(const ExperimentConfig &config);

struct RunOptions {
    /// 0 selects default_worker_count().
    std::size_t workers = 0;
};

/// Runs every scheduled point. Trial records are ordered by trial index and
/// do not depend on the worker count.
[[nodiscard]] ExperimentReport run(const ExperimentConfig &config,
                                   const RunOptions &options = {});

} // namespace gaplab::harness

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
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "harness/config.hpp"

namespace gaplab::harness {

/// One row of trials.csv. The meaning of aux1 and aux2 depends on the
/// experiment and is recorded in summary.json under "columns".
struct TrialRow {
    std::size_t trial = 0;
    double discrepancy = 0.0;
    bool pass = false;
    double aux1 = 0.0;
    double aux2 = 0.0;
};

/// Discrepancy statistics of one sweep point.
struct PointSummary {
    double pass_fraction = 0.0;
    double mean = 0.0;
    double q10 = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double q90 = 0.0;
};

struct SweepPoint {
    /// Plotted dimension: the swept value, or the experiment's natural size.
    std::int64_t dim = 0;
    std::vector<TrialRow> rows;
    /// Experiment-specific values (reference, threshold, fitted beta, ...).
    Json details = Json::object();

    [[nodiscard]] PointSummary summary() const;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<SweepPoint> points;
    std::string aux1_name;
    std::string aux2_name;
    double wall_time_seconds = 0.0;

    /// Config echo and per-point summaries plus run metadata.
    [[nodiscard]] Json summary_json() const;
};

[[nodiscard]] const char *library_version();

/// Header dim,trial,discrepancy,pass,aux1,aux2; rows in trial order.
void write_trials_csv(const ExperimentReport &report, std::ostream &out);
/// Header dim,median,q10,q90,pass_fraction; one row per sweep point.
/// Throws Error on a report without points.
void write_plotdata_csv(const ExperimentReport &report, std::ostream &out);
/// Writes the CSV files and summary.json into `dir`.
void write_report(const ExperimentReport &report, const std::filesystem::path &dir);

} // namespace gaplab::harness

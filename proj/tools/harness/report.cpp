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

#include "harness/report.hpp"

#include <cstdio>
#include <fstream>

#include "gaplab/stats.hpp"

#ifndef GAPLAB_VERSION
#define GAPLAB_VERSION "unknown"
#endif

namespace gaplab::harness {

namespace {

/// Round-trip precision, independent of the locale.
std::string format_double(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

void open_for_write(std::ofstream &out, const std::filesystem::path &path) {
    out.open(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
}

} // namespace

const char *library_version() { return GAPLAB_VERSION; }

PointSummary SweepPoint::summary() const {
    if (rows.empty()) {
        throw Error("sweep point has no trials");
    }
    std::vector<double> d;
    d.reserve(rows.size());
    std::size_t passed = 0;
    for (const auto &row : rows) {
        d.push_back(row.discrepancy);
        passed += row.pass ? 1 : 0;
    }
    PointSummary s;
    s.pass_fraction = static_cast<double>(passed) / static_cast<double>(rows.size());
    s.mean = stats::mean(d);
    s.q10 = stats::quantile(d, 0.10);
    s.q25 = stats::quantile(d, 0.25);
    s.median = stats::median(d);
    s.q75 = stats::quantile(d, 0.75);
    s.q90 = stats::quantile(d, 0.90);
    return s;
}

Json ExperimentReport::summary_json() const {
    Json out = Json::object();
    out["gaplab_version"] = library_version();
    out["experiment"] = to_string(config.experiment);
    out["seed"] = config.seed;
    out["config"] = to_json(config);
    out["columns"] = {{"aux1", aux1_name}, {"aux2", aux2_name}};
    Json points_json = Json::array();
    std::size_t total = 0;
    std::size_t passed = 0;
    for (const auto &point : points) {
        const auto s = point.summary();
        Json p = Json::object();
        p["dim"] = point.dim;
        p["n_trials"] = point.rows.size();
        p["pass_fraction"] = s.pass_fraction;
        p["meets_one_minus_delta"] = s.pass_fraction >= 1.0 - config.delta;
        p["mean"] = s.mean;
        p["quantiles"] = {{"q10", s.q10}, {"q25", s.q25}, {"median", s.median},
                          {"q75", s.q75}, {"q90", s.q90}};
        p["details"] = point.details;
        points_json.push_back(std::move(p));
        total += point.rows.size();
        for (const auto &row : point.rows) {
            passed += row.pass ? 1 : 0;
        }
    }
    out["points"] = std::move(points_json);
    out["pass_fraction"] =
        total == 0 ? 0.0 : static_cast<double>(passed) / static_cast<double>(total);
    out["wall_time_seconds"] = wall_time_seconds;
    return out;
}

void write_trials_csv(const ExperimentReport &report, std::ostream &out) {
    out << "dim,trial,discrepancy,pass,aux1,aux2\n";
    for (const auto &point : report.points) {
        for (const auto &row : point.rows) {
            out << point.dim << ',' << row.trial << ',' << format_double(row.discrepancy) << ','
                << (row.pass ? 1 : 0) << ',' << format_double(row.aux1) << ','
                << format_double(row.aux2) << '\n';
        }
    }
}

void write_plotdata_csv(const ExperimentReport &report, std::ostream &out) {
    if (report.points.empty()) {
        throw Error("cannot emit plot data for an empty report");
    }
    out << "dim,median,q10,q90,pass_fraction\n";
    for (const auto &point : report.points) {
        const auto s = point.summary();
        out << point.dim << ',' << format_double(s.median) << ',' << format_double(s.q10) << ','
            << format_double(s.q90) << ',' << format_double(s.pass_fraction) << '\n';
    }
}

void write_report(const ExperimentReport &report, const std::filesystem::path &dir) {
    if (report.points.empty()) {
        throw Error("cannot write an empty report");
    }
    std::filesystem::create_directories(dir);
    std::ofstream trials;
    open_for_write(trials, dir / "trials.csv");
    write_trials_csv(report, trials);
    std::ofstream plot;
    open_for_write(plot, dir / "plotdata.csv");
    write_plotdata_csv(report, plot);
    std::ofstream summary;
    open_for_write(summary, dir / "summary.json");
    summary << report.summary_json().dump(2) << '\n';
    if (!trials || !plot || !summary) {
        throw Error("failed writing output files to " + dir.string());
    }
}

} // namespace gaplab::harness

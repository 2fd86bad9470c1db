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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "harness/config.hpp"
#include "harness/presets.hpp"
#include "harness/report.hpp"
#include "harness/runner.hpp"

namespace {

using namespace gaplab::harness;

constexpr int kRuntimeError = 1;
constexpr int kConfigError = 2;

int list_presets(const std::string &name) {
    if (name.empty()) {
        for (const auto &preset : presets()) {
            std::printf("%-22s %s\n", preset.name.data(), preset.description.data());
        }
        return 0;
    }
    const auto preset = find_preset(name);
    if (!preset) {
        std::fprintf(stderr, "gaplab: unknown preset '%s'\n", name.c_str());
        return kConfigError;
    }
    std::printf("%s\n", preset->json.data());
    return 0;
}

int run_command(const std::string &config_path, const std::string &preset_name,
                const std::string &out_dir, const ConfigOverrides &overrides) {
    ExperimentConfig config;
    try {
        if (!preset_name.empty()) {
            const auto preset = find_preset(preset_name);
            if (!preset) {
                std::fprintf(stderr, "gaplab: unknown preset '%s'\n", preset_name.c_str());
                return kConfigError;
            }
            config = parse_config_text(preset->json, overrides);
        } else {
            config = load_config(config_path, overrides);
        }
    } catch (const gaplab::Error &e) {
        std::fprintf(stderr, "gaplab: %s\n", e.what());
        return kConfigError;
    }
    try {
        const auto report = run(config);
        write_report(report, out_dir);
        for (const auto &point : report.points) {
            const auto s = point.summary();
            std::printf("dim=%lld trials=%zu pass_fraction=%.4f median=%.6g\n",
                        static_cast<long long>(point.dim), point.rows.size(), s.pass_fraction,
                        s.median);
        }
        std::printf("wrote %s/{trials.csv,summary.json,plotdata.csv} in %.2f s\n",
                    out_dir.c_str(), report.wall_time_seconds);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "gaplab: %s\n", e.what());
        return kRuntimeError;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"gaplab: GAP measure and typicality experiments"};
    app.require_subcommand(1);

    auto *run_cmd = app.add_subcommand("run", "Run an experiment and write its reports");
    std::string config_path;
    std::string preset_name;
    std::string out_dir = "gaplab-out";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    auto *config_opt = run_cmd->add_option("--config", config_path, "JSON config file");
    auto *preset_opt = run_cmd->add_option("--preset", preset_name, "Built-in config name");
    config_opt->excludes(preset_opt);
    preset_opt->excludes(config_opt);
    run_cmd->add_option("--seed", seed, "Override the config seed");
    run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run_cmd->add_option("--trials", trials, "Override n_trials");

    auto *presets_cmd = app.add_subcommand("presets", "List built-in configs or print one");
    std::string preset_query;
    presets_cmd->add_option("name", preset_query, "Preset to print as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }
    if (presets_cmd->parsed()) {
        return list_presets(preset_query);
    }
    if (config_path.empty() && preset_name.empty()) {
        std::fprintf(stderr, "gaplab: run needs --config or --preset\n");
        return kConfigError;
    }
    return run_command(config_path, preset_name, out_dir, {seed, trials});
}

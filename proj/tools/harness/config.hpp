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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaplab/errors.hpp"
#include "gaplab/hilbert.hpp"
#include "gaplab/test_function.hpp"
#include "json.hpp"

namespace gaplab::harness {

using Json = nlohmann::ordered_json;

/// Invalid configuration. `key()` is the dotted path of the offending key.
class ConfigError : public Error {
  public:
    ConfigError(std::string key, const std::string &message);
    [[nodiscard]] const std::string &key() const { return key_; }

  private:
    std::string key_;
};

enum class ExperimentKind {
    theorem1,
    theorem2,
    theorem3,
    theorem4,
    canonical_typicality,
    submatrix,
    continuity,
    thermal,
    gap_selftest,
};

[[nodiscard]] const char *to_string(ExperimentKind kind);
[[nodiscard]] std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);

/// Spectrum plus an optional seed for a Haar eigenbasis (diagonal otherwise).
struct RhoSpec {
    std::vector<double> spectrum;
    std::optional<std::uint64_t> basis_seed;

    [[nodiscard]] DensityMatrix build() const;
};

/// kind is one of overlap_sq, real_part, cap_indicator, polynomial, constant.
/// The direction is e_{phi_index} unless `phi` lists explicit amplitudes.
struct FunctionSpec {
    std::string kind = "overlap_sq";
    Index phi_index = 0;
    std::vector<Complex> phi;
    double threshold = 0.5;
    std::vector<double> coefficients{0.0, 0.0, 1.0};
    double value = 1.0;

    [[nodiscard]] TestFunction build(Index dim) const;
};

/// parameter is d2, dR or d2_dR (both set to the value).
struct SweepSpec {
    std::string parameter;
    std::vector<Index> values;
};

struct BathSpec {
    std::size_t count = 200;
    double min = 0.0;
    double max = 20.0;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::theorem1;
    Index d1 = 2;
    Index d2 = 64;
    Index dR = 100;
    RhoSpec rho{{0.5, 0.5}, std::nullopt};
    /// Theorem 4 target; the shell's reduced state when absent.
    std::optional<RhoSpec> omega;
    FunctionSpec f;
    double epsilon = 0.1;
    double delta = 0.1;
    std::size_t n_trials = 500;
    std::size_t n_samples = 10000;
    std::uint64_t seed = 0;
    std::optional<SweepSpec> sweep;
    /// random (Haar subspace of dimension dR) or full (the whole product space).
    std::string shell = "random";
    std::vector<double> system_levels{0.0, 1.0};
    BathSpec bath;
    double energy = 10.0;
    double energy_width = 0.5;
    Index k = 1;
    std::vector<Index> n_values{4, 16, 64, 256};
    double gamma = 0.1;
    /// Empty selects the library default grid.
    std::vector<double> eta_grid;
    /// 0 selects max(10 n_trials, 100000).
    std::size_t reference_samples = 0;
};

/// Flag overrides applied after the file is read.
struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n_trials;
};

/// Validates and resolves a JSON document. Unknown keys are errors.
[[nodiscard]] ExperimentConfig parse_config(const Json &document,
                                            const ConfigOverrides &overrides = {});
[[nodiscard]] ExperimentConfig parse_config_text(std::string_view text,
                                                 const ConfigOverrides &overrides = {});
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path,
                                           const ConfigOverrides &overrides = {});

/// Every resolved field, defaults included.
[[nodiscard]] Json to_json(const ExperimentConfig &config);

} // namespace gaplab::harness

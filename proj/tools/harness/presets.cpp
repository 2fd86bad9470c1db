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

#include "harness/presets.hpp"

namespace gaplab::harness {

const std::vector<Preset> &presets() {
    static const std::vector<Preset> list{
        {"theorem1-default", "Conditional measure vs GAP(rho1), rho1 = diag(0.7, 0.3), d2 = 64",
         R"({
  "experiment": "theorem1",
  "rho": {"spectrum": [0.7, 0.3]},
  "d2": 64,
  "f": {"kind": "overlap_sq", "phi_index": 0},
  "epsilon": 0.1,
  "delta": 0.1,
  "n_trials": 500,
  "seed": 1
})"},
        {"theorem1-sweep", "Theorem 1 discrepancy trend over d2 = 16, 64, 256 with f = x^2",
         R"({
  "experiment": "theorem1",
  "rho": {"spectrum": [0.7, 0.3]},
  "f": {"kind": "polynomial", "phi_index": 0, "coefficients": [0.0, 0.0, 1.0]},
  "epsilon": 0.1,
  "n_trials": 500,
  "seed": 1,
  "sweep": {"parameter": "d2", "values": [16, 64, 256]}
})"},
        {"theorem2-default", "Frozen state, random environment basis, d2 = 32",
         R"({
  "experiment": "theorem2",
  "rho": {"spectrum": [0.7, 0.3]},
  "d2": 32,
  "f": {"kind": "polynomial", "phi_index": 0, "coefficients": [0.0, 0.0, 1.0]},
  "epsilon": 0.1,
  "n_trials": 1000,
  "seed": 1
})"},
        {"theorem3-full", "Uniform state and basis on the full space C^2 (x) C^64",
         R"({
  "experiment": "theorem3",
  "d1": 2,
  "d2": 64,
  "shell": "full",
  "f": {"kind": "overlap_sq", "phi_index": 0},
  "epsilon": 0.1,
  "n_trials": 500,
  "seed": 1
})"},
        {"theorem4-random", "Cap indicator against GAP(tr2 rho_R) on a random 128-dim shell",
         R"({
  "experiment": "theorem4",
  "d1": 2,
  "d2": 64,
  "dR": 128,
  "f": {"kind": "cap_indicator", "phi_index": 0, "threshold": 0.5},
  "epsilon": 0.15,
  "n_trials": 300,
  "seed": 1
})"},
        {"thermal-twolevel", "Two-level system, 200-level bath on [0, 20], window [10, 10.5]",
         R"({
  "experiment": "thermal",
  "system_levels": [0.0, 1.0],
  "bath": {"count": 200, "min": 0.0, "max": 20.0},
  "energy": 10.0,
  "energy_width": 0.5,
  "f": {"kind": "overlap_sq", "phi_index": 0},
  "epsilon": 0.15,
  "n_trials": 300,
  "seed": 1
})"},
        {"canonical-typicality", "Reduced state concentration, d1 = 2, d2 = 50, dR = 100",
         R"({
  "experiment": "canonical_typicality",
  "d1": 2,
  "d2": 50,
  "dR": 100,
  "epsilon": 0.1,
  "n_trials": 1000,
  "seed": 1
})"},
        {"canonical-sweep", "Reduced state concentration with d2 = dR in 25, 100, 400",
         R"({
  "experiment": "canonical_typicality",
  "d1": 2,
  "epsilon": 0.1,
  "n_trials": 300,
  "seed": 1,
  "sweep": {"parameter": "d2_dR", "values": [25, 100, 400]}
})"},
        {"submatrix-k1", "Scaled Haar entry vs complex Gaussian, n = 4, 16, 64, 256",
         R"({
  "experiment": "submatrix",
  "k": 1,
  "n_values": [4, 16, 64, 256],
  "n_samples": 10000,
  "seed": 1
})"},
        {"continuity-d2", "GAP density gap vs trace distance on D_{>=0.1}, d = 2",
         R"({
  "experiment": "continuity",
  "d1": 2,
  "gamma": 0.1,
  "f": {"kind": "cap_indicator", "phi_index": 0, "threshold": 0.5},
  "epsilon": 0.1,
  "n_trials": 200,
  "n_samples": 10000,
  "seed": 1
})"},
        {"gap-selftest", "GAP sampler covariance and closed-form checks, d = 4",
         R"({
  "experiment": "gap_selftest",
  "rho": {"spectrum": [0.4, 0.3, 0.2, 0.1], "basis_seed": 7},
  "f": {"kind": "overlap_sq", "phi_index": 0},
  "epsilon": 0.01,
  "n_trials": 5,
  "n_samples": 100000,
  "seed": 1
})"},
    };
    return list;
}

std::optional<Preset> find_preset(std::string_view name) {
    for (const auto &preset : presets()) {
        if (preset.name == name) {
            return preset;
        }
    }
    return std::nullopt;
}

} // namespace gaplab::harness

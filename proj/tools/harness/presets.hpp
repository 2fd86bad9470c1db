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

#include <optional>
#include <string_view>
#include <vector>

namespace gaplab::harness {

struct Preset {
    std::string_view name;
    std::string_view description;
    std::string_view json;
};

[[nodiscard]] const std::vector<Preset> &presets();
[[nodiscard]] std::optional<Preset> find_preset(std::string_view name);

} // namespace gaplab::harness

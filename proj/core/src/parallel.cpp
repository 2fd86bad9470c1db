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

#include "gaplab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gaplab {

std::size_t default_worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t machine = hw == 0 ? 1 : hw;
    if (const char *env = std::getenv("GAPLAB_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) {
                return std::min(machine, static_cast<std::size_t>(value));
            }
        } catch (const std::exception &) {
            // Unparseable values fall through to the hardware default.
        }
    }
    return machine;
}

} // namespace gaplab

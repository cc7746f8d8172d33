// Copyright 2026 The bellcoh Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <random>

#include "bellcoh/states.hpp"

namespace bellcoh {

/// Uniform over the state tetrahedron, by rejection from [-1, 1]^3.
template <typename Rng> BellParams random_physical_bell(Rng &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const BellParams p{u(rng), u(rng), u(rng)};
        if (is_physical(p)) {
            return p;
        }
    }
}

/// Uniform over the physical X states inside [-1, 1]^5, by rejection.
template <typename Rng> XParams random_physical_x(Rng &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const XParams p{u(rng), u(rng), u(rng), u(rng), u(rng)};
        if (is_physical(p)) {
            return p;
        }
    }
}

} // namespace bellcoh

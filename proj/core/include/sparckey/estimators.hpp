// Copyright 2026 The sparckey Authors
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

#include "sparckey/bits.hpp"

namespace sparckey {

/// Plug-in uniformity statistics over the empirical key histogram.
/// entropy_deficit_nats = ln|K| - H_hat(K) is the protocol's uniformity
/// metric; tv_distance is the L1/2 distance from the uniform law, a
/// diagnostic with a known multinomial sampling-noise floor.
struct UniformityStats {
    double tv_distance = 0.0;
    double entropy_deficit_nats = 0.0;
};

/// All keys must share one length k with 2 * 2^k <= sample count
/// (SizingError otherwise). k = 0 (empty keys) yields exact zeros.
UniformityStats estimate_uniformity(const std::vector<BitString>& keys);

/// Plug-in estimate of (1/2) || P(key, view) - P(key) P(view) ||_1 over
/// the empirical joint histogram of keys and discrete eavesdropper
/// summaries. SizingError when the observed joint alphabet outgrows the
/// sample budget.
double estimate_leakage(const std::vector<BitString>& keys,
                        const std::vector<std::uint64_t>& eve_views);

}  // namespace sparckey

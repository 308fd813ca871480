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

#include <span>

#include "sparckey/sparse_coeffs.hpp"

namespace sparckey {

struct QuantizeResult {
    SparseCoeffs beta;
    double distortion = 0.0;  ///< ||target - synthesize(beta)||^2 / n
};

/// Global minimum-distance search over all M^L codewords. Small-instance
/// oracle only; throws SizingError above `cap`. Ties broken toward the
/// smallest beta_to_index.
QuantizeResult encode_exhaustive(const Dictionary& dict, std::span<const double> target,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Successive residual-fit encoder: sections processed in order; in each,
/// the column minimizing ||residual - c*a||^2 (the inner product corrected
/// by the column energy) is selected and c * column subtracted. Ties
/// toward the smallest column index. Deterministic; a single section
/// coincides with the exhaustive search.
QuantizeResult encode_greedy(const Dictionary& dict, std::span<const double> target);

/// Mean squared difference per symbol.
double distortion_of(std::span<const double> target, std::span<const double> reconstruction);

}  // namespace sparckey

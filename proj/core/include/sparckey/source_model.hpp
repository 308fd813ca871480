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

#include "sparckey/errors.hpp"

namespace sparckey {

/// Three-party Gaussian source: Alice observes X ~ N(0, sigma_x2),
/// Bob sees Y = X + noise(sigma_b2), Eve sees Z = X + noise(sigma_e2).
struct SourceModel {
    double sigma_x2 = 1.0;  ///< variance of X (source-units^2)
    double sigma_b2 = 0.1;  ///< variance of Bob's channel noise
    double sigma_e2 = 0.2;  ///< variance of Eve's channel noise

    void validate() const {
        if (!(sigma_x2 > 0.0)) throw DomainError("SourceModel: sigma_x2 must be > 0");
        if (!(sigma_b2 > 0.0)) throw DomainError("SourceModel: sigma_b2 must be > 0");
        if (!(sigma_e2 > 0.0)) throw DomainError("SourceModel: sigma_e2 must be > 0");
    }
};

/// Multiplicative slack applied to the strict rate inequalities
/// R1 > R*(D_X) and R2 < C_WZ,Bob when turning them into operating
/// rates. delta1 = delta2 = 0 reproduces the boundary itself.
struct RateMargins {
    double delta1 = 0.05;
    double delta2 = 0.05;

    void validate() const {
        if (!(delta1 >= 0.0)) throw DomainError("RateMargins: delta1 must be >= 0");
        if (!(delta2 >= 0.0) || !(delta2 < 1.0))
            throw DomainError("RateMargins: delta2 must be in [0, 1)");
    }
};

}  // namespace sparckey

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

#include <string>
#include <vector>

#include "sparckey/rates.hpp"

namespace sparckey {

/// Grid description for the figure sweeps.
struct SweepConfig {
    double q_min = 1e-3;
    double q_max = 1e2;
    int n_points = 200;
    bool log_spaced = true;
    double alpha_fixed = 6.0;  ///< section size rate the feasibility flag is judged against
    RateMargins margins;

    void validate() const {
        if (!(q_min > 0.0) || !(q_min < q_max))
            throw DomainError("SweepConfig: need 0 < q_min < q_max");
        if (n_points < 2) throw DomainError("SweepConfig: n_points must be >= 2");
        if (!(alpha_fixed > 0.0)) throw DomainError("SweepConfig: alpha_fixed must be > 0");
        margins.validate();
    }

    std::vector<double> grid() const;
};

/// Outcome of the constrained quantization-variance optimization
/// min{ q : alpha_req(q) <= alpha_fixed }. Infeasibility is a value.
struct OptResult {
    bool feasible = false;
    double q_opt = 0.0;       ///< lower boundary of the feasible interval
    double r_k_at_opt = 0.0;  ///< secret key rate at q_opt
    double bracket_lo = 0.0;  ///< root-finder bracket (infeasible side)
    double bracket_hi = 0.0;  ///< root-finder bracket (feasible side)
    double q_upper = 0.0;     ///< upper crossing, for diagnostics (0 if beyond the scan)
};

/// True iff alpha_req(model, q, margins) <= alpha_fixed.
bool q_feasible(const SourceModel& model, double q, double alpha_fixed,
                const RateMargins& margins);

/// Finds the minimum feasible q. Scans a log-spaced grid over
/// [1e-6, 1e3] * sigma_x2 (extended downward geometrically when the
/// smallest scanned q is already feasible, since alpha_req diverges at
/// both ends), then bisects the lower crossing alpha_req(q) = alpha_fixed
/// to relative tolerance 1e-9.
OptResult q_opt(const SourceModel& model, double alpha_fixed, const RateMargins& margins);

/// One sweep entry. `error` is empty unless the point failed to evaluate;
/// failures are recorded rather than aborting the sweep.
struct SweepPoint {
    RatePoint point;
    std::string error;
};

/// RatePoint per grid q, ordered by q.
std::vector<SweepPoint> sweep_region(const SourceModel& model, const SweepConfig& cfg);

enum class VaryParty { bob, eve };

/// One row of a channel-quality sweep (Fig. 3/4 style data).
struct ChannelSweepRow {
    VaryParty party = VaryParty::eve;
    double channel_var = 0.0;  ///< the varied noise variance
    double q = 0.0;
    double r_k = 0.0;
    double r_p = 0.0;
    double alpha_req = 0.0;
    bool feasible = false;
};

/// For each channel-variance value, an R_K(q) curve with infeasible
/// points flagged. Rows ordered by (value, q).
std::vector<ChannelSweepRow> sweep_channel(const SourceModel& model_base, VaryParty vary,
                                           const std::vector<double>& values,
                                           const SweepConfig& q_grid);

}  // namespace sparckey

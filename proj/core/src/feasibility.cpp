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

#include "sparckey/feasibility.hpp"

#include <cmath>
#include <limits>

namespace sparckey {

std::vector<double> SweepConfig::grid() const {
    validate();
    std::vector<double> qs(static_cast<std::size_t>(n_points));
    if (log_spaced) {
        const double lo = std::log(q_min);
        const double hi = std::log(q_max);
        for (int i = 0; i < n_points; ++i)
            qs[static_cast<std::size_t>(i)] = std::exp(lo + (hi - lo) * i / (n_points - 1));
    } else {
        for (int i = 0; i < n_points; ++i)
            qs[static_cast<std::size_t>(i)] = q_min + (q_max - q_min) * i / (n_points - 1);
    }
    qs.front() = q_min;
    qs.back() = q_max;
    return qs;
}

bool q_feasible(const SourceModel& model, double q, double alpha_fixed,
                const RateMargins& margins) {
    if (!(alpha_fixed > 0.0)) throw DomainError("q_feasible: alpha_fixed must be > 0");
    return alpha_req(model, q, margins) <= alpha_fixed;
}

namespace {

constexpr int kScanPoints = 512;
constexpr double kScanLo = 1e-6;
constexpr double kScanHi = 1e3;

/// Bisect the crossing alpha_req(q) = alpha_fixed between an infeasible
/// q_lo and a feasible q_hi, to relative tolerance 1e-9 in q.
double bisect_crossing(const SourceModel& model, const RateMargins& margins,
                       double alpha_fixed, double q_lo, double q_hi) {
    while ((q_hi - q_lo) > 1e-9 * q_hi) {
        const double mid = std::sqrt(q_lo * q_hi);
        if (alpha_req(model, mid, margins) <= alpha_fixed)
            q_hi = mid;
        else
            q_lo = mid;
    }
    return q_hi;
}

}  // namespace

OptResult q_opt(const SourceModel& model, double alpha_fixed, const RateMargins& margins) {
    model.validate();
    margins.validate();
    if (!(alpha_fixed > 0.0)) throw DomainError("q_opt: alpha_fixed must be > 0");

    const double scale = model.sigma_x2;
    std::vector<double> qs;
    qs.reserve(kScanPoints);
    const double llo = std::log(kScanLo * scale);
    const double lhi = std::log(kScanHi * scale);
    for (int i = 0; i < kScanPoints; ++i)
        qs.push_back(std::exp(llo + (lhi - llo) * i / (kScanPoints - 1)));

    int first_feasible = -1;
    int last_feasible = -1;
    for (int i = 0; i < kScanPoints; ++i) {
        if (alpha_req(model, qs[static_cast<std::size_t>(i)], margins) <= alpha_fixed) {
            if (first_feasible < 0) first_feasible = i;
            last_feasible = i;
        }
    }

    OptResult result;
    if (first_feasible < 0) return result;  // infeasible marker
    result.feasible = true;

    double q_lo;
    double q_hi = qs[static_cast<std::size_t>(first_feasible)];
    if (first_feasible > 0) {
        q_lo = qs[static_cast<std::size_t>(first_feasible - 1)];
    } else {
        // Already feasible at the smallest scanned q; alpha_req diverges as
        // q -> 0, so walk the bracket down until the crossing is enclosed.
        q_lo = q_hi / 10.0;
        while (alpha_req(model, q_lo, margins) <= alpha_fixed) {
            q_hi = q_lo;
            q_lo /= 10.0;
            if (q_lo < 1e-300) throw DomainError("q_opt: no lower crossing found");
        }
    }
    result.bracket_lo = q_lo;
    result.bracket_hi = q_hi;
    result.q_opt = bisect_crossing(model, margins, alpha_fixed, q_lo, q_hi);
    result.r_k_at_opt = secret_key_rate(model, result.q_opt);

    // Upper crossing (diagnostic): feasible -> infeasible on the right flank.
    if (last_feasible + 1 < kScanPoints) {
        double hi_lo = qs[static_cast<std::size_t>(last_feasible)];
        double hi_hi = qs[static_cast<std::size_t>(last_feasible + 1)];
        while ((hi_hi - hi_lo) > 1e-9 * hi_hi) {
            const double mid = std::sqrt(hi_lo * hi_hi);
            if (alpha_req(model, mid, margins) <= alpha_fixed)
                hi_lo = mid;
            else
                hi_hi = mid;
        }
        result.q_upper = hi_lo;
    }
    return result;
}

std::vector<SweepPoint> sweep_region(const SourceModel& model, const SweepConfig& cfg) {
    model.validate();
    const auto qs = cfg.grid();
    std::vector<SweepPoint> rows;
    rows.reserve(qs.size());
    for (const double q : qs) {
        SweepPoint row;
        try {
            row.point = evaluate_rate_point(model, q, cfg.margins, cfg.alpha_fixed);
        } catch (const std::exception& e) {
            row.point = RatePoint{};
            row.point.q = q;
            row.point.d_x = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ChannelSweepRow> sweep_channel(const SourceModel& model_base, VaryParty vary,
                                           const std::vector<double>& values,
                                           const SweepConfig& q_grid) {
    model_base.validate();
    if (values.empty()) throw UsageError("sweep_channel: values must be nonempty");
    for (const double v : values)
        if (!(v > 0.0)) throw DomainError("sweep_channel: channel variances must be > 0");

    const auto qs = q_grid.grid();
    std::vector<ChannelSweepRow> rows;
    rows.reserve(values.size() * qs.size());
    for (const double value : values) {
        SourceModel model = model_base;
        if (vary == VaryParty::bob)
            model.sigma_b2 = value;
        else
            model.sigma_e2 = value;
        for (const double q : qs) {
            ChannelSweepRow row;
            row.party = vary;
            row.channel_var = value;
            row.q = q;
            row.r_k = secret_key_rate(model, q);
            row.r_p = public_rate_bound(model, q);
            row.alpha_req = alpha_req(model, q, q_grid.margins);
            row.feasible = row.alpha_req <= q_grid.alpha_fixed;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace sparckey

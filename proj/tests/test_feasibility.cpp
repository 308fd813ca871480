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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sparckey/csv.hpp"
#include "sparckey/feasibility.hpp"

using namespace sparckey;

namespace {

const SourceModel kModel{1.0, 0.1, 0.2};
const RateMargins kMargins{0.05, 0.05};

SweepConfig section_v_sweep() {
    SweepConfig cfg;
    cfg.q_min = 1e-3;
    cfg.q_max = 1e2;
    cfg.n_points = 200;
    cfg.log_spaced = true;
    cfg.alpha_fixed = 12.0;
    cfg.margins = kMargins;
    return cfg;
}

}  // namespace

TEST_CASE("q_feasible compares alpha_req against the fixed alpha") {
    CHECK(q_feasible(kModel, 0.1, 12.0, kMargins));       // alpha_req = 10.24
    CHECK_FALSE(q_feasible(kModel, 1.0, 12.0, kMargins)); // alpha_req = 87.45
    CHECK_FALSE(q_feasible(kModel, 0.03, 2.4, kMargins)); // below the universal 2.5 floor
}

TEST_CASE("q_opt bisects the lower crossing for alpha_fixed = 12") {
    const OptResult result = q_opt(kModel, 12.0, kMargins);
    REQUIRE(result.feasible);
    CHECK(result.q_opt > 0.001);
    CHECK(result.q_opt < 0.005);
    CHECK(result.q_opt == doctest::Approx(0.0014926213855258).epsilon(1e-6));
    CHECK(alpha_req(kModel, result.q_opt, kMargins) ==
          doctest::Approx(12.0).scale(1.0).epsilon(1e-6));
    // bracketing invariant: feasible at q_opt, infeasible just below
    CHECK(q_feasible(kModel, result.q_opt, 12.0, kMargins));
    CHECK_FALSE(q_feasible(kModel, result.q_opt * (1.0 - 1e-3), 12.0, kMargins));
    CHECK(result.bracket_lo < result.q_opt);
    CHECK(result.q_opt <= result.bracket_hi);
    CHECK(result.r_k_at_opt == doctest::Approx(secret_key_rate(kModel, result.q_opt)));
    // the upper crossing lands where the feasible interval ends
    CHECK(result.q_upper > result.q_opt);
    CHECK(q_feasible(kModel, result.q_upper, 12.0, kMargins));
    CHECK_FALSE(q_feasible(kModel, result.q_upper * 1.01, 12.0, kMargins));
}

TEST_CASE("q_opt extends the bracket below the scan floor when needed") {
    // alpha_req(1e-6) = 25.05 < 50, so the crossing sits far below the
    // default scan; the solver walks down until it encloses it.
    const OptResult result = q_opt(kModel, 50.0, kMargins);
    REQUIRE(result.feasible);
    CHECK(result.q_opt < 0.001);
    CHECK(alpha_req(kModel, result.q_opt, kMargins) == doctest::Approx(50.0).epsilon(1e-6));
    CHECK_FALSE(q_feasible(kModel, result.q_opt * (1.0 - 1e-3), 50.0, kMargins));
}

TEST_CASE("q_opt reports infeasibility as a value") {
    const OptResult result = q_opt(kModel, 2.4, kMargins);
    CHECK_FALSE(result.feasible);
}

TEST_CASE("feasible set is a contiguous interval on the scan grid") {
    for (double alpha_fixed : {9.0, 12.0, 20.0}) {
        bool seen = false;
        bool closed = false;
        for (int i = 0; i < 300; ++i) {
            const double q = std::pow(10.0, -6.0 + 9.0 * i / 299.0);
            const bool ok = q_feasible(kModel, q, alpha_fixed, kMargins);
            if (ok) {
                CHECK_FALSE(closed);  // no second interval
                seen = true;
            } else if (seen) {
                closed = true;
            }
        }
        CHECK(seen);
    }
}

TEST_CASE("sweep_region produces ordered, monotone columns") {
    const auto rows = sweep_region(kModel, section_v_sweep());
    REQUIRE(rows.size() == 200);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].point.q > rows[i - 1].point.q);
        CHECK(rows[i].point.r_k < rows[i - 1].point.r_k);
        CHECK(rows[i].point.r_p < rows[i - 1].point.r_p);
        CHECK(rows[i].error.empty());
    }
    // first grid point q = 1e-3 sits near the fine-quantization limit
    CHECK(std::abs(rows.front().point.r_k - optimal_key_rate(kModel)) < 2.5e-3);
}

TEST_CASE("sweep_region with equal channels has an all-zero r_k column") {
    SourceModel same = kModel;
    same.sigma_e2 = same.sigma_b2;
    for (const auto& row : sweep_region(same, section_v_sweep()))
        CHECK(std::abs(row.point.r_k) < 1e-15);
}

TEST_CASE("sweep output is deterministic") {
    const auto rows_a = sweep_region(kModel, section_v_sweep());
    const auto rows_b = sweep_region(kModel, section_v_sweep());
    std::ostringstream csv_a, csv_b;
    write_region_csv(csv_a, "{}", rows_a);
    write_region_csv(csv_b, "{}", rows_b);
    CHECK(csv_a.str() == csv_b.str());
}

TEST_CASE("sweep_channel orders curves by channel quality") {
    SweepConfig grid = section_v_sweep();
    grid.n_points = 60;

    SUBCASE("varying Eve: r_k pointwise increasing in sigma_e2") {
        const auto rows = sweep_channel(kModel, VaryParty::eve, {0.2, 0.3, 0.4}, grid);
        REQUIRE(rows.size() == 3u * 60u);
        for (std::size_t i = 0; i < 60; ++i) {
            const double rk_02 = rows[i].r_k;
            const double rk_03 = rows[60 + i].r_k;
            const double rk_04 = rows[120 + i].r_k;
            CHECK(rk_02 < rk_03);
            CHECK(rk_03 < rk_04);
        }
    }

    SUBCASE("varying Bob: r_k pointwise decreasing in sigma_b2") {
        SourceModel base = kModel;
        base.sigma_e2 = 0.4;
        const auto rows = sweep_channel(base, VaryParty::bob, {0.05, 0.1, 0.15}, grid);
        for (std::size_t i = 0; i < 60; ++i) {
            CHECK(rows[i].r_k > rows[60 + i].r_k);
            CHECK(rows[60 + i].r_k > rows[120 + i].r_k);
        }
    }

    SUBCASE("sigma_b2 == sigma_e2 row is identically zero") {
        const auto rows = sweep_channel(kModel, VaryParty::eve, {kModel.sigma_b2}, grid);
        for (const auto& row : rows) CHECK(std::abs(row.r_k) < 1e-15);
    }
}

TEST_CASE("boundary dominance: better Bob and worse Eve dominates at matched r_p") {
    // Nested scenarios; compare r_k at matched r_p by interpolation.
    const SourceModel strong{1.0, 0.05, 0.4};
    const SourceModel weak{1.0, 0.15, 0.2};
    SweepConfig grid = section_v_sweep();
    grid.n_points = 400;
    grid.q_min = 1e-4;
    const auto rows_s = sweep_region(strong, grid);
    const auto rows_w = sweep_region(weak, grid);

    auto rk_at_rp = [](const std::vector<SweepPoint>& rows, double rp) {
        // r_p decreases with q; find the straddling pair and interpolate.
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double hi = rows[i - 1].point.r_p;
            const double lo = rows[i].point.r_p;
            if (rp <= hi && rp >= lo) {
                const double w = (rp - lo) / (hi - lo);
                return w * rows[i - 1].point.r_k + (1.0 - w) * rows[i].point.r_k;
            }
        }
        return -1.0;
    };

    for (double rp : {0.05, 0.1, 0.2, 0.4, 0.8}) {
        const double rk_strong = rk_at_rp(rows_s, rp);
        const double rk_weak = rk_at_rp(rows_w, rp);
        REQUIRE(rk_strong >= 0.0);
        REQUIRE(rk_weak >= 0.0);
        CHECK(rk_strong > rk_weak);
    }
}

TEST_CASE("SweepConfig validation") {
    SweepConfig bad = section_v_sweep();
    bad.q_min = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = section_v_sweep();
    bad.n_points = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = section_v_sweep();
    bad.alpha_fixed = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

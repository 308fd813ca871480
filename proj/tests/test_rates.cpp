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
#include <limits>

#include "sparckey/rates.hpp"

using namespace sparckey;

namespace {

const SourceModel kModel{1.0, 0.1, 0.2};

double alpha0_branch1(double v) {
    const double t = (1.0 + v) * std::log1p(v);
    return 4.0 * v * t / ((t - v) * (t - v));
}

double alpha0_branch2(double v) {
    const double t = (1.0 + v) * std::log1p(v);
    return t / (t - 2.0 * v);
}

}  // namespace

TEST_CASE("effective_distortion evaluates the closed form") {
    CHECK(effective_distortion(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(effective_distortion(1.0, 0.25) == doctest::Approx(0.2).epsilon(1e-12));
    // q -> infinity forces D_X -> sigma_x2
    CHECK(effective_distortion(1.0, 1e12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(effective_distortion(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(effective_distortion(1.0, -1.0), DomainError);
}

TEST_CASE("effective_distortion is strictly increasing in q and below sigma_x2") {
    for (double sx2 : {0.5, 1.0, 2.0}) {
        double prev = 0.0;
        for (double lq = -4.0; lq <= 4.0; lq += 0.25) {
            const double d = effective_distortion(sx2, std::pow(10.0, lq));
            CHECK(d > prev);
            CHECK(d < sx2);
            prev = d;
        }
    }
}

TEST_CASE("rd_rate evaluates the Gaussian rate-distortion function") {
    CHECK(rd_rate(1.0, 0.5) == doctest::Approx(0.34657359027997265).epsilon(1e-12));
    CHECK(rd_rate(1.0, 0.25) == doctest::Approx(0.69314718055994531).epsilon(1e-12));
    CHECK(rd_rate(1.0, 1.0 - 1e-12) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(rd_rate(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(rd_rate(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(rd_rate(1.0, 1.5), DomainError);
}

TEST_CASE("wz_snr matches hand-evaluated points and the q=0 limit") {
    CHECK(wz_snr(1.0, 1.0, 0.1) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(wz_snr(1.0, 0.0, 0.1) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(wz_snr(1.0, 1.0, 0.2) == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
    // decreasing in q and in the channel noise
    CHECK(wz_snr(1.0, 2.0, 0.1) < wz_snr(1.0, 1.0, 0.1));
    CHECK(wz_snr(1.0, 1.0, 0.3) < wz_snr(1.0, 1.0, 0.2));
    CHECK_THROWS_AS(wz_snr(-1.0, 1.0, 0.1), DomainError);
    CHECK_THROWS_AS(wz_snr(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("wz_capacity evaluates (1/2) ln(1+gamma)") {
    CHECK(wz_capacity(5.0 / 6.0) == doctest::Approx(0.30306790178515777).epsilon(1e-12));
    CHECK(wz_capacity(0.0) == 0.0);
    CHECK(wz_capacity(5.0 / 7.0) == doctest::Approx(0.26949825036634350).epsilon(1e-12));
    CHECK_THROWS_AS(wz_capacity(-0.1), DomainError);
}

TEST_CASE("secret_key_rate equals the capacity difference") {
    CHECK(secret_key_rate(kModel, 1.0) == doctest::Approx(0.033569651418814269).epsilon(1e-12));
    const SourceModel same{1.0, 0.3, 0.3};
    CHECK(secret_key_rate(same, 0.7) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(secret_key_rate(kModel, 1e-9) ==
          doctest::Approx(0.30306790178515777).scale(1.0).epsilon(1e-6));
}

TEST_CASE("secret_key_rate identity and monotonicity on a log grid") {
    for (double lq = -3.0; lq <= 2.0; lq += 0.2) {
        const double q = std::pow(10.0, lq);
        const double direct = secret_key_rate(kModel, q);
        const double composed = wz_capacity(wz_snr(kModel.sigma_x2, q, kModel.sigma_b2)) -
                                wz_capacity(wz_snr(kModel.sigma_x2, q, kModel.sigma_e2));
        CHECK(direct == doctest::Approx(composed).epsilon(1e-15));
    }
    double prev = std::numeric_limits<double>::infinity();
    for (double lq = -3.0; lq <= 2.0; lq += 0.2) {
        const double rate = secret_key_rate(kModel, std::pow(10.0, lq));
        CHECK(rate < prev);
        prev = rate;
    }
}

TEST_CASE("public_rate_bound values and limits") {
    CHECK(public_rate_bound(kModel, 1.0) == doctest::Approx(0.043505688494814883).epsilon(1e-12));
    CHECK(public_rate_bound(kModel, 0.05) == doctest::Approx(0.51804596584338785).epsilon(1e-12));
    CHECK(public_rate_bound(kModel, 1e9) == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
    // nonnegative: R* >= C_WZ,Bob for all q
    for (double lq = -6.0; lq <= 3.0; lq += 0.5)
        CHECK(public_rate_bound(kModel, std::pow(10.0, lq)) >= 0.0);
}

TEST_CASE("optimal_key_rate closed form") {
    CHECK(optimal_key_rate(kModel) == doctest::Approx(0.30306790178515777).epsilon(1e-12));
    CHECK(optimal_key_rate({1.0, 0.4, 0.4}) == 0.0);
    CHECK(optimal_key_rate({1.0, 0.1, 0.4}) == doctest::Approx(0.57256615215150127).epsilon(1e-12));
}

TEST_CASE("rate_gap is exact and has the right limits") {
    CHECK(rate_gap(kModel, 1.0) == doctest::Approx(0.26949825036634350).epsilon(1e-12));
    // gap + rate == optimal exactly (same floating-point path)
    for (double lq = -4.0; lq <= 3.0; lq += 0.5) {
        const double q = std::pow(10.0, lq);
        CHECK(rate_gap(kModel, q) + secret_key_rate(kModel, q) == optimal_key_rate(kModel));
        CHECK(rate_gap(kModel, q) >= 0.0);
    }
    CHECK(rate_gap(kModel, 1e-9) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
    CHECK(rate_gap(kModel, 1e9) ==
          doctest::Approx(optimal_key_rate(kModel)).epsilon(1e-6));
}

TEST_CASE("vstar solves the defining equation") {
    const double v = vstar();
    CHECK(v == doctest::Approx(15.801016190708343).epsilon(1e-9));
    CHECK(std::abs((1.0 + v) * std::log1p(v) - 3.0 * v) < 1e-8);
    // sign bracketing of the defining function
    CHECK((1.0 + 1.0) * std::log1p(1.0) - 3.0 < 0.0);
    CHECK((1.0 + 100.0) * std::log1p(100.0) - 300.0 > 0.0);
}

TEST_CASE("alpha0 branch values and continuity at vstar") {
    CHECK(alpha0(0.5) == doctest::Approx(103.90560802070139).epsilon(1e-10));
    CHECK(alpha0(20.0) == doctest::Approx(2.6711948252960039).epsilon(1e-10));
    const double v = vstar();
    CHECK(alpha0_branch1(v) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(alpha0_branch2(v) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(std::abs(alpha0_branch1(v) - alpha0_branch2(v)) < 1e-6);
    CHECK(alpha0(v) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK_THROWS_AS(alpha0(0.0), DomainError);
}

TEST_CASE("operational_rates applies margins and the large-q floor") {
    const RateMargins margins{0.05, 0.05};
    const auto at_01 = operational_rates(kModel, 0.1, margins);
    CHECK(at_01.r1 == doctest::Approx(1.2588950182191445).epsilon(1e-12));
    CHECK(at_01.r2 == doctest::Approx(0.83185235123982609).epsilon(1e-12));

    // zero margins on the boundary, R* above the floor
    const auto boundary = operational_rates(kModel, 0.1, RateMargins{0.0, 0.0});
    CHECK(boundary.r1 == doctest::Approx(1.1989476363991853).epsilon(1e-12));
    CHECK(boundary.r2 == doctest::Approx(0.87563405393665905).epsilon(1e-12));

    // floor active at q=1: R* = 0.3466 < xi = 0.5
    const auto floored = operational_rates(kModel, 1.0, margins);
    CHECK(floored.r1 == doctest::Approx(0.525).epsilon(1e-12));
}

TEST_CASE("alpha_req matches the oracle chain and diverges at both ends") {
    const RateMargins margins{0.05, 0.05};
    CHECK(alpha_req(kModel, 0.1, margins) == doctest::Approx(10.243641813288846).epsilon(1e-10));
    CHECK(alpha_req(kModel, 1.0, margins) == doctest::Approx(87.450017054530900).epsilon(1e-10));
    const double mid = alpha_req(kModel, 0.03, margins);
    CHECK(alpha_req(kModel, 1e-6, margins) > mid);
    CHECK(alpha_req(kModel, 1e3, margins) > mid);
    for (double lq = -6.0; lq <= 3.0; lq += 0.5)
        CHECK(alpha_req(kModel, std::pow(10.0, lq), margins) >= 2.5);
    // degenerate margins: delta1 = 0 with the floor active makes the first
    // denominator vanish; infeasible, not a crash
    CHECK(std::isinf(alpha_req(kModel, 1.0, RateMargins{0.0, 0.05})));
}

TEST_CASE("evaluate_rate_point fills every field consistently") {
    const RateMargins margins{0.05, 0.05};
    const RatePoint pt = evaluate_rate_point(kModel, 1.0, margins, 90.0);
    CHECK(pt.q == 1.0);
    CHECK(pt.d_x == doctest::Approx(0.5));
    CHECK(pt.r_star == doctest::Approx(0.34657359027997265));
    CHECK(pt.gamma_bob == doctest::Approx(5.0 / 6.0));
    CHECK(pt.c_bob == doctest::Approx(0.30306790178515777));
    CHECK(pt.r_k == doctest::Approx(0.033569651418814269));
    CHECK(pt.rate_gap + pt.r_k == doctest::Approx(optimal_key_rate(kModel)).epsilon(1e-15));
    CHECK(pt.feasible);  // alpha_req = 87.45 <= 90
    CHECK_FALSE(evaluate_rate_point(kModel, 1.0, margins, 12.0).feasible);
}

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

#include "sparckey/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sparckey {

double effective_distortion(double sigma_x2, double q) {
    if (!(sigma_x2 > 0.0)) throw DomainError("effective_distortion: sigma_x2 must be > 0");
    if (!(q > 0.0)) throw DomainError("effective_distortion: q must be > 0");
    return sigma_x2 * q / (sigma_x2 + q);
}

double rd_rate(double sigma2, double d) {
    if (!(sigma2 > 0.0)) throw DomainError("rd_rate: sigma2 must be > 0");
    if (!(d > 0.0) || !(d < sigma2)) throw DomainError("rd_rate: d must lie in (0, sigma2)");
    return 0.5 * std::log(sigma2 / d);
}

double wz_snr(double sigma_x2, double q, double sigma_eta2) {
    if (!(sigma_x2 > 0.0)) throw DomainError("wz_snr: sigma_x2 must be > 0");
    if (!(q >= 0.0)) throw DomainError("wz_snr: q must be >= 0");
    if (!(sigma_eta2 > 0.0)) throw DomainError("wz_snr: sigma_eta2 must be > 0");
    return sigma_x2 * sigma_x2 / (sigma_x2 * q + (sigma_x2 + q) * sigma_eta2);
}

double wz_capacity(double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("wz_capacity: gamma must be >= 0");
    return 0.5 * std::log1p(gamma);
}

double secret_key_rate(const SourceModel& model, double q) {
    model.validate();
    if (!(q > 0.0)) throw DomainError("secret_key_rate: q must be > 0");
    const double gamma_bob = wz_snr(model.sigma_x2, q, model.sigma_b2);
    const double gamma_eve = wz_snr(model.sigma_x2, q, model.sigma_e2);
    return wz_capacity(gamma_bob) - wz_capacity(gamma_eve);
}

double public_rate_bound(const SourceModel& model, double q) {
    model.validate();
    if (!(q > 0.0)) throw DomainError("public_rate_bound: q must be > 0");
    const double gamma_bob = wz_snr(model.sigma_x2, q, model.sigma_b2);
    return 0.5 * std::log(((model.sigma_x2 + q) / q) / (1.0 + gamma_bob));
}

double optimal_key_rate(const SourceModel& model) {
    model.validate();
    return 0.5 * std::log((1.0 + model.sigma_x2 / model.sigma_b2) /
                          (1.0 + model.sigma_x2 / model.sigma_e2));
}

double rate_gap(const SourceModel& model, double q) {
    return optimal_key_rate(model) - secret_key_rate(model, q);
}

namespace {

double vstar_defining(double v) { return (1.0 + v) * std::log1p(v) - 3.0 * v; }

double solve_vstar() {
    double lo = 1.0;
    double hi = 100.0;
    // f(1) < 0 < f(100); bisect to 1e-9 absolute.
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (vstar_defining(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double vstar() {
    static const double root = solve_vstar();
    return root;
}

double alpha0(double v) {
    if (!(v > 0.0)) throw DomainError("alpha0: v must be > 0");
    const double t = (1.0 + v) * std::log1p(v);
    if (v < vstar()) {
        const double den = t - v;
        return 4.0 * v * t / (den * den);
    }
    return t / (t - 2.0 * v);
}

OperationalRates operational_rates(const SourceModel& model, double q,
                                   const RateMargins& margins) {
    model.validate();
    margins.validate();
    if (!(q > 0.0)) throw DomainError("operational_rates: q must be > 0");
    const double d_x = effective_distortion(model.sigma_x2, q);
    const double r_star = rd_rate(model.sigma_x2, d_x);
    const double xi = model.sigma_x2 / (model.sigma_x2 + q);
    OperationalRates rates;
    rates.r1 = (1.0 + margins.delta1) * std::max(r_star, xi);
    rates.r2 = (1.0 - margins.delta2) * wz_capacity(wz_snr(model.sigma_x2, q, model.sigma_b2));
    return rates;
}

double alpha_req(const SourceModel& model, double q, const RateMargins& margins) {
    const auto rates = operational_rates(model, q, margins);
    const double xi = model.sigma_x2 / (model.sigma_x2 + q);
    const double den = rates.r1 - xi;
    if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
    const double term1 = 2.5 * rates.r1 / den;
    const double gamma_bob = wz_snr(model.sigma_x2, q, model.sigma_b2);
    const double term2 = (rates.r1 / rates.r2) * alpha0(gamma_bob);
    return std::max(term1, term2);
}

RatePoint evaluate_rate_point(const SourceModel& model, double q,
                              const RateMargins& margins, double alpha_fixed) {
    RatePoint pt;
    pt.q = q;
    pt.d_x = effective_distortion(model.sigma_x2, q);
    pt.r_star = rd_rate(model.sigma_x2, pt.d_x);
    pt.gamma_bob = wz_snr(model.sigma_x2, q, model.sigma_b2);
    pt.gamma_eve = wz_snr(model.sigma_x2, q, model.sigma_e2);
    pt.c_bob = wz_capacity(pt.gamma_bob);
    pt.c_eve = wz_capacity(pt.gamma_eve);
    pt.r_k = pt.c_bob - pt.c_eve;
    pt.r_p = public_rate_bound(model, q);
    pt.rate_gap = optimal_key_rate(model) - pt.r_k;
    pt.alpha_req = alpha_req(model, q, margins);
    pt.feasible = pt.alpha_req <= alpha_fixed;
    return pt;
}

}  // namespace sparckey

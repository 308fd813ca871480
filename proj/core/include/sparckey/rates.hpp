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

#include "sparckey/source_model.hpp"

namespace sparckey {

// Closed-form rate/capacity/feasibility formulas for the quantize-bin-hash
// key agreement scheme. All rates are in nats per source symbol; bits enter
// only at the hashing boundary. Every function is pure and thread-safe.

/// D_X = sigma_x2 * q / (sigma_x2 + q): mean-squared error of representing
/// X by xi*U, where U = X + V and V ~ N(0, q).
double effective_distortion(double sigma_x2, double q);

/// Gaussian rate-distortion function R*(D) = (1/2) ln(sigma2 / d).
double rd_rate(double sigma2, double d);

/// SNR of the effective channel from the quantization codeword to an
/// observer with channel noise sigma_eta2:
///   gamma = sigma_x2^2 / (sigma_x2*q + (sigma_x2+q)*sigma_eta2).
/// q = 0 is allowed as the fine-quantization limit.
double wz_snr(double sigma_x2, double q, double sigma_eta2);

/// C = (1/2) ln(1 + gamma).
double wz_capacity(double gamma);

/// R_K = C_WZ,Bob - C_WZ,Eve at the same quantization variance q.
double secret_key_rate(const SourceModel& model, double q);

/// R_P = (1/2) ln( ((sigma_x2+q)/q) / (1 + gamma_Bob) ); nonnegative.
double public_rate_bound(const SourceModel& model, double q);

/// I(X;Y) - I(X;Z): the information-theoretic key-rate ceiling.
double optimal_key_rate(const SourceModel& model);

/// optimal_key_rate - secret_key_rate; vanishes as q -> 0.
double rate_gap(const SourceModel& model, double q);

/// Unique positive root of (1+v) ln(1+v) = 3v, the branch point of
/// alpha0. Bisection on [1, 100] to absolute tolerance 1e-9; cached.
double vstar();

/// Section size rate threshold profile:
///   v <  v*:  4 v (1+v) ln(1+v) / [ (1+v) ln(1+v) - v ]^2
///   v >= v*:  (1+v) ln(1+v) / [ (1+v) ln(1+v) - 2v ]
/// Continuous at v* where both branches equal 3.
double alpha0(double v);

/// Operating rate pair with margins applied:
///   r1 = (1+delta1) * max(R*(D_X), sigma_x2/(sigma_x2+q))
///   r2 = (1-delta2) * C_WZ,Bob
/// The max() floor keeps the alpha_req first-branch denominator positive
/// at coarse quantization, where sigma_x2/(sigma_x2+q) exceeds R*(D_X).
struct OperationalRates {
    double r1 = 0.0;
    double r2 = 0.0;
};
OperationalRates operational_rates(const SourceModel& model, double q,
                                   const RateMargins& margins);

/// Minimum section size rate for which the nested construction is
/// guaranteed at quantization level q:
///   max{ 2.5 r1 / (r1 - sigma_x2/(sigma_x2+q)), (r1/r2) * alpha0(gamma_Bob) }.
/// Returns +infinity (treated as infeasible, never a throw) when degenerate
/// margins drive the first denominator to <= 0. Diverges as q -> 0 and
/// as q -> infinity.
double alpha_req(const SourceModel& model, double q, const RateMargins& margins);

/// Every closed-form quantity evaluated at one quantization variance.
struct RatePoint {
    double q = 0.0;          ///< quantization noise variance
    double d_x = 0.0;        ///< effective distortion
    double r_star = 0.0;     ///< minimum quantization rate R*(D_X)
    double gamma_bob = 0.0;  ///< WZ SNR toward Bob
    double gamma_eve = 0.0;  ///< WZ SNR toward Eve
    double c_bob = 0.0;      ///< WZ capacity toward Bob
    double c_eve = 0.0;      ///< WZ capacity toward Eve
    double r_k = 0.0;        ///< secret key rate bound
    double r_p = 0.0;        ///< public rate bound
    double rate_gap = 0.0;   ///< optimal_key_rate - r_k
    double alpha_req = 0.0;  ///< required section size rate
    bool feasible = false;   ///< alpha_req <= the fixed alpha it was judged against
};

/// Evaluate a full RatePoint; `alpha_fixed` sets the feasibility flag.
RatePoint evaluate_rate_point(const SourceModel& model, double q,
                              const RateMargins& margins, double alpha_fixed);

}  // namespace sparckey

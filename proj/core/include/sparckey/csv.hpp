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

#include <iosfwd>
#include <string>
#include <vector>

#include "sparckey/feasibility.hpp"
#include "sparckey/protocol.hpp"

namespace sparckey {

// Stable CSV schemas, one writer per figure/simulation artifact. Every
// file starts with '#'-prefixed header lines that embed the effective
// config echo, so any CSV can be regenerated from its own header.
// Numeric cells are printed with "%.9g".

std::string csv_double(double value);

void write_csv_header(std::ostream& os, const std::string& subcommand,
                      const std::string& config_echo);

/// Columns: q,d_x,r_star,gamma_bob,gamma_eve,c_bob,c_eve,r_k,r_p,rate_gap,
///          alpha_req,feasible,error
void write_region_csv(std::ostream& os, const std::string& config_echo,
                      const std::vector<SweepPoint>& rows);

/// Columns: party,channel_var,q,r_k,r_p,alpha_req,feasible
void write_impact_csv(std::ostream& os, const std::string& config_echo,
                      const std::vector<ChannelSweepRow>& rows);

/// Columns: q,n,L,M,M_inner,trials,distortion_mean,wz_error_rate,
///          key_disagree_rate,uniformity,leakage,wall_time
void write_simulate_csv(std::ostream& os, const std::string& config_echo,
                        const std::vector<SimGridPoint>& grid,
                        const std::vector<TrialStats>& rows);

}  // namespace sparckey

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

#include "sparckey/csv.hpp"

#include <cstdio>
#include <ostream>

namespace sparckey {

std::string csv_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

void write_csv_header(std::ostream& os, const std::string& subcommand,
                      const std::string& config_echo) {
    os << "# sparckey " << subcommand << " v1\n";
    os << "# config: " << config_echo << "\n";
}

void write_region_csv(std::ostream& os, const std::string& config_echo,
                      const std::vector<SweepPoint>& rows) {
    write_csv_header(os, "region", config_echo);
    os << "q,d_x,r_star,gamma_bob,gamma_eve,c_bob,c_eve,r_k,r_p,rate_gap,alpha_req,feasible,error\n";
    for (const SweepPoint& row : rows) {
        const RatePoint& p = row.point;
        os << csv_double(p.q) << ',' << csv_double(p.d_x) << ',' << csv_double(p.r_star) << ','
           << csv_double(p.gamma_bob) << ',' << csv_double(p.gamma_eve) << ','
           << csv_double(p.c_bob) << ',' << csv_double(p.c_eve) << ',' << csv_double(p.r_k) << ','
           << csv_double(p.r_p) << ',' << csv_double(p.rate_gap) << ','
           << csv_double(p.alpha_req) << ',' << (p.feasible ? 1 : 0) << ',' << row.error << '\n';
    }
}

void write_impact_csv(std::ostream& os, const std::string& config_echo,
                      const std::vector<ChannelSweepRow>& rows) {
    write_csv_header(os, "impact", config_echo);
    os << "party,channel_var,q,r_k,r_p,alpha_req,feasible\n";
    for (const ChannelSweepRow& row : rows) {
        os << (row.party == VaryParty::bob ? "bob" : "eve") << ','
           << csv_double(row.channel_var) << ',' << csv_double(row.q) << ','
           << csv_double(row.r_k) << ',' << csv_double(row.r_p) << ','
           << csv_double(row.alpha_req) << ',' << (row.feasible ? 1 : 0) << '\n';
    }
}

void write_simulate_csv(std::ostream& os, const std::string& config_echo,
                        const std::vector<SimGridPoint>& grid,
                        const std::vector<TrialStats>& rows) {
    write_csv_header(os, "simulate", config_echo);
    os << "q,n,L,M,M_inner,trials,distortion_mean,wz_error_rate,key_disagree_rate,"
          "uniformity,leakage,wall_time\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SimGridPoint& g = grid[i];
        const TrialStats& s = rows[i];
        os << csv_double(g.q) << ',' << g.params.n << ',' << g.params.l_sections << ','
           << g.params.m_per_section << ',' << g.params.m_inner << ',' << s.trials << ','
           << csv_double(s.distortion_mean) << ',' << csv_double(s.wz_error_rate) << ','
           << csv_double(s.key_disagree_rate) << ',' << csv_double(s.uniformity) << ','
           << csv_double(s.leakage) << ',' << csv_double(s.wall_time) << '\n';
    }
}

}  // namespace sparckey

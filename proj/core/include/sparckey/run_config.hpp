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

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sparckey/feasibility.hpp"
#include "sparckey/protocol.hpp"

namespace sparckey {

// Batch-run configuration. JSON schema (all keys optional, strict: unknown
// keys are rejected with their name):
//
// {
//   "model":  {"sigma_x2": 1.0, "sigma_b2": 0.1, "sigma_e2": 0.2},
//   "code":   {"n": 96, "l_sections": 12, "m_per_section": 32, "m_inner": 4,
//              "amp_power": 0.0,          // 0 = rate-distortion default
//              "dict_seed": 0},           // 0 = derive from the master seed
//   "wz":     {"q": 1.0, "delta1": 0.05, "delta2": 0.05},
//   "hash":   {"nu": 0.0, "out_bits": -1},  // -1 = key-length rule decides
//   "sweep":  {"q_min": 1e-3, "q_max": 1e2, "n_points": 200,
//              "log_spaced": true, "alpha_fixed": 6.0},
//   "sim":    {"trials": 200, "master_seed": 1, "threads": 1,
//              "decoder": "auto",          // auto | exhaustive | greedy
//              "eve_view": "decoded"},     // decoded | statistic
//   "output": {"dir": "", "format": "csv"} // dir "" = $SPARCKEY_OUT_DIR or "."
// }

struct RunConfig {
    SourceModel model;
    std::size_t code_n = 96;
    std::size_t code_l = 12;
    std::size_t code_m = 32;
    std::size_t code_m_inner = 4;
    double amp_power = 0.0;
    std::uint64_t dict_seed = 0;
    double q = 1.0;
    RateMargins margins;
    double nu = 0.0;
    std::int64_t out_bits = -1;
    SweepConfig sweep;
    std::size_t trials = 200;
    std::uint64_t master_seed = 1;
    int threads = 1;
    std::string decoder = "auto";
    std::string eve_view = "decoded";
    std::string output_dir;
    std::string output_format = "csv";

    /// Where each top-level group came from: "default", "file" or "flag".
    std::map<std::string, std::string> provenance;

    /// Fully resolved CodeParams (amp_power default and dict_seed
    /// derivation applied).
    CodeParams resolved_code_params() const;

    DecodeMode decode_mode() const;
    EveView eve_view_mode() const;

    /// Canonical single-line JSON echo of the effective configuration,
    /// provenance included. Stable key order.
    std::string echo_json() const;

    /// FNV-1a 64 over echo_json() minus the provenance block, as 16 hex
    /// digits; used for deterministic output file names.
    std::string config_hash() const;

    void validate() const;
};

/// Parse a config file (strict). Missing file or malformed content throws
/// ConfigError; unknown keys are reported by name.
RunConfig load_config(const std::string& path);

/// Parse config JSON text (same strictness), `origin` names the source in
/// the provenance map.
RunConfig parse_config_json(const std::string& text, const std::string& origin);

}  // namespace sparckey

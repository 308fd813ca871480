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

#include <optional>
#include <vector>

#include "sparckey/estimators.hpp"
#include "sparckey/hashing.hpp"
#include "sparckey/seeds.hpp"
#include "sparckey/wz.hpp"

namespace sparckey {

/// Every stream seed a session consumed; enough to regenerate it.
struct SessionSeeds {
    std::uint64_t master = 0;
    std::uint64_t dictionary = 0;
    std::uint64_t dither = 0;
    std::uint64_t source = 0;
    std::uint64_t noise_bob = 0;
    std::uint64_t noise_eve = 0;
    std::uint64_t hash = 0;

    bool operator==(const SessionSeeds&) const = default;
};

/// One end-to-end protocol run.
struct SessionTranscript {
    std::vector<double> x, y, z;
    SparseCoeffs beta_a;
    BinMessage bin;
    SparseCoeffs beta_b_hat;
    SparseCoeffs beta_e_hat;
    BitString key_a, key_b;
    bool wz_success = false;  ///< beta_b_hat == beta_a
    bool key_match = false;   ///< key_a == key_b
    SessionSeeds seeds;
};

/// How Eve's side information is summarized for the leakage estimator.
enum class EveView {
    decoded,    ///< hash of her decoded coefficients (her induced key guess)
    statistic,  ///< 16-level quantization of her matched-filter statistic
};

struct MonteCarloOptions {
    int threads = 1;
    DecodeMode decode_mode = DecodeMode::automatic;
    EveView eve_view = EveView::decoded;
    bool keep_transcripts = false;
    bool record_wall_time = false;  ///< off keeps aggregate output bit-reproducible
};

/// Aggregates over a batch of sessions.
struct TrialStats {
    std::size_t trials = 0;
    double distortion_mean = 0.0;     ///< mean ||x - xi*synthesize(beta_a)||^2 / n
    double dither_distortion_mean = 0.0;  ///< mean ||x - xi*u||^2 / n, tracks D_X
    double wz_error_rate = 0.0;
    double key_disagree_rate = 0.0;
    double uniformity = 0.0;  ///< plug-in entropy deficit ln|K| - H(K), nats
    double leakage = 0.0;     ///< plug-in variational distance estimate
    double wall_time = 0.0;   ///< seconds; 0 unless wall-time recording is on
};

/// Runs one session with all streams derived from master_seed (the
/// dictionary comes from cfg.params.dict_seed). Deterministic.
SessionTranscript run_session(const SourceModel& model, const WzConfig& cfg,
                              const std::optional<HashSpec>& hash, std::uint64_t master_seed,
                              DecodeMode mode = DecodeMode::automatic);

/// Same session with a prebuilt (shared, immutable) dictionary.
SessionTranscript run_session(const SourceModel& model, const WzConfig& cfg,
                              const std::optional<HashSpec>& hash, const Dictionary& dict,
                              std::uint64_t master_seed, DecodeMode mode = DecodeMode::automatic);

struct MonteCarloResult {
    TrialStats stats;
    std::vector<SessionTranscript> transcripts;  ///< filled only on request
};

/// Aggregates `trials` sessions with per-trial seeds derived by counter
/// from master_seed. The aggregate is independent of the thread count;
/// trials are reduced in index order.
MonteCarloResult monte_carlo(const SourceModel& model, const WzConfig& cfg,
                             const std::optional<HashSpec>& hash, std::size_t trials,
                             std::uint64_t master_seed, const MonteCarloOptions& opts = {});

/// Key length the simulator actually hashes to: the Theorem-driven rule
/// floor(n * max(0, R_K - nu)/ln 2), additionally capped by the within-bin
/// entropy L * log2(M') bits that remains secret once the bin index is
/// public. An explicit override wins.
std::size_t session_key_bits(const SourceModel& model, const CodeParams& params, double q,
                             double nu, std::optional<std::size_t> override_bits = std::nullopt);

struct SimGridPoint {
    double q = 0.0;
    CodeParams params;
};

/// One TrialStats row per grid point, each reproducible in isolation from
/// the row seed derive_seed(master, sweep_row, index).
std::vector<TrialStats> sweep_simulate(const std::vector<SimGridPoint>& grid,
                                       const SourceModel& model, std::size_t trials,
                                       std::uint64_t master_seed, double nu,
                                       const MonteCarloOptions& opts = {});

}  // namespace sparckey

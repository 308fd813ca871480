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

#include "sparckey/protocol.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace sparckey {

namespace {

std::vector<double> gaussian_vector(std::size_t n, double variance, std::uint64_t seed) {
    std::vector<double> v(n);
    GaussianSampler gauss(seed);
    const double stddev = std::sqrt(variance);
    for (double& x : v) x = gauss.next(stddev);
    return v;
}

/// 16-level uniform quantizer of Eve's normalized matched-filter
/// statistic <z, x_hat_e>/n over [-range, range].
std::uint64_t quantize_statistic(const std::vector<double>& z, const std::vector<double>& x_hat,
                                 double range) {
    double stat = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) stat += z[i] * x_hat[i];
    stat /= static_cast<double>(z.size());
    const double unit = std::clamp((stat + range) / (2.0 * range), 0.0, 1.0);
    return std::min<std::uint64_t>(15, static_cast<std::uint64_t>(unit * 16.0));
}

SessionTranscript run_session_impl(const SourceModel& model, const WzConfig& cfg,
                                   const std::optional<HashSpec>& hash, const Dictionary& dict,
                                   std::uint64_t master_seed, DecodeMode mode) {
    cfg.validate();
    const CodeParams& params = cfg.params;

    SessionTranscript tr;
    tr.seeds.master = master_seed;
    tr.seeds.dictionary = params.dict_seed;
    tr.seeds.source = derive_seed(master_seed, SeedStream::source);
    tr.seeds.dither = derive_seed(master_seed, SeedStream::dither);
    tr.seeds.noise_bob = derive_seed(master_seed, SeedStream::noise_bob);
    tr.seeds.noise_eve = derive_seed(master_seed, SeedStream::noise_eve);
    tr.seeds.hash = hash ? hash->seed_value : 0;

    tr.x = gaussian_vector(params.n, model.sigma_x2, tr.seeds.source);
    tr.y = tr.x;
    {
        GaussianSampler gauss(tr.seeds.noise_bob);
        const double sd = std::sqrt(model.sigma_b2);
        for (double& v : tr.y) v += gauss.next(sd);
    }
    tr.z = tr.x;
    {
        GaussianSampler gauss(tr.seeds.noise_eve);
        const double sd = std::sqrt(model.sigma_e2);
        for (double& v : tr.z) v += gauss.next(sd);
    }

    AliceEncoding enc = alice_encode(tr.x, cfg, dict, tr.seeds.dither);
    tr.beta_a = std::move(enc.beta);
    tr.bin = std::move(enc.bin);
    tr.beta_b_hat = bob_decode(tr.y, tr.bin, cfg, dict, mode);
    tr.beta_e_hat = eve_decode(tr.z, tr.bin, cfg, dict, mode);
    tr.wz_success = tr.beta_b_hat.sections == tr.beta_a.sections;

    if (hash) {
        tr.key_a = toeplitz_hash(*hash, beta_to_bits(tr.beta_a, params));
        tr.key_b = toeplitz_hash(*hash, beta_to_bits(tr.beta_b_hat, params));
    }
    tr.key_match = tr.key_a == tr.key_b;
    return tr;
}

struct TrialRecord {
    double distortion = 0.0;
    double dither_distortion = 0.0;
    bool wz_error = false;
    bool key_disagree = false;
    BitString key;
    std::uint64_t eve_view = 0;
};

}  // namespace

SessionTranscript run_session(const SourceModel& model, const WzConfig& cfg,
                              const std::optional<HashSpec>& hash, std::uint64_t master_seed,
                              DecodeMode mode) {
    const Dictionary dict = Dictionary::build(cfg.params);
    return run_session_impl(model, cfg, hash, dict, master_seed, mode);
}

SessionTranscript run_session(const SourceModel& model, const WzConfig& cfg,
                              const std::optional<HashSpec>& hash, const Dictionary& dict,
                              std::uint64_t master_seed, DecodeMode mode) {
    return run_session_impl(model, cfg, hash, dict, master_seed, mode);
}

std::size_t session_key_bits(const SourceModel& model, const CodeParams& params, double q,
                             double nu, std::optional<std::size_t> override_bits) {
    if (override_bits) return *override_bits;
    const KeyLengthRule rule = choose_key_length(model, params, q, nu);
    const std::size_t bin_secret_bits =
        params.l_sections * static_cast<std::size_t>(params.inner_bits_per_section());
    return std::min(rule.k_bits, bin_secret_bits);
}

MonteCarloResult monte_carlo(const SourceModel& model, const WzConfig& cfg,
                             const std::optional<HashSpec>& hash, std::size_t trials,
                             std::uint64_t master_seed, const MonteCarloOptions& opts) {
    if (trials < 1) throw UsageError("monte_carlo: trials must be >= 1");
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();

    const Dictionary dict = Dictionary::build(cfg.params);
    const double view_range =
        2.0 * std::sqrt(model.sigma_x2 * std::max(cfg.params.amp_power, 1e-12));

    std::vector<TrialRecord> records(trials);
    std::vector<SessionTranscript> transcripts;
    if (opts.keep_transcripts) transcripts.resize(trials);

    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            try {
                const std::uint64_t trial_seed =
                    derive_seed(master_seed, SeedStream::trial, t);
                SessionTranscript tr =
                    run_session_impl(model, cfg, hash, dict, trial_seed, opts.decode_mode);

                TrialRecord& rec = records[t];
                const std::vector<double> x_hat = reconstruct(tr.beta_a, cfg, dict);
                rec.distortion = distortion_of(tr.x, x_hat);
                {
                    // || x - xi * u ||^2 / n against the dithered sequence.
                    const std::uint64_t dither_seed = tr.seeds.dither;
                    GaussianSampler gauss(dither_seed);
                    const double sd = std::sqrt(cfg.q);
                    double sq = 0.0;
                    for (std::size_t i = 0; i < tr.x.size(); ++i) {
                        const double u_i = tr.x[i] + gauss.next(sd);
                        const double diff = tr.x[i] - cfg.xi * u_i;
                        sq += diff * diff;
                    }
                    rec.dither_distortion = sq / static_cast<double>(tr.x.size());
                }
                rec.wz_error = !tr.wz_success;
                rec.key_disagree = !tr.key_match;
                rec.key = tr.key_a;
                if (hash) {
                    if (opts.eve_view == EveView::decoded) {
                        rec.eve_view =
                            toeplitz_hash(*hash, beta_to_bits(tr.beta_e_hat, cfg.params))
                                .to_uint64();
                    } else {
                        const std::vector<double> x_hat_e = reconstruct(tr.beta_e_hat, cfg, dict);
                        rec.eve_view = quantize_statistic(tr.z, x_hat_e, view_range);
                    }
                }
                if (opts.keep_transcripts) transcripts[t] = std::move(tr);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    try {
                        std::throw_with_nested(
                            std::runtime_error("monte_carlo: trial " + std::to_string(t) +
                                               " failed"));
                    } catch (...) {
                        failure = std::current_exception();
                    }
                }
                return;
            }
        }
    };

    const int threads = std::max(1, opts.threads);
    if (threads == 1 || trials == 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (trials + threads - 1) / static_cast<std::size_t>(threads);
        for (int w = 0; w < threads; ++w) {
            const std::size_t begin = static_cast<std::size_t>(w) * chunk;
            const std::size_t end = std::min(trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Reduce in trial order so the aggregate is thread-count independent.
    MonteCarloResult result;
    TrialStats& stats = result.stats;
    stats.trials = trials;
    std::vector<BitString> keys;
    std::vector<std::uint64_t> views;
    keys.reserve(trials);
    views.reserve(trials);
    for (const TrialRecord& rec : records) {
        stats.distortion_mean += rec.distortion;
        stats.dither_distortion_mean += rec.dither_distortion;
        stats.wz_error_rate += rec.wz_error ? 1.0 : 0.0;
        stats.key_disagree_rate += rec.key_disagree ? 1.0 : 0.0;
        keys.push_back(rec.key);
        views.push_back(rec.eve_view);
    }
    const double count = static_cast<double>(trials);
    stats.distortion_mean /= count;
    stats.dither_distortion_mean /= count;
    stats.wz_error_rate /= count;
    stats.key_disagree_rate /= count;

    const std::size_t k = keys.empty() ? 0 : keys[0].size();
    if (k > 0 && k <= 24 && (std::size_t{2} << k) <= trials) {
        stats.uniformity = estimate_uniformity(keys).entropy_deficit_nats;
        try {
            stats.leakage = estimate_leakage(keys, views);
        } catch (const SizingError&) {
            // Joint alphabet outgrew the trial budget; not estimable here.
            stats.leakage = std::numeric_limits<double>::quiet_NaN();
        }
    }

    if (opts.record_wall_time) {
        stats.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    }
    result.transcripts = std::move(transcripts);
    return result;
}

std::vector<TrialStats> sweep_simulate(const std::vector<SimGridPoint>& grid,
                                       const SourceModel& model, std::size_t trials,
                                       std::uint64_t master_seed, double nu,
                                       const MonteCarloOptions& opts) {
    if (grid.empty()) throw UsageError("sweep_simulate: empty grid");
    std::vector<TrialStats> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const SimGridPoint& point = grid[i];
        const WzConfig cfg = WzConfig::make(model, point.q, point.params);
        const std::uint64_t row_seed = derive_seed(master_seed, SeedStream::sweep_row, i);
        const std::size_t k_bits = session_key_bits(model, point.params, point.q, nu);
        std::optional<HashSpec> hash;
        if (k_bits > 0) {
            const std::size_t in_bits =
                point.params.l_sections * point.params.bits_per_section();
            hash = HashSpec::make(in_bits, k_bits, derive_seed(row_seed, SeedStream::hash));
        }
        rows.push_back(monte_carlo(model, cfg, hash, trials, row_seed, opts).stats);
    }
    return rows;
}

}  // namespace sparckey

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

#include "sparckey/wz.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sparckey/rng.hpp"

namespace sparckey {

WzConfig WzConfig::make(const SourceModel& model, double q, const CodeParams& params) {
    model.validate();
    params.validate();
    if (!(q >= 0.0)) throw DomainError("WzConfig: q must be >= 0");
    WzConfig cfg;
    cfg.q = q;
    cfg.xi = model.sigma_x2 / (model.sigma_x2 + q);
    cfg.params = params;
    cfg.model = model;
    return cfg;
}

void WzConfig::validate() const {
    model.validate();
    params.validate();
    if (!(q >= 0.0)) throw DomainError("WzConfig: q must be >= 0");
    const double expected = model.sigma_x2 / (model.sigma_x2 + q);
    if (!(xi > 0.0) || !(xi <= 1.0) || std::abs(xi - expected) > 1e-12 * expected)
        throw DomainError("WzConfig: xi inconsistent with q and model");
}

namespace {

bool fits_cap(std::size_t base, std::size_t l, std::size_t cap) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < l; ++i) {
        if (base != 0 && size > cap / base) return false;
        size *= base;
    }
    return true;
}

void check_bin(const BinMessage& bin, const CodeParams& params) {
    if (bin.sub_sections.size() != params.l_sections)
        throw ShapeError("decode: bin length must equal l_sections");
    for (const std::uint32_t s : bin.sub_sections)
        if (s >= params.sub_sections()) throw IndexError("decode: sub-section index out of range");
}

/// Within-bin ML search with per-level partial sums, lexicographic order.
struct BinSearch {
    const Dictionary& dict;
    std::span<const double> obs;
    const BinMessage& bin;
    double scaled_amp;  // xi * c
    std::vector<std::uint32_t> current;
    std::vector<std::uint32_t> best;
    double best_sq = std::numeric_limits<double>::infinity();
    std::vector<double> partial;

    BinSearch(const Dictionary& d, std::span<const double> o, const BinMessage& b, double sa)
        : dict(d),
          obs(o),
          bin(b),
          scaled_amp(sa),
          current(d.params().l_sections, 0),
          best(d.params().l_sections, 0),
          partial((d.params().l_sections + 1) * d.params().n, 0.0) {}

    std::span<double> level(std::size_t depth) {
        return {partial.data() + depth * dict.params().n, dict.params().n};
    }

    void run(std::size_t depth) {
        const auto& params = dict.params();
        const std::size_t n = params.n;
        if (depth == params.l_sections) {
            double sq = 0.0;
            const auto sum = level(depth);
            for (std::size_t i = 0; i < n; ++i) {
                const double diff = obs[i] - sum[i];
                sq += diff * diff;
            }
            if (sq < best_sq) {
                best_sq = sq;
                best = current;
            }
            return;
        }
        const std::uint32_t base =
            bin.sub_sections[depth] * static_cast<std::uint32_t>(params.m_inner);
        for (std::uint32_t w = 0; w < params.m_inner; ++w) {
            current[depth] = base + w;
            const auto column = dict.column(depth, base + w);
            const auto prev = level(depth);
            const auto next = level(depth + 1);
            for (std::size_t i = 0; i < n; ++i) next[i] = prev[i] + scaled_amp * column[i];
            run(depth + 1);
        }
    }
};

SparseCoeffs decode_impl(std::span<const double> obs, const BinMessage& bin, const WzConfig& cfg,
                         const Dictionary& dict, DecodeMode mode, std::size_t cap) {
    const CodeParams& params = dict.params();
    if (obs.size() != params.n)
        throw ShapeError("decode: observation length " + std::to_string(obs.size()) +
                         " != n = " + std::to_string(params.n));
    check_bin(bin, params);

    if (mode == DecodeMode::automatic) {
        mode = fits_cap(params.m_inner, params.l_sections, kAutoExhaustiveThreshold)
                   ? DecodeMode::exhaustive
                   : DecodeMode::greedy;
    }

    const double amplitude = params.amplitude();
    const double scaled_amp = cfg.xi * amplitude;

    if (mode == DecodeMode::exhaustive) {
        checked_codebook_size(params.m_inner, params.l_sections, cap, "bob_decode");
        BinSearch search(dict, obs, bin, scaled_amp);
        search.run(0);
        SparseCoeffs beta;
        beta.sections = std::move(search.best);
        beta.amplitude = amplitude;
        return beta;
    }

    // Greedy: per section pick the sub-section column minimizing
    // ||res - xi*c*a||^2, i.e. maximizing <res, a>*xi*c - (xi*c)^2 ||a||^2 / 2.
    std::vector<double> residual(obs.begin(), obs.end());
    SparseCoeffs beta;
    beta.amplitude = amplitude;
    beta.sections.reserve(params.l_sections);
    for (std::size_t s = 0; s < params.l_sections; ++s) {
        const std::uint32_t base =
            bin.sub_sections[s] * static_cast<std::uint32_t>(params.m_inner);
        std::uint32_t best_col = base;
        double best_score = -std::numeric_limits<double>::infinity();
        for (std::uint32_t w = 0; w < params.m_inner; ++w) {
            const auto column = dict.column(s, base + w);
            double proj = 0.0;
            double norm_sq = 0.0;
            for (std::size_t i = 0; i < params.n; ++i) {
                proj += residual[i] * column[i];
                norm_sq += column[i] * column[i];
            }
            const double score = scaled_amp * proj - 0.5 * scaled_amp * scaled_amp * norm_sq;
            if (score > best_score) {
                best_score = score;
                best_col = base + w;
            }
        }
        beta.sections.push_back(best_col);
        const auto column = dict.column(s, best_col);
        for (std::size_t i = 0; i < params.n; ++i) residual[i] -= scaled_amp * column[i];
    }
    return beta;
}

}  // namespace

AliceEncoding alice_encode(std::span<const double> x, const WzConfig& cfg,
                           const Dictionary& dict, std::uint64_t noise_seed) {
    const CodeParams& params = dict.params();
    if (x.size() != params.n)
        throw ShapeError("alice_encode: x length " + std::to_string(x.size()) +
                         " != n = " + std::to_string(params.n));

    AliceEncoding enc;
    enc.u.assign(x.begin(), x.end());
    const double stddev = std::sqrt(cfg.q);
    GaussianSampler dither(noise_seed);
    for (double& ui : enc.u) ui += dither.next(stddev);

    const QuantizeResult quant =
        fits_cap(params.m_per_section, params.l_sections, kAutoExhaustiveThreshold)
            ? encode_exhaustive(dict, enc.u)
            : encode_greedy(dict, enc.u);
    enc.beta = quant.beta;
    enc.bin = bin_split(enc.beta, params).bin;
    return enc;
}

SparseCoeffs bob_decode(std::span<const double> y, const BinMessage& bin, const WzConfig& cfg,
                        const Dictionary& dict, DecodeMode mode, std::size_t cap) {
    return decode_impl(y, bin, cfg, dict, mode, cap);
}

SparseCoeffs eve_decode(std::span<const double> z, const BinMessage& bin, const WzConfig& cfg,
                        const Dictionary& dict, DecodeMode mode, std::size_t cap) {
    return decode_impl(z, bin, cfg, dict, mode, cap);
}

std::vector<double> reconstruct(const SparseCoeffs& beta, const WzConfig& cfg,
                                const Dictionary& dict) {
    std::vector<double> x_hat = synthesize(dict, beta);
    for (double& v : x_hat) v *= cfg.xi;
    return x_hat;
}

}  // namespace sparckey

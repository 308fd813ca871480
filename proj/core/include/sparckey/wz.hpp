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
#include <span>
#include <vector>

#include "sparckey/quantizer.hpp"
#include "sparckey/source_model.hpp"

namespace sparckey {

/// Quantize-and-bin configuration. xi = sigma_x2 / (sigma_x2 + q) is the
/// reconstruction scaling; q = 0 is accepted as the fine-quantization
/// limit (xi = 1, zero dither).
struct WzConfig {
    double q = 0.0;
    double xi = 1.0;
    CodeParams params;
    SourceModel model;

    static WzConfig make(const SourceModel& model, double q, const CodeParams& params);
    void validate() const;
};

enum class DecodeMode {
    automatic,   ///< exhaustive when the search space fits the cap, else greedy
    exhaustive,  ///< within-bin maximum-likelihood search
    greedy,      ///< section-wise residual fit restricted to the bin
};

/// Codebook searches below this size run exhaustively in automatic mode.
inline constexpr std::size_t kAutoExhaustiveThreshold = std::size_t{1} << 12;

struct AliceEncoding {
    SparseCoeffs beta;
    BinMessage bin;
    std::vector<double> u;  ///< the dithered sequence x + v
};

/// Step 1-2 of the protocol: u = x + v with v ~ N(0, q) drawn from
/// noise_seed, beta = quantizer output on u (greedy above the automatic
/// threshold), bin = bin_split(beta).
AliceEncoding alice_encode(std::span<const double> x, const WzConfig& cfg,
                           const Dictionary& dict, std::uint64_t noise_seed);

/// Within-bin decoding against the observation. Exhaustive mode returns
/// argmin over the bin of ||obs - xi * synthesize(beta)||^2 (ML for the
/// effective channel; codeword-energy differences retained); greedy mode
/// runs the section-wise residual fit over the bin's sub-sections. Ties
/// toward the smallest index.
SparseCoeffs bob_decode(std::span<const double> y, const BinMessage& bin, const WzConfig& cfg,
                        const Dictionary& dict, DecodeMode mode = DecodeMode::automatic,
                        std::size_t cap = kDefaultEnumerationCap);

/// Eve runs the same decoder on her observation; used by the secrecy
/// experiments only.
SparseCoeffs eve_decode(std::span<const double> z, const BinMessage& bin, const WzConfig& cfg,
                        const Dictionary& dict, DecodeMode mode = DecodeMode::automatic,
                        std::size_t cap = kDefaultEnumerationCap);

/// x_hat = xi * synthesize(beta).
std::vector<double> reconstruct(const SparseCoeffs& beta, const WzConfig& cfg,
                                const Dictionary& dict);

}  // namespace sparckey

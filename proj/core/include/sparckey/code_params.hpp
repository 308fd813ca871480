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
#include <cstddef>

#include "sparckey/errors.hpp"

namespace sparckey {

/// Nested code geometry: blocklength n, L sections of M columns each,
/// sub-sections of M' columns. M and M' are powers of two so that
/// M' | M holds by construction and section indices serialize to whole
/// bits. amp_power is the target codeword power P' (the per-section
/// amplitude is c = sqrt(n * P' / L)).
struct CodeParams {
    std::size_t n = 0;
    std::size_t l_sections = 0;
    std::size_t m_per_section = 0;
    std::size_t m_inner = 0;
    double amp_power = 1.0;
    std::uint64_t dict_seed = 0;

    void validate() const;

    std::size_t sub_sections() const { return m_per_section / m_inner; }

    /// Overall code rate r1 = L ln(M) / n (nats/symbol).
    double rate_r1() const;
    /// Within-bin rate r2 = L ln(M') / n (nats/symbol).
    double rate_r2() const;
    /// Public (bin index) rate r1 - r2.
    double rate_public() const;
    /// Section size rate alpha = ln M / ln L (requires L > 1).
    double alpha() const;
    /// Inner section size rate alpha' = ln M' / ln L (requires L > 1).
    double alpha_inner() const;

    /// Per-section coefficient amplitude c = sqrt(n * amp_power / L).
    double amplitude() const;

    /// log2(M) and log2(M'), exact since both are powers of two.
    unsigned bits_per_section() const;
    unsigned inner_bits_per_section() const;
};

/// Power of the optimal rate-distortion test-channel codeword for the
/// dithered source U (variance sigma_x2 + q) at the code's own rate:
/// (sigma_x2 + q) * (1 - exp(-2 r1)).
double default_amp_power(double sigma_x2, double q, const CodeParams& params);

bool is_power_of_two(std::size_t v);

}  // namespace sparckey

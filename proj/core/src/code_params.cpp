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

#include "sparckey/code_params.hpp"

#include <bit>
#include <cmath>

namespace sparckey {

bool is_power_of_two(std::size_t v) { return v != 0 && std::has_single_bit(v); }

void CodeParams::validate() const {
    if (n == 0) throw DomainError("CodeParams: n must be positive");
    if (l_sections == 0) throw DomainError("CodeParams: l_sections must be positive");
    if (!is_power_of_two(m_per_section))
        throw DomainError("CodeParams: m_per_section must be a power of two");
    if (!is_power_of_two(m_inner))
        throw DomainError("CodeParams: m_inner must be a power of two");
    if (m_inner > m_per_section)
        throw DomainError("CodeParams: m_inner must not exceed m_per_section");
    if (!(amp_power >= 0.0)) throw DomainError("CodeParams: amp_power must be >= 0");
}

double CodeParams::rate_r1() const {
    return static_cast<double>(l_sections) * std::log(static_cast<double>(m_per_section)) /
           static_cast<double>(n);
}

double CodeParams::rate_r2() const {
    return static_cast<double>(l_sections) * std::log(static_cast<double>(m_inner)) /
           static_cast<double>(n);
}

double CodeParams::rate_public() const { return rate_r1() - rate_r2(); }

double CodeParams::alpha() const {
    if (l_sections < 2) throw DomainError("CodeParams::alpha requires L > 1");
    return std::log(static_cast<double>(m_per_section)) /
           std::log(static_cast<double>(l_sections));
}

double CodeParams::alpha_inner() const {
    if (l_sections < 2) throw DomainError("CodeParams::alpha_inner requires L > 1");
    return std::log(static_cast<double>(m_inner)) / std::log(static_cast<double>(l_sections));
}

double CodeParams::amplitude() const {
    return std::sqrt(static_cast<double>(n) * amp_power / static_cast<double>(l_sections));
}

unsigned CodeParams::bits_per_section() const {
    return static_cast<unsigned>(std::countr_zero(m_per_section));
}

unsigned CodeParams::inner_bits_per_section() const {
    return static_cast<unsigned>(std::countr_zero(m_inner));
}

double default_amp_power(double sigma_x2, double q, const CodeParams& params) {
    if (!(sigma_x2 > 0.0)) throw DomainError("default_amp_power: sigma_x2 must be > 0");
    if (!(q >= 0.0)) throw DomainError("default_amp_power: q must be >= 0");
    return (sigma_x2 + q) * (1.0 - std::exp(-2.0 * params.rate_r1()));
}

}  // namespace sparckey

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

#include "sparckey/bits.hpp"

namespace sparckey {

BitString BitString::operator^(const BitString& other) const {
    if (nbits_ != other.nbits_) throw ShapeError("BitString::operator^: length mismatch");
    BitString out(nbits_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] ^ other.words_[w];
    return out;
}

std::uint64_t BitString::to_uint64() const {
    if (nbits_ > 64) throw SizingError("BitString::to_uint64: more than 64 bits");
    return words_.empty() ? 0 : words_[0];
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t nibbles = (nbits_ + 3) / 4;
    std::string out(nibbles, '0');
    for (std::size_t d = 0; d < nibbles; ++d) {
        // Streaming order: bit 4d is the most significant bit of nibble d;
        // a trailing partial nibble is padded with zeros in the low bits.
        unsigned value = 0;
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t pos = 4 * d + b;
            if (pos < nbits_ && get(pos)) value |= 1u << (3 - b);
        }
        out[d] = digits[value];
    }
    return out;
}

BitString BitString::from_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() != (nbits + 3) / 4)
        throw ShapeError("BitString::from_hex: digit count does not match nbits");
    BitString out(nbits);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        unsigned value = 0;
        if (c >= '0' && c <= '9')
            value = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            value = static_cast<unsigned>(c - 'a') + 10;
        else
            throw ShapeError("BitString::from_hex: invalid hex digit");
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t pos = 4 * d + b;
            if (pos < nbits && ((value >> (3 - b)) & 1u)) out.set(pos, true);
        }
    }
    return out;
}

BitString beta_to_bits(const SparseCoeffs& beta, const CodeParams& params) {
    params.validate();
    if (beta.sections.size() != params.l_sections)
        throw ShapeError("beta_to_bits: beta length must equal l_sections");
    const unsigned bits = params.bits_per_section();
    BitString out(params.l_sections * bits);
    std::size_t pos = 0;
    for (const std::uint32_t col : beta.sections) {
        if (col >= params.m_per_section) throw IndexError("beta_to_bits: section index out of range");
        for (unsigned b = 0; b < bits; ++b) {
            // Big-endian within the section group.
            out.set(pos++, (col >> (bits - 1 - b)) & 1u);
        }
    }
    return out;
}

SparseCoeffs bits_to_beta(const BitString& bits, const CodeParams& params) {
    params.validate();
    const unsigned per = params.bits_per_section();
    if (bits.size() != params.l_sections * per)
        throw ShapeError("bits_to_beta: bit string length must be L*log2(M)");
    SparseCoeffs beta;
    beta.amplitude = params.amplitude();
    beta.sections.reserve(params.l_sections);
    std::size_t pos = 0;
    for (std::size_t s = 0; s < params.l_sections; ++s) {
        std::uint32_t col = 0;
        for (unsigned b = 0; b < per; ++b) col = (col << 1) | (bits.get(pos++) ? 1u : 0u);
        beta.sections.push_back(col);
    }
    return beta;
}

}  // namespace sparckey

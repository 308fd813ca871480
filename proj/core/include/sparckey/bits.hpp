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
#include <string>
#include <vector>

#include "sparckey/sparse_coeffs.hpp"

namespace sparckey {

/// Fixed-length bit string packed into 64-bit words, bit i at
/// word[i/64] >> (i%64). Value semantics.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(std::size_t i) const {
        if (i >= nbits_) throw IndexError("BitString::get: index out of range");
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool v) {
        if (i >= nbits_) throw IndexError("BitString::set: index out of range");
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    BitString operator^(const BitString& other) const;
    bool operator==(const BitString& other) const = default;

    /// Injective integer label of the whole string (requires size <= 64);
    /// bit position 0 maps to the least significant bit.
    std::uint64_t to_uint64() const;

    /// Lowercase hex in streaming order: bit 0 is the most significant
    /// bit of the first nibble; a trailing partial nibble pads low bits.
    std::string to_hex() const;

    /// Inverse of to_hex for a string of ceil(nbits/4) hex digits.
    static BitString from_hex(const std::string& hex, std::size_t nbits);

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Serialize beta as L groups of log2(M) bits, section 0 first, each
/// group big-endian (most significant bit of the section index first).
/// Bijective with bits_to_beta; requires M a power of two.
BitString beta_to_bits(const SparseCoeffs& beta, const CodeParams& params);

/// Inverse of beta_to_bits; the amplitude is taken from params.
SparseCoeffs bits_to_beta(const BitString& bits, const CodeParams& params);

}  // namespace sparckey

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

#include "sparckey/bits.hpp"
#include "sparckey/source_model.hpp"

namespace sparckey {

/// Binary Toeplitz hash family member. T[i][j] = seed_bit[i - j + in_bits - 1];
/// output bit i is the parity of the AND of row i with the input. Linear
/// over XOR and 2-universal: for any fixed nonzero difference, a uniformly
/// seeded member maps it to zero with probability exactly 2^-out_bits.
struct HashSpec {
    std::size_t in_bits = 0;
    std::size_t out_bits = 0;
    BitString toeplitz_seed;     ///< in_bits + out_bits - 1 random bits
    std::uint64_t seed_value = 0;  ///< the 64-bit seed the bits were expanded from

    /// Expands a 64-bit seed into the diagonal bits.
    static HashSpec make(std::size_t in_bits, std::size_t out_bits, std::uint64_t seed);

    void validate() const;
};

/// Apply the hash; input length must equal spec.in_bits.
BitString toeplitz_hash(const HashSpec& spec, const BitString& input);

/// Key length chosen from the secrecy rate with safety margin nu:
///   k_bits = floor( n * max(0, R_K(model, q) - nu) / ln 2 ).
struct KeyLengthRule {
    double nu = 0.0;
    std::size_t k_bits = 0;
};

KeyLengthRule choose_key_length(const SourceModel& model, const CodeParams& params, double q,
                                double nu);

}  // namespace sparckey

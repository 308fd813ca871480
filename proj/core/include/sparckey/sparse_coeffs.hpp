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
#include <vector>

#include "sparckey/dictionary.hpp"

namespace sparckey {

/// Section-sparse coefficient vector: one active column per section
/// (enforced by storing only the chosen column index), common amplitude.
struct SparseCoeffs {
    std::vector<std::uint32_t> sections;  ///< chosen column per section, each in [0, M)
    double amplitude = 0.0;

    bool operator==(const SparseCoeffs& other) const {
        return sections == other.sections && amplitude == other.amplitude;
    }
};

/// Public message: the chosen sub-section per section, each in [0, M/M').
struct BinMessage {
    std::vector<std::uint32_t> sub_sections;

    bool operator==(const BinMessage& other) const = default;
};

/// Default cap on exhaustive enumerations (codebook or within-bin).
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 16;

/// Number of codewords M^L if it fits the cap, throws SizingError otherwise.
std::size_t checked_codebook_size(std::size_t m, std::size_t l, std::size_t cap,
                                  const char* what);

/// Mixed-radix index (base M, section 0 most significant). Requires
/// L*log2(M) <= 63.
std::uint64_t beta_to_index(const SparseCoeffs& beta, const CodeParams& params);

/// Inverse of beta_to_index; the amplitude is taken from params.
SparseCoeffs index_to_beta(std::uint64_t idx, const CodeParams& params);

struct BinSplit {
    BinMessage bin;
    std::vector<std::uint32_t> within;  ///< per-section index inside the sub-section, in [0, M')
};

/// Per section: sub_section = column / M', within = column % M'.
BinSplit bin_split(const SparseCoeffs& beta, const CodeParams& params);

/// Exact inverse: column = sub_section * M' + within.
SparseCoeffs bin_combine(const BinMessage& bin, const std::vector<std::uint32_t>& within,
                         const CodeParams& params, double amplitude);

/// All (M')^L codewords of a bin, in lexicographic within-index order
/// (section 0 most significant). Throws SizingError above `cap`.
std::vector<SparseCoeffs> enumerate_bin(const BinMessage& bin, const CodeParams& params,
                                        std::size_t cap = kDefaultEnumerationCap);

/// x = c * sum over sections of the chosen column.
std::vector<double> synthesize(const Dictionary& dict, const SparseCoeffs& beta);

}  // namespace sparckey

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

#include "sparckey/sparse_coeffs.hpp"

#include <cmath>
#include <string>

namespace sparckey {

namespace {

void check_beta(const SparseCoeffs& beta, const CodeParams& params, const char* what) {
    if (beta.sections.size() != params.l_sections)
        throw ShapeError(std::string(what) + ": beta has " +
                         std::to_string(beta.sections.size()) + " sections, expected " +
                         std::to_string(params.l_sections));
    for (const std::uint32_t col : beta.sections)
        if (col >= params.m_per_section)
            throw IndexError(std::string(what) + ": section index " + std::to_string(col) +
                             " out of range [0, " + std::to_string(params.m_per_section) + ")");
}

}  // namespace

std::size_t checked_codebook_size(std::size_t m, std::size_t l, std::size_t cap,
                                  const char* what) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < l; ++i) {
        if (m != 0 && size > cap / m)
            throw SizingError(std::string(what) + ": enumeration of " + std::to_string(m) +
                              "^" + std::to_string(l) + " codewords exceeds the cap of " +
                              std::to_string(cap) + "; use the greedy decoder");
        size *= m;
    }
    return size;
}

std::uint64_t beta_to_index(const SparseCoeffs& beta, const CodeParams& params) {
    params.validate();
    check_beta(beta, params, "beta_to_index");
    if (params.l_sections * params.bits_per_section() > 63)
        throw SizingError("beta_to_index: M^L does not fit in 64 bits");
    std::uint64_t idx = 0;
    for (const std::uint32_t col : beta.sections)
        idx = idx * params.m_per_section + col;
    return idx;
}

SparseCoeffs index_to_beta(std::uint64_t idx, const CodeParams& params) {
    params.validate();
    if (params.l_sections * params.bits_per_section() > 63)
        throw SizingError("index_to_beta: M^L does not fit in 64 bits");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < params.l_sections; ++i) total *= params.m_per_section;
    if (idx >= total)
        throw IndexError("index_to_beta: index " + std::to_string(idx) +
                         " out of range [0, " + std::to_string(total) + ")");
    SparseCoeffs beta;
    beta.amplitude = params.amplitude();
    beta.sections.assign(params.l_sections, 0);
    for (std::size_t i = params.l_sections; i-- > 0;) {
        beta.sections[i] = static_cast<std::uint32_t>(idx % params.m_per_section);
        idx /= params.m_per_section;
    }
    return beta;
}

BinSplit bin_split(const SparseCoeffs& beta, const CodeParams& params) {
    params.validate();
    check_beta(beta, params, "bin_split");
    BinSplit split;
    split.bin.sub_sections.reserve(params.l_sections);
    split.within.reserve(params.l_sections);
    for (const std::uint32_t col : beta.sections) {
        split.bin.sub_sections.push_back(col / static_cast<std::uint32_t>(params.m_inner));
        split.within.push_back(col % static_cast<std::uint32_t>(params.m_inner));
    }
    return split;
}

SparseCoeffs bin_combine(const BinMessage& bin, const std::vector<std::uint32_t>& within,
                         const CodeParams& params, double amplitude) {
    params.validate();
    if (bin.sub_sections.size() != params.l_sections || within.size() != params.l_sections)
        throw ShapeError("bin_combine: bin/within length must equal l_sections");
    const auto subs = static_cast<std::uint32_t>(params.sub_sections());
    SparseCoeffs beta;
    beta.amplitude = amplitude;
    beta.sections.reserve(params.l_sections);
    for (std::size_t i = 0; i < params.l_sections; ++i) {
        if (bin.sub_sections[i] >= subs)
            throw IndexError("bin_combine: sub-section index out of range");
        if (within[i] >= params.m_inner)
            throw IndexError("bin_combine: within index out of range");
        beta.sections.push_back(bin.sub_sections[i] * static_cast<std::uint32_t>(params.m_inner) +
                                within[i]);
    }
    return beta;
}

std::vector<SparseCoeffs> enumerate_bin(const BinMessage& bin, const CodeParams& params,
                                        std::size_t cap) {
    params.validate();
    const std::size_t count =
        checked_codebook_size(params.m_inner, params.l_sections, cap, "enumerate_bin");
    std::vector<std::uint32_t> within(params.l_sections, 0);
    std::vector<SparseCoeffs> out;
    out.reserve(count);
    const double amplitude = params.amplitude();
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(bin_combine(bin, within, params, amplitude));
        // Odometer, least-significant section last.
        for (std::size_t i = params.l_sections; i-- > 0;) {
            if (++within[i] < params.m_inner) break;
            within[i] = 0;
        }
    }
    return out;
}

std::vector<double> synthesize(const Dictionary& dict, const SparseCoeffs& beta) {
    const CodeParams& params = dict.params();
    check_beta(beta, params, "synthesize");
    std::vector<double> x(params.n, 0.0);
    for (std::size_t s = 0; s < params.l_sections; ++s) {
        const auto col = dict.column(s, beta.sections[s]);
        for (std::size_t i = 0; i < params.n; ++i) x[i] += col[i];
    }
    for (double& v : x) v *= beta.amplitude;
    return x;
}

}  // namespace sparckey

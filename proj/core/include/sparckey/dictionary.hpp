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

#include <span>
#include <vector>

#include "sparckey/code_params.hpp"

namespace sparckey {

/// Default cap on dictionary storage (doubles). n * M * L above this is
/// rejected as a sizing error; desk-scale instances stay in the low MBs.
inline constexpr std::size_t kDefaultDictionaryBudget = std::size_t{1} << 26;

/// n x (M*L) dictionary, column-major, immutable after construction and
/// safe to share across threads. Entries are i.i.d. N(0, 1/n), generated
/// column by column from dict_seed.
class Dictionary {
public:
    /// Deterministic construction from params.dict_seed.
    static Dictionary build(const CodeParams& params,
                            std::size_t budget_doubles = kDefaultDictionaryBudget);

    /// Explicit entries (column-major, n * M * L values). Used by tests
    /// that need hand-shaped columns.
    Dictionary(CodeParams params, std::vector<double> entries);

    const CodeParams& params() const { return params_; }
    std::size_t rows() const { return params_.n; }
    std::size_t columns() const { return params_.l_sections * params_.m_per_section; }

    /// Column `col` of section `section`.
    std::span<const double> column(std::size_t section, std::size_t col) const {
        if (section >= params_.l_sections)
            throw IndexError("Dictionary::column: section out of range");
        if (col >= params_.m_per_section)
            throw IndexError("Dictionary::column: column out of range");
        const std::size_t j = section * params_.m_per_section + col;
        return {entries_.data() + j * params_.n, params_.n};
    }

    std::span<const double> entries() const { return entries_; }

private:
    CodeParams params_;
    std::vector<double> entries_;
};

}  // namespace sparckey

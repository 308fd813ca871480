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

#include "sparckey/dictionary.hpp"

#include <cmath>
#include <string>

#include "sparckey/rng.hpp"

namespace sparckey {

Dictionary Dictionary::build(const CodeParams& params, std::size_t budget_doubles) {
    params.validate();
    const std::size_t cols = params.l_sections * params.m_per_section;
    if (cols != 0 && params.n > budget_doubles / cols)
        throw SizingError("Dictionary::build: n*M*L = " +
                          std::to_string(params.n * cols) +
                          " doubles exceeds the memory budget of " +
                          std::to_string(budget_doubles));
    std::vector<double> entries(params.n * cols);
    GaussianSampler gauss(params.dict_seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(params.n));
    for (double& e : entries) e = scale * gauss.next();
    return Dictionary(params, std::move(entries));
}

Dictionary::Dictionary(CodeParams params, std::vector<double> entries)
    : params_(params), entries_(std::move(entries)) {
    params_.validate();
    const std::size_t expected = params_.n * params_.l_sections * params_.m_per_section;
    if (entries_.size() != expected)
        throw ShapeError("Dictionary: entry count " + std::to_string(entries_.size()) +
                         " does not match n*M*L = " + std::to_string(expected));
}

}  // namespace sparckey

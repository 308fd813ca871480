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

#include "sparckey/quantizer.hpp"

#include <limits>
#include <string>
#include <vector>

namespace sparckey {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Depth-first walk over sections in lexicographic order, keeping the
/// partial codeword sum per level. Visiting order equals increasing
/// beta_to_index, so keeping the first strict improvement implements the
/// documented tie-break.
struct ExhaustiveSearch {
    const Dictionary& dict;
    std::span<const double> target;
    double amplitude;
    std::vector<std::uint32_t> current;
    std::vector<std::uint32_t> best;
    double best_sq = std::numeric_limits<double>::infinity();
    std::vector<double> partial;  // (L+1) stacked partial sums, each length n

    ExhaustiveSearch(const Dictionary& d, std::span<const double> t)
        : dict(d),
          target(t),
          amplitude(d.params().amplitude()),
          current(d.params().l_sections, 0),
          best(d.params().l_sections, 0),
          partial((d.params().l_sections + 1) * d.params().n, 0.0) {}

    std::span<double> level(std::size_t depth) {
        return {partial.data() + depth * dict.params().n, dict.params().n};
    }

    void run(std::size_t depth) {
        const auto& params = dict.params();
        const std::size_t n = params.n;
        if (depth == params.l_sections) {
            double sq = 0.0;
            const auto sum = level(depth);
            for (std::size_t i = 0; i < n; ++i) {
                const double diff = target[i] - sum[i];
                sq += diff * diff;
            }
            if (sq < best_sq) {
                best_sq = sq;
                best = current;
            }
            return;
        }
        for (std::uint32_t col = 0; col < params.m_per_section; ++col) {
            current[depth] = col;
            const auto column = dict.column(depth, col);
            const auto prev = level(depth);
            const auto next = level(depth + 1);
            for (std::size_t i = 0; i < n; ++i) next[i] = prev[i] + amplitude * column[i];
            run(depth + 1);
        }
    }
};

}  // namespace

QuantizeResult encode_exhaustive(const Dictionary& dict, std::span<const double> target,
                                 std::size_t cap) {
    const CodeParams& params = dict.params();
    if (target.size() != params.n)
        throw ShapeError("encode_exhaustive: target length " + std::to_string(target.size()) +
                         " != n = " + std::to_string(params.n));
    checked_codebook_size(params.m_per_section, params.l_sections, cap, "encode_exhaustive");

    ExhaustiveSearch search(dict, target);
    search.run(0);

    QuantizeResult result;
    result.beta.sections = std::move(search.best);
    result.beta.amplitude = search.amplitude;
    result.distortion = search.best_sq / static_cast<double>(params.n);
    return result;
}

QuantizeResult encode_greedy(const Dictionary& dict, std::span<const double> target) {
    const CodeParams& params = dict.params();
    if (target.size() != params.n)
        throw ShapeError("encode_greedy: target length " + std::to_string(target.size()) +
                         " != n = " + std::to_string(params.n));
    const double amplitude = params.amplitude();

    std::vector<double> residual(target.begin(), target.end());
    QuantizeResult result;
    result.beta.amplitude = amplitude;
    result.beta.sections.reserve(params.l_sections);

    for (std::size_t s = 0; s < params.l_sections; ++s) {
        std::uint32_t best_col = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (std::uint32_t col = 0; col < params.m_per_section; ++col) {
            const auto column = dict.column(s, col);
            double proj = 0.0;
            double norm_sq = 0.0;
            for (std::size_t i = 0; i < params.n; ++i) {
                proj += residual[i] * column[i];
                norm_sq += column[i] * column[i];
            }
            // Per-section residual fit: argmin ||res - c*a||^2. Column-energy
            // differences are retained, so a single section coincides with
            // the exhaustive search.
            const double score = amplitude * proj - 0.5 * amplitude * amplitude * norm_sq;
            if (score > best_score) {
                best_score = score;
                best_col = col;
            }
        }
        result.beta.sections.push_back(best_col);
        const auto column = dict.column(s, best_col);
        for (std::size_t i = 0; i < params.n; ++i) residual[i] -= amplitude * column[i];
    }

    double sq = 0.0;
    for (const double r : residual) sq += r * r;
    result.distortion = sq / static_cast<double>(params.n);
    return result;
}

double distortion_of(std::span<const double> target, std::span<const double> reconstruction) {
    if (target.size() != reconstruction.size())
        throw ShapeError("distortion_of: length mismatch " + std::to_string(target.size()) +
                         " vs " + std::to_string(reconstruction.size()));
    if (target.empty()) throw ShapeError("distortion_of: empty vectors");
    double sq = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const double diff = target[i] - reconstruction[i];
        sq += diff * diff;
    }
    return sq / static_cast<double>(target.size());
}

}  // namespace sparckey

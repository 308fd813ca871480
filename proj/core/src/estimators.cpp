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

#include "sparckey/estimators.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace sparckey {

UniformityStats estimate_uniformity(const std::vector<BitString>& keys) {
    if (keys.empty()) throw UsageError("estimate_uniformity: no keys");
    const std::size_t k = keys[0].size();
    for (const auto& key : keys)
        if (key.size() != k) throw ShapeError("estimate_uniformity: keys differ in length");

    if (k == 0) return UniformityStats{};
    if (k > 24 || (std::size_t{2} << k) > keys.size())
        throw SizingError("estimate_uniformity: alphabet 2^" + std::to_string(k) +
                          " too large for " + std::to_string(keys.size()) + " samples");

    const std::size_t cells = std::size_t{1} << k;
    std::vector<std::size_t> histogram(cells, 0);
    for (const auto& key : keys) ++histogram[key.to_uint64()];

    const double n = static_cast<double>(keys.size());
    const double uniform = 1.0 / static_cast<double>(cells);
    UniformityStats stats;
    double entropy = 0.0;
    for (const std::size_t count : histogram) {
        const double p = static_cast<double>(count) / n;
        stats.tv_distance += std::abs(p - uniform);
        if (count > 0) entropy -= p * std::log(p);
    }
    stats.tv_distance *= 0.5;
    stats.entropy_deficit_nats = std::log(static_cast<double>(cells)) - entropy;
    return stats;
}

double estimate_leakage(const std::vector<BitString>& keys,
                        const std::vector<std::uint64_t>& eve_views) {
    if (keys.empty()) throw UsageError("estimate_leakage: no samples");
    if (keys.size() != eve_views.size())
        throw ShapeError("estimate_leakage: keys and views must align");
    const std::size_t k = keys[0].size();
    for (const auto& key : keys)
        if (key.size() != k) throw ShapeError("estimate_leakage: keys differ in length");
    if (k > 24) throw SizingError("estimate_leakage: key alphabet too large");

    std::map<std::uint64_t, double> p_key;
    std::map<std::uint64_t, double> p_view;
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> p_joint;
    const double weight = 1.0 / static_cast<double>(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::uint64_t key = keys[i].to_uint64();
        p_key[key] += weight;
        p_view[eve_views[i]] += weight;
        p_joint[{key, eve_views[i]}] += weight;
    }

    if (p_key.size() * p_view.size() > keys.size())
        throw SizingError("estimate_leakage: observed joint alphabet of " +
                          std::to_string(p_key.size() * p_view.size()) +
                          " cells too large for " + std::to_string(keys.size()) + " samples");

    double tv = 0.0;
    for (const auto& [key, pk] : p_key) {
        for (const auto& [view, pv] : p_view) {
            const auto it = p_joint.find({key, view});
            const double joint = it == p_joint.end() ? 0.0 : it->second;
            tv += std::abs(joint - pk * pv);
        }
    }
    return 0.5 * tv;
}

}  // namespace sparckey

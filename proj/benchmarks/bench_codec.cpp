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

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "sparckey/protocol.hpp"

namespace {

using namespace sparckey;

const SourceModel kModel{1.0, 0.1, 0.2};

CodeParams bench_params(std::size_t n, std::size_t l, std::size_t m, std::size_t m_inner) {
    CodeParams p;
    p.n = n;
    p.l_sections = l;
    p.m_per_section = m;
    p.m_inner = m_inner;
    p.dict_seed = 7;
    p.amp_power = 1.0;
    p.amp_power = default_amp_power(kModel.sigma_x2, 1.0, p);
    return p;
}

std::vector<double> bench_target(std::size_t n) {
    std::vector<double> v(n);
    GaussianSampler gauss(13);
    for (double& x : v) x = gauss.next(std::sqrt(2.0));
    return v;
}

void BM_GreedyEncode(benchmark::State& state) {
    const CodeParams params =
        bench_params(static_cast<std::size_t>(state.range(0)),
                     static_cast<std::size_t>(state.range(0)) / 16, 64, 16);
    const Dictionary dict = Dictionary::build(params);
    const auto target = bench_target(params.n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_greedy(dict, target));
    }
}
BENCHMARK(BM_GreedyEncode)->Arg(128)->Arg(256)->Arg(512);

void BM_GreedyBinDecode(benchmark::State& state) {
    const CodeParams params = bench_params(96, 12, 32, static_cast<std::size_t>(state.range(0)));
    const Dictionary dict = Dictionary::build(params);
    const WzConfig cfg = WzConfig::make(kModel, 1.0, params);
    const auto y = bench_target(params.n);
    BinMessage bin;
    bin.sub_sections.assign(params.l_sections, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bob_decode(y, bin, cfg, dict, DecodeMode::greedy));
    }
}
BENCHMARK(BM_GreedyBinDecode)->Arg(4)->Arg(16);

void BM_Session(benchmark::State& state) {
    const CodeParams params = bench_params(96, 12, 32, 4);
    const WzConfig cfg = WzConfig::make(kModel, 1.0, params);
    const Dictionary dict = Dictionary::build(params);
    const auto hash = HashSpec::make(params.l_sections * params.bits_per_section(), 4, 11);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_session(kModel, cfg, hash, dict, ++seed));
    }
}
BENCHMARK(BM_Session);

}  // namespace

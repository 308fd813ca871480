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

#include "sparckey/hashing.hpp"
#include "sparckey/rng.hpp"

namespace {

using namespace sparckey;

void BM_ToeplitzHash(benchmark::State& state) {
    const std::size_t in_bits = static_cast<std::size_t>(state.range(0));
    const HashSpec spec = HashSpec::make(in_bits, 32, 5);
    BitString input(in_bits);
    Xoshiro256pp rng(9);
    for (std::size_t i = 0; i < in_bits; ++i)
        if (rng.next() & 1u) input.set(i, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(toeplitz_hash(spec, input));
    }
}
BENCHMARK(BM_ToeplitzHash)->Arg(60)->Arg(96)->Arg(576);

void BM_HashFamilyDraw(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(HashSpec::make(96, 8, ++seed));
    }
}
BENCHMARK(BM_HashFamilyDraw);

}  // namespace

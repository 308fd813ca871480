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

#include "sparckey/hashing.hpp"

#include <bit>
#include <cmath>

#include "sparckey/rates.hpp"
#include "sparckey/rng.hpp"

namespace sparckey {

HashSpec HashSpec::make(std::size_t in_bits, std::size_t out_bits, std::uint64_t seed) {
    HashSpec spec;
    spec.in_bits = in_bits;
    spec.out_bits = out_bits;
    spec.seed_value = seed;
    spec.toeplitz_seed = BitString(in_bits + out_bits - 1);
    Xoshiro256pp rng(seed);
    for (std::size_t i = 0; i < spec.toeplitz_seed.size(); ++i) {
        if (rng.next() & 1u) spec.toeplitz_seed.set(i, true);
    }
    spec.validate();
    return spec;
}

void HashSpec::validate() const {
    if (out_bits < 1 || out_bits > in_bits)
        throw DomainError("HashSpec: need 1 <= out_bits <= in_bits");
    if (toeplitz_seed.size() != in_bits + out_bits - 1)
        throw ShapeError("HashSpec: seed must hold in_bits + out_bits - 1 bits");
}

BitString toeplitz_hash(const HashSpec& spec, const BitString& input) {
    spec.validate();
    if (input.size() != spec.in_bits)
        throw ShapeError("toeplitz_hash: input length must equal in_bits");

    BitString out(spec.out_bits);
    for (std::size_t i = 0; i < spec.out_bits; ++i) {
        // Row i holds seed bits (i - j + in_bits - 1) for j = 0..in_bits-1.
        unsigned parity = 0;
        for (std::size_t j = 0; j < spec.in_bits; ++j) {
            if (input.get(j) && spec.toeplitz_seed.get(i - j + spec.in_bits - 1)) parity ^= 1u;
        }
        if (parity) out.set(i, true);
    }
    return out;
}

KeyLengthRule choose_key_length(const SourceModel& model, const CodeParams& params, double q,
                                double nu) {
    if (!(nu >= 0.0)) throw DomainError("choose_key_length: nu must be >= 0");
    params.validate();
    const double rate = secret_key_rate(model, q);
    const double usable = std::max(0.0, rate - nu);
    KeyLengthRule rule;
    rule.nu = nu;
    rule.k_bits =
        static_cast<std::size_t>(std::floor(static_cast<double>(params.n) * usable / std::log(2.0)));
    return rule;
}

}  // namespace sparckey

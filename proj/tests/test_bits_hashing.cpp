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

#include <doctest.h>

#include <cmath>

#include "sparckey/hashing.hpp"
#include "sparckey/rng.hpp"

using namespace sparckey;

namespace {

CodeParams toy_params() {
    CodeParams params;
    params.n = 16;
    params.l_sections = 2;
    params.m_per_section = 4;
    params.m_inner = 2;
    params.amp_power = 1.0;
    params.dict_seed = 3;
    return params;
}

BitString random_bits(std::size_t nbits, std::uint64_t seed) {
    BitString bits(nbits);
    Xoshiro256pp rng(seed);
    for (std::size_t i = 0; i < nbits; ++i)
        if (rng.next() & 1u) bits.set(i, true);
    return bits;
}

}  // namespace

TEST_CASE("beta_to_bits lays out big-endian section groups") {
    const CodeParams params = toy_params();
    SparseCoeffs beta;
    beta.amplitude = params.amplitude();

    beta.sections = {0, 0};
    const BitString zero = beta_to_bits(beta, params);
    CHECK(zero.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK_FALSE(zero.get(i));

    beta.sections = {1, 2};
    const BitString bits = beta_to_bits(beta, params);
    CHECK_FALSE(bits.get(0));  // section 0 = 01
    CHECK(bits.get(1));
    CHECK(bits.get(2));        // section 1 = 10
    CHECK_FALSE(bits.get(3));
    CHECK(bits.to_hex() == "6");

    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        const SparseCoeffs b = index_to_beta(idx, params);
        CHECK(bits_to_beta(beta_to_bits(b, params), params).sections == b.sections);
    }
}

TEST_CASE("hex round trip") {
    const BitString bits = random_bits(23, 5);
    CHECK(BitString::from_hex(bits.to_hex(), 23) == bits);
    CHECK(BitString(0).to_hex().empty());
}

TEST_CASE("toeplitz hash is linear and zero-preserving") {
    const HashSpec spec = HashSpec::make(24, 6, 12345);
    CHECK(toeplitz_hash(spec, BitString(24)) == BitString(6));  // h(0) = 0 for every seed

    for (std::uint64_t t = 0; t < 50; ++t) {
        const BitString a = random_bits(24, 100 + t);
        const BitString b = random_bits(24, 200 + t);
        CHECK(toeplitz_hash(spec, a ^ b) ==
              (toeplitz_hash(spec, a) ^ toeplitz_hash(spec, b)));
    }
}

TEST_CASE("toeplitz linearity holds exhaustively at small widths") {
    // h is linear iff h(x) equals the XOR of h over the set bits of x.
    const std::size_t in_bits = 10;
    const HashSpec spec = HashSpec::make(in_bits, 4, 777);
    std::vector<BitString> basis;
    for (std::size_t j = 0; j < in_bits; ++j) {
        BitString e(in_bits);
        e.set(j, true);
        basis.push_back(toeplitz_hash(spec, e));
    }
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << in_bits); ++x) {
        BitString input(in_bits);
        BitString expected(4);
        for (std::size_t j = 0; j < in_bits; ++j) {
            if ((x >> j) & 1u) {
                input.set(j, true);
                expected = expected ^ basis[j];
            }
        }
        CHECK(toeplitz_hash(spec, input) == expected);
    }
}

TEST_CASE("collision rate of the seeded family matches 2^-k") {
    for (const std::size_t k : {4u, 8u}) {
        const std::size_t in_bits = 24;
        BitString a(in_bits), b(in_bits);
        a.set(3, true);
        a.set(17, true);
        b.set(3, true);
        b.set(9, true);
        b.set(20, true);
        std::size_t collisions = 0;
        const std::size_t draws = 20000;
        for (std::size_t s = 0; s < draws; ++s) {
            const HashSpec spec = HashSpec::make(in_bits, k, 0xabc000 + s);
            if (toeplitz_hash(spec, a) == toeplitz_hash(spec, b)) ++collisions;
        }
        const double p0 = std::pow(2.0, -static_cast<double>(k));
        const double se = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(draws));
        CHECK(std::abs(static_cast<double>(collisions) / draws - p0) <= 3.0 * se);
    }
}

TEST_CASE("hash spec validation") {
    CHECK_THROWS_AS(HashSpec::make(8, 0, 1), DomainError);
    CHECK_THROWS_AS(HashSpec::make(8, 9, 1), DomainError);
    const HashSpec spec = HashSpec::make(8, 4, 1);
    CHECK_THROWS_AS(toeplitz_hash(spec, BitString(7)), ShapeError);
}

TEST_CASE("choose_key_length applies the rate rule") {
    const SourceModel model{1.0, 0.1, 0.2};
    CodeParams params = toy_params();
    params.n = 1000;

    const KeyLengthRule rule = choose_key_length(model, params, 1.0, 0.0);
    CHECK(rule.k_bits == 48);  // floor(1000 * 0.0335696 / ln 2)

    CHECK(choose_key_length(model, params, 1.0, 1.0).k_bits == 0);  // nu >= R_K
    const SourceModel same{1.0, 0.2, 0.2};
    CHECK(choose_key_length(same, params, 1.0, 0.0).k_bits == 0);
    CHECK(choose_key_length(same, params, 1.0, 0.3).k_bits == 0);
    CHECK_THROWS_AS(choose_key_length(model, params, 1.0, -0.1), DomainError);
}

TEST_CASE("key length is monotone in nu and in the channel qualities") {
    const SourceModel base{1.0, 0.1, 0.2};
    CodeParams params = toy_params();
    params.n = 4000;

    std::size_t prev = 1u << 30;
    for (double nu = 0.0; nu <= 0.04; nu += 0.005) {
        const std::size_t k = choose_key_length(base, params, 1.0, nu).k_bits;
        CHECK(k <= prev);
        prev = k;
    }
    prev = 1u << 30;
    for (double sb2 = 0.05; sb2 <= 0.2; sb2 += 0.025) {
        SourceModel m = base;
        m.sigma_b2 = sb2;
        const std::size_t k = choose_key_length(m, params, 1.0, 0.0).k_bits;
        CHECK(k <= prev);
        prev = k;
    }
    std::size_t prev_up = 0;
    for (double se2 = 0.15; se2 <= 0.6; se2 += 0.05) {
        SourceModel m = base;
        m.sigma_e2 = se2;
        const std::size_t k = choose_key_length(m, params, 1.0, 0.0).k_bits;
        CHECK(k >= prev_up);
        prev_up = k;
    }
}

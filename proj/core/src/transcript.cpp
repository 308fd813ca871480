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

#include "sparckey/transcript.hpp"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

namespace sparckey {

namespace {

static_assert(std::endian::native == std::endian::little,
              "transcript writer assumes a little-endian host");

template <typename T>
void put(std::ostream& os, T value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::istream& is) {
    T value{};
    is.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!is) throw ConfigError("read_transcript: truncated binary block");
    return value;
}

void put_doubles(std::ostream& os, const std::vector<double>& v) {
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(double)));
}

std::vector<double> take_doubles(std::istream& is, std::size_t count) {
    std::vector<double> v(count);
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (!is) throw ConfigError("read_transcript: truncated double block");
    return v;
}

void put_beta(std::ostream& os, const SparseCoeffs& beta) {
    for (const std::uint32_t s : beta.sections) put(os, s);
    put(os, beta.amplitude);
}

SparseCoeffs take_beta(std::istream& is, std::size_t l) {
    SparseCoeffs beta;
    beta.sections.reserve(l);
    for (std::size_t i = 0; i < l; ++i) beta.sections.push_back(take<std::uint32_t>(is));
    beta.amplitude = take<double>(is);
    return beta;
}

void put_key(std::ostream& os, const BitString& key) {
    const std::string hex = key.to_hex();
    os.write(hex.data(), static_cast<std::streamsize>(hex.size()));
}

BitString take_key(std::istream& is, std::size_t nbits) {
    std::string hex((nbits + 3) / 4, '0');
    if (!hex.empty()) {
        is.read(hex.data(), static_cast<std::streamsize>(hex.size()));
        if (!is) throw ConfigError("read_transcript: truncated key block");
    }
    return BitString::from_hex(hex, nbits);
}

}  // namespace

void write_transcript(std::ostream& os, const SessionTranscript& tr,
                      const CodeParams& params, const std::string& config_echo) {
    os << "sparckey-transcript v1\n";
    os << "config: " << config_echo << "\n";
    os << "binary:\n";

    put(os, static_cast<std::uint32_t>(tr.x.size()));
    put(os, static_cast<std::uint32_t>(params.l_sections));
    put(os, static_cast<std::uint32_t>(params.m_per_section));
    put(os, static_cast<std::uint32_t>(params.m_inner));
    put(os, static_cast<std::uint32_t>(tr.key_a.size()));
    put_doubles(os, tr.x);
    put_doubles(os, tr.y);
    put_doubles(os, tr.z);
    put_beta(os, tr.beta_a);
    for (const std::uint32_t s : tr.bin.sub_sections) put(os, s);
    put_beta(os, tr.beta_b_hat);
    put_beta(os, tr.beta_e_hat);
    put_key(os, tr.key_a);
    put_key(os, tr.key_b);
    put(os, static_cast<std::uint8_t>(tr.wz_success ? 1 : 0));
    put(os, static_cast<std::uint8_t>(tr.key_match ? 1 : 0));
    put(os, tr.seeds.master);
    put(os, tr.seeds.dictionary);
    put(os, tr.seeds.dither);
    put(os, tr.seeds.source);
    put(os, tr.seeds.noise_bob);
    put(os, tr.seeds.noise_eve);
    put(os, tr.seeds.hash);
}

TranscriptFile read_transcript(std::istream& is) {
    TranscriptFile file;
    std::string line;
    if (!std::getline(is, line) || line != "sparckey-transcript v1")
        throw ConfigError("read_transcript: bad magic line");
    if (!std::getline(is, line) || line.rfind("config: ", 0) != 0)
        throw ConfigError("read_transcript: missing config line");
    file.config_echo = line.substr(8);
    if (!std::getline(is, line) || line != "binary:")
        throw ConfigError("read_transcript: missing binary marker");

    SessionTranscript& tr = file.transcript;
    const auto n = take<std::uint32_t>(is);
    const auto l = take<std::uint32_t>(is);
    take<std::uint32_t>(is);
    take<std::uint32_t>(is);
    const auto key_bits = take<std::uint32_t>(is);
    tr.x = take_doubles(is, n);
    tr.y = take_doubles(is, n);
    tr.z = take_doubles(is, n);
    tr.beta_a = take_beta(is, l);
    tr.bin.sub_sections.reserve(l);
    for (std::size_t i = 0; i < l; ++i) tr.bin.sub_sections.push_back(take<std::uint32_t>(is));
    tr.beta_b_hat = take_beta(is, l);
    tr.beta_e_hat = take_beta(is, l);
    tr.key_a = take_key(is, key_bits);
    tr.key_b = take_key(is, key_bits);
    tr.wz_success = take<std::uint8_t>(is) != 0;
    tr.key_match = take<std::uint8_t>(is) != 0;
    tr.seeds.master = take<std::uint64_t>(is);
    tr.seeds.dictionary = take<std::uint64_t>(is);
    tr.seeds.dither = take<std::uint64_t>(is);
    tr.seeds.source = take<std::uint64_t>(is);
    tr.seeds.noise_bob = take<std::uint64_t>(is);
    tr.seeds.noise_eve = take<std::uint64_t>(is);
    tr.seeds.hash = take<std::uint64_t>(is);
    return file;
}

}  // namespace sparckey

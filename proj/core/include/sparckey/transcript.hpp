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

#include <iosfwd>
#include <string>

#include "sparckey/protocol.hpp"

namespace sparckey {

// Transcript file layout (version 1):
//   line 1: "sparckey-transcript v1"
//   line 2: "config: " + the effective config echo (single line)
//   line 3: "binary:"
//   then fixed-width little-endian blocks, in order:
//     u32 n, u32 L, u32 M, u32 M_inner, u32 key_bits
//     x, y, z                : n doubles each
//     beta_a                 : L u32 section indices, then 1 double amplitude
//     bin                    : L u32 sub-section indices (the public wire format)
//     beta_b_hat, beta_e_hat : as beta_a
//     key_a, key_b           : ceil(key_bits/4) bytes of lowercase hex
//     wz_success, key_match  : 1 byte each (0/1)
//     seeds                  : 7 u64 (master, dictionary, dither, source,
//                              noise_bob, noise_eve, hash)

void write_transcript(std::ostream& os, const SessionTranscript& transcript,
                      const CodeParams& params, const std::string& config_echo);

struct TranscriptFile {
    SessionTranscript transcript;
    std::string config_echo;
};

TranscriptFile read_transcript(std::istream& is);

}  // namespace sparckey

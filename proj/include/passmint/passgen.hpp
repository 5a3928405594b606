// Copyright 2026 The passmint Authors
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

#ifndef PASSMINT_PASSGEN_HPP_
#define PASSMINT_PASSGEN_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "passmint/bitstream.hpp"
#include "passmint/charset.hpp"
#include "passmint/engine.hpp"
#include "passmint/mac.hpp"

namespace passmint {

// Smallest n with q^n >= 2^strength_bits, i.e. ceil(strength_bits/log2 q),
// decided by exact integer comparison rather than floating point.
uint64_t required_length(uint64_t q, uint64_t strength_bits);

// Key from a timestamp: k = H(BE64(t)) || H(H(BE64(t))) || ... truncated to
// target_bits (SHA-256 chain).  target_bits must be a multiple of 8.
MacKey derive_key_from_timestamp(uint64_t t, size_t target_bits);

// Key from user-supplied hex; the decoded length must equal target_bits.
MacKey derive_key_from_hex(std::string_view hex, size_t target_bits);

// t_i = value of bits [(i-1)*N, i*N) of T, MSB-first.  |T| must equal n*N.
std::vector<uint64_t> split_bits(const BitStream& t, size_t n, size_t bits_per_char);

char map_char(uint64_t t, const Charset& charset);

struct PasswordSpec {
  Charset charset;
  size_t length = 0;         // n
  size_t bits_per_char = 32; // N
  PrngEngine engine = PrngEngine::lcg(0);
};

struct Password {
  std::string text;
};

// T = fill(engine, n*N); p_i = charset[t_i mod q].  Deterministic given the
// engine context and spec.
Password generate_password(const PasswordSpec& spec);

}  // namespace passmint

#endif  // PASSMINT_PASSGEN_HPP_

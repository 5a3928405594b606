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

#include "passmint/passgen.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "passmint/sha256.hpp"

namespace passmint {

namespace {

// Exact test for q^n >= 2^s via word-array exponentiation; cheap at the
// parameter sizes in play (n <= s, a few words per product).
bool pow_at_least(uint64_t q, uint64_t n, uint64_t s) {
  std::vector<uint32_t> value{1};
  auto bit_length = [&value] {
    return 32 * (value.size() - 1) +
           static_cast<uint64_t>(std::bit_width(value.back()));
  };
  for (uint64_t i = 0; i < n; ++i) {
    uint64_t carry = 0;
    for (auto& word : value) {
      uint64_t t = static_cast<uint64_t>(word) * q + carry;
      word = static_cast<uint32_t>(t);
      carry = t >> 32;
    }
    while (carry != 0) {
      value.push_back(static_cast<uint32_t>(carry));
      carry >>= 32;
    }
    if (bit_length() > s) {
      return true;  // already >= 2^s, and q^n only grows
    }
  }
  return bit_length() > s;
}

}  // namespace

uint64_t required_length(uint64_t q, uint64_t strength_bits) {
  if (q < 2) {
    throw std::invalid_argument("charset size must be at least 2");
  }
  if (strength_bits < 1) {
    throw std::invalid_argument("strength must be positive");
  }
  // Float estimate, then correct by the exact predicate.
  auto n = static_cast<uint64_t>(
      std::ceil(static_cast<double>(strength_bits) / std::log2(q)));
  if (n == 0) {
    n = 1;
  }
  while (n > 1 && pow_at_least(q, n - 1, strength_bits)) {
    --n;
  }
  while (!pow_at_least(q, n, strength_bits)) {
    ++n;
  }
  return n;
}

MacKey derive_key_from_timestamp(uint64_t t, size_t target_bits) {
  if (target_bits == 0 || target_bits % 8 != 0) {
    throw std::invalid_argument("key length must be a positive byte multiple");
  }
  Bytes key;
  key.reserve(target_bits / 8);
  Bytes link(8);
  for (int i = 0; i < 8; ++i) {
    link[i] = static_cast<uint8_t>(t >> (56 - 8 * i));
  }
  while (key.size() < target_bits / 8) {
    auto digest = Sha256::digest(link);
    link.assign(digest.begin(), digest.end());
    key.insert(key.end(), link.begin(), link.end());
  }
  key.resize(target_bits / 8);
  return MacKey{std::move(key), target_bits};
}

MacKey derive_key_from_hex(std::string_view hex, size_t target_bits) {
  Bytes bytes = from_hex(hex);
  if (bytes.size() * 8 != target_bits) {
    throw std::invalid_argument("key hex has wrong length for construction");
  }
  return MacKey{std::move(bytes), target_bits};
}

std::vector<uint64_t> split_bits(const BitStream& t, size_t n,
                                 size_t bits_per_char) {
  if (bits_per_char == 0 || bits_per_char > 64) {
    throw std::invalid_argument("bits per character must be in 1..64");
  }
  if (t.size() != n * bits_per_char) {
    throw std::invalid_argument("bit stream length must equal n*N");
  }
  std::vector<uint64_t> out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i] = t.read_uint(i * bits_per_char, bits_per_char);
  }
  return out;
}

char map_char(uint64_t t, const Charset& charset) {
  return charset.at(t % charset.size());
}

Password generate_password(const PasswordSpec& spec) {
  if (spec.length < 1) {
    throw std::invalid_argument("password length must be positive");
  }
  const uint64_t q = spec.charset.size();
  if (q < 2) {
    throw std::invalid_argument("charset too small");
  }
  const auto min_bits =
      static_cast<size_t>(std::bit_width(q - 1));  // ceil(log2 q)
  if (spec.bits_per_char < min_bits) {
    throw std::invalid_argument("bits per character below ceil(log2 q)");
  }
  PrngEngine engine = spec.engine;  // keep the caller's LCG state intact
  BitStream t = engine.fill(spec.length * spec.bits_per_char);
  std::vector<uint64_t> values = split_bits(t, spec.length, spec.bits_per_char);
  Password p;
  p.text.reserve(spec.length);
  for (uint64_t v : values) {
    p.text.push_back(map_char(v, spec.charset));
  }
  return p;
}

}  // namespace passmint

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "passmint/charset.hpp"
#include "passmint/hex.hpp"
#include "passmint/passgen.hpp"
#include "passmint/sha256.hpp"

using namespace passmint;

namespace {

// Exact ceil(s / log2 q) check for ranges where q^n fits the headroom of
// 128-bit arithmetic: returns true when q^n >= 2^s.
bool pow_reaches(uint64_t q, uint64_t n, uint64_t s) {
  unsigned __int128 limit = static_cast<unsigned __int128>(1) << s;
  unsigned __int128 acc = 1;
  for (uint64_t i = 0; i < n; ++i) {
    acc *= q;
    if (acc >= limit) return true;
  }
  return acc >= limit;
}

}  // namespace

TEST_CASE("required length for 128-bit strength per charset") {
  CHECK(required_length(52, 128) == 23);
  CHECK(required_length(62, 128) == 22);
  CHECK(required_length(72, 128) == 21);
  CHECK(required_length(2, 128) == 128);
}

TEST_CASE("required length is the exact integer ceiling") {
  // Exhaustive check against 128-bit exponentiation on a grid where the
  // float estimate is most at risk (s near multiples of log2 q).
  for (uint64_t q : {2, 3, 10, 36, 52, 62, 64, 72, 94, 100}) {
    for (uint64_t s = 1; s <= 120; ++s) {
      uint64_t n = required_length(q, s);
      CAPTURE(q);
      CAPTURE(s);
      CHECK(pow_reaches(q, n, s));
      if (n > 0) CHECK_FALSE(pow_reaches(q, n - 1, s));
    }
  }
}

TEST_CASE("power-of-two charsets divide evenly") {
  CHECK(required_length(64, 126) == 21);
  CHECK(required_length(64, 120) == 20);
  CHECK(required_length(4, 128) == 64);
}

TEST_CASE("timestamp keys chain the block hash") {
  const uint64_t t = 1786060808;
  MacKey key = derive_key_from_timestamp(t, 512);
  REQUIRE(key.bytes.size() == 64);
  CHECK(key.intended_bits == 512);

  Bytes be;
  for (int shift = 56; shift >= 0; shift -= 8) {
    be.push_back(static_cast<uint8_t>(t >> shift));
  }
  auto first = Sha256::digest(be);
  auto second = Sha256::digest(first);
  CHECK(Bytes(key.bytes.begin(), key.bytes.begin() + 32) ==
        Bytes(first.begin(), first.end()));
  CHECK(Bytes(key.bytes.begin() + 32, key.bytes.end()) ==
        Bytes(second.begin(), second.end()));
}

TEST_CASE("timestamp keys truncate to odd widths") {
  MacKey key = derive_key_from_timestamp(12345, 136);
  CHECK(key.bytes.size() == 17);
  CHECK(key.intended_bits == 136);
  MacKey longer = derive_key_from_timestamp(12345, 256);
  CHECK(Bytes(longer.bytes.begin(), longer.bytes.begin() + 17) == key.bytes);
}

TEST_CASE("hex keys must match the requested width exactly") {
  MacKey key = derive_key_from_hex("00112233445566778899aabbccddeeff", 128);
  CHECK(key.bytes == from_hex("00112233445566778899aabbccddeeff"));
  CHECK_THROWS_AS(derive_key_from_hex("0011", 128), std::invalid_argument);
  CHECK_THROWS_AS(derive_key_from_hex("00112233445566778899aabbccddeeff", 64),
                  std::invalid_argument);
  CHECK_THROWS_AS(derive_key_from_hex("xyz", 12), std::invalid_argument);
}

TEST_CASE("split_bits carves MSB-first fixed-width integers") {
  Bytes data = {0x12, 0x34, 0x56, 0x78, 0x9a, 0xbc, 0xde, 0xf0};
  BitStream t = BitStream::from_bytes(data, 64);
  auto words = split_bits(t, 2, 32);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == 0x12345678u);
  CHECK(words[1] == 0x9abcdef0u);

  auto nibbles = split_bits(t, 16, 4);
  CHECK(nibbles[0] == 0x1);
  CHECK(nibbles[15] == 0x0);
}

TEST_CASE("split_bits validates the partition") {
  Bytes data = {0xff, 0xff};
  BitStream t = BitStream::from_bytes(data, 16);
  CHECK_THROWS_AS(split_bits(t, 3, 5), std::invalid_argument);   // 15 != 16
  CHECK_THROWS_AS(split_bits(t, 1, 65), std::invalid_argument);  // width cap
  CHECK_NOTHROW(split_bits(t, 2, 8));
}

TEST_CASE("map_char reduces modulo the charset size") {
  Charset cs = Charset::preset(1);
  CHECK(map_char(0, cs) == 'a');
  CHECK(map_char(25, cs) == 'z');
  CHECK(map_char(26, cs) == 'A');
  CHECK(map_char(51, cs) == 'Z');
  CHECK(map_char(52, cs) == 'a');  // wraps
  CHECK(map_char(0xFFFFFFFFull, cs) == cs.at(0xFFFFFFFFull % 52));
}

TEST_CASE("charset presets have the documented sizes and members") {
  Charset one = Charset::preset(1);
  Charset two = Charset::preset(2);
  Charset three = Charset::preset(3);
  CHECK(one.size() == 52);
  CHECK(two.size() == 62);
  CHECK(three.size() == 72);
  CHECK(two.symbols.find('0') != std::string::npos);
  CHECK(two.symbols.find('9') != std::string::npos);
  CHECK(one.symbols.find('0') == std::string::npos);
  for (char c : std::string("~!@#$%^+-=")) {
    CHECK(three.symbols.find(c) != std::string::npos);
    CHECK(two.symbols.find(c) == std::string::npos);
  }
  CHECK_THROWS_AS(Charset::preset(0), std::invalid_argument);
  CHECK_THROWS_AS(Charset::preset(4), std::invalid_argument);
}

TEST_CASE("password pipeline equals fill-split-map done by hand") {
  CounterModeContext ctx;
  ctx.construction = EngineKind::kKmac;
  ctx.key = make_key(from_hex("404142434445464748494a4b4c4d4e4f"));
  ctx.base_message = {'t', 'b', 'h', 'm'};

  PasswordSpec spec;
  spec.charset = Charset::preset(3);
  spec.length = 21;
  spec.bits_per_char = 32;
  spec.engine = PrngEngine::counter_mode(ctx);
  Password pw = generate_password(spec);
  REQUIRE(pw.text.size() == 21);

  PrngEngine engine = PrngEngine::counter_mode(ctx);
  BitStream t = engine.fill(21 * 32);
  auto words = split_bits(t, 21, 32);
  std::string expected;
  for (uint64_t w : words) expected.push_back(map_char(w, spec.charset));
  CHECK(pw.text == expected);
}

TEST_CASE("password generation is deterministic per spec") {
  PasswordSpec spec;
  spec.charset = Charset::preset(2);
  spec.length = 22;
  spec.engine = PrngEngine::lcg(20260814);
  Password a = generate_password(spec);
  Password b = generate_password(spec);
  CHECK(a.text == b.text);
  CHECK(a.text.size() == 22);
  for (char c : a.text) {
    CHECK(spec.charset.symbols.find(c) != std::string::npos);
  }
}

TEST_CASE("chunk width must cover the charset") {
  PasswordSpec spec;
  spec.charset = Charset::preset(3);  // q = 72 needs at least 7 bits
  spec.length = 4;
  spec.bits_per_char = 6;
  spec.engine = PrngEngine::lcg(1);
  CHECK_THROWS_AS(generate_password(spec), std::invalid_argument);
  spec.bits_per_char = 7;
  CHECK_NOTHROW(generate_password(spec));
}

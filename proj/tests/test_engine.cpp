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

#include <stdexcept>

#include "passmint/defaults.hpp"
#include "passmint/engine.hpp"
#include "passmint/hex.hpp"
#include "passmint/lcg.hpp"
#include "passmint/mac.hpp"
#include "passmint/passgen.hpp"

using namespace passmint;

namespace {

CounterModeContext kmac_ctx(std::string_view key_hex) {
  CounterModeContext ctx;
  ctx.construction = EngineKind::kKmac;
  ctx.key = make_key(from_hex(std::string(key_hex)));
  return ctx;
}

}  // namespace

TEST_CASE("engine names round-trip") {
  for (EngineKind kind : {EngineKind::kLcg, EngineKind::kHmac,
                          EngineKind::kCmac, EngineKind::kKmac}) {
    CHECK(engine_from_name(engine_name(kind)) == kind);
  }
  CHECK_FALSE(engine_from_name("md5").has_value());
  CHECK_FALSE(engine_from_name("").has_value());
}

TEST_CASE("counter block layout: index, label, separator, message, length") {
  CounterModeContext ctx;
  ctx.output_bits = 256;
  CHECK(to_hex(counter_block_message(ctx, 1)) == "000000014b44460000000100");
  CHECK(to_hex(counter_block_message(ctx, 2)) == "000000024b44460000000100");

  ctx.base_message = {'p', 'w'};
  ctx.output_bits = 64;
  CHECK(to_hex(counter_block_message(ctx, 1)) == "000000014b444600707700000040");
}

TEST_CASE("counter block index bounds") {
  CounterModeContext ctx;
  ctx.output_bits = 128;
  CHECK_THROWS_AS(counter_block_message(ctx, 0), std::invalid_argument);
  CHECK_THROWS_AS(counter_block_message(ctx, uint64_t{1} << 32),
                  std::invalid_argument);
  CHECK_NOTHROW(counter_block_message(ctx, (uint64_t{1} << 32) - 1));
}

TEST_CASE("hmac fill concatenates counter-mode tags and truncates") {
  CounterModeContext ctx;
  ctx.construction = EngineKind::kHmac;
  ctx.key = make_key(from_hex("aabbccddeeff00112233445566778899"));
  ctx.base_message = {'c', 't', 'x'};
  PrngEngine engine = PrngEngine::counter_mode(ctx);

  const uint64_t kBits = 700;  // 3 tags of 256 bits, last one cut
  BitStream got = engine.fill(kBits);
  REQUIRE(got.size() == kBits);

  CounterModeContext bound = ctx;
  bound.output_bits = kBits;
  BitStream expected;
  for (uint64_t i = 1; i <= 3; ++i) {
    expected.append(hmac(ctx.key, counter_block_message(bound, i)).bits);
  }
  expected.truncate(kBits);
  CHECK(got == expected);
}

TEST_CASE("cmac fill uses 128-bit blocks") {
  CounterModeContext ctx;
  ctx.construction = EngineKind::kCmac;
  ctx.key = make_key(from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
  PrngEngine engine = PrngEngine::counter_mode(ctx);

  BitStream got = engine.fill(300);  // ceil(300/128) = 3 tags
  REQUIRE(got.size() == 300);

  CounterModeContext bound = ctx;
  bound.output_bits = 300;
  BitStream expected;
  for (uint64_t i = 1; i <= 3; ++i) {
    expected.append(cmac(ctx.key, counter_block_message(bound, i)).bits);
  }
  expected.truncate(300);
  CHECK(got == expected);
}

TEST_CASE("kmac fill is a single length-bound call") {
  CounterModeContext ctx = kmac_ctx("000102030405060708090a0b0c0d0e0f");
  ctx.base_message = {'m'};
  PrngEngine engine = PrngEngine::counter_mode(ctx);

  BitStream got = engine.fill(500);
  KmacParams params;
  params.variant = ctx.kmac_variant;
  params.output_bits = 500;
  CHECK(got == kmac(ctx.key, ctx.base_message, params).bits);

  // The length is bound into the derivation, so prefixes do not agree.
  BitStream longer = engine.fill(501);
  BitStream head = longer;
  head.truncate(500);
  CHECK(head != got);
}

TEST_CASE("hmac and cmac fills extend by whole-tag prefixing") {
  // With the same bound length the shorter request is a prefix; the bound
  // length itself changes the stream, as it enters every block message.
  CounterModeContext ctx;
  ctx.construction = EngineKind::kHmac;
  ctx.key = make_key(from_hex("00ff00ff"));
  PrngEngine engine = PrngEngine::counter_mode(ctx);
  BitStream a = engine.fill(512);
  BitStream b = engine.fill(256);
  CHECK_FALSE(b.is_prefix_of(a));  // L = 512 vs 256 derive different blocks
}

TEST_CASE("lcg fill concatenates 48-bit states most significant bit first") {
  PrngEngine engine = PrngEngine::lcg(42);
  BitStream got = engine.fill(100);
  REQUIRE(got.size() == 100);

  LcgState s = lcg_seed(42);
  auto [s1, v1] = lcg_next(s);
  auto [s2, v2] = lcg_next(s1);
  auto [s3, v3] = lcg_next(s2);
  CHECK(got.read_uint(0, 48) == v1);
  CHECK(got.read_uint(48, 48) == v2);
  CHECK(got.read_uint(96, 4) == v3 >> 44);
}

TEST_CASE("lcg fill advances state across calls") {
  PrngEngine engine = PrngEngine::lcg(7);
  BitStream first = engine.fill(48);
  BitStream second = engine.fill(48);
  CHECK(first != second);

  LcgState s = lcg_seed(7);
  auto [s1, v1] = lcg_next(s);
  auto [s2, v2] = lcg_next(s1);
  CHECK(first.read_uint(0, 48) == v1);
  CHECK(second.read_uint(0, 48) == v2);
}

TEST_CASE("mac fills are stateless and reproducible") {
  CounterModeContext ctx = kmac_ctx("deadbeefdeadbeefdeadbeefdeadbeef");
  PrngEngine engine = PrngEngine::counter_mode(ctx);
  CHECK(engine.fill(256) == engine.fill(256));
}

TEST_CASE("restarting a mac engine appends the index to the message") {
  CounterModeContext ctx = kmac_ctx("0123456789abcdef0123456789abcdef");
  ctx.base_message = {'b', 'a', 's', 'e'};
  PrngEngine engine = PrngEngine::counter_mode(ctx);
  PrngEngine row = engine.restarted(0x01020304);

  CounterModeContext expected = ctx;
  for (uint8_t b : {0x01, 0x02, 0x03, 0x04}) expected.base_message.push_back(b);
  CHECK(row.context().base_message == expected.base_message);

  PrngEngine manual = PrngEngine::counter_mode(expected);
  CHECK(row.fill(128) == manual.fill(128));
  CHECK(row.fill(128) != engine.restarted(5).fill(128));
}

TEST_CASE("restarting the lcg offsets the seed") {
  PrngEngine engine = PrngEngine::lcg(1000);
  PrngEngine row = engine.restarted(3);
  CHECK(row.lcg_seed_value() == 1003);
  PrngEngine direct = PrngEngine::lcg(1003);
  CHECK(row.fill(96) == direct.fill(96));
}

TEST_CASE("restart indexing is relative to the base engine, not the state") {
  PrngEngine engine = PrngEngine::lcg(500);
  engine.fill(480);  // advance the live state
  CHECK(engine.restarted(1).fill(48) == PrngEngine::lcg(501).fill(48));
}

TEST_CASE("counter mode rejects the lcg construction") {
  CounterModeContext ctx;
  ctx.construction = EngineKind::kLcg;
  CHECK_THROWS_AS(PrngEngine::counter_mode(ctx), std::invalid_argument);
}

TEST_CASE("fill rejects a zero-length request") {
  PrngEngine engine = PrngEngine::lcg(1);
  CHECK_THROWS_AS(engine.fill(0), std::invalid_argument);
}

TEST_CASE("default validation engines are well-formed") {
  for (EngineKind kind : {EngineKind::kLcg, EngineKind::kHmac,
                          EngineKind::kCmac, EngineKind::kKmac}) {
    PrngEngine engine = make_validation_engine(kind);
    CHECK(engine.kind() == kind);
    CHECK(engine.fill(64).size() == 64);
    if (kind != EngineKind::kLcg) {
      CHECK(engine.context().key.bytes.size() * 8 == default_key_bits(kind));
    }
  }
}

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

#ifndef PASSMINT_ENGINE_HPP_
#define PASSMINT_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "passmint/bitstream.hpp"
#include "passmint/hex.hpp"
#include "passmint/lcg.hpp"
#include "passmint/mac.hpp"

namespace passmint {

enum class EngineKind { kLcg, kHmac, kCmac, kKmac };

std::string_view engine_name(EngineKind kind);
std::optional<EngineKind> engine_from_name(std::string_view name);

// Context for the MAC counter-mode generators: per-block input is
// BE32(i) || "KDF" || 0x00 || base_message || BE32(output_bits), with the
// counter starting at 1.  The KMAC engine skips this framing entirely and
// binds output_bits through the MAC itself.
struct CounterModeContext {
  EngineKind construction = EngineKind::kKmac;
  MacKey key;
  Bytes base_message;
  uint64_t output_bits = 0;
  HmacHash hmac_hash = HmacHash::kSha256;
  CmacCipher cmac_cipher = CmacCipher::kAes128;
  KmacVariant kmac_variant = KmacVariant::kKmac128;

  static constexpr std::string_view kLabel = "KDF";
  static constexpr uint8_t kSeparator = 0x00;
};

// The i-th block input; i >= 1, and both i and output_bits must fit 32 bits.
Bytes counter_block_message(const CounterModeContext& ctx, uint64_t i);

// Uniform engine over the LCG baseline and the three MAC generators.  MAC
// fills are pure functions of the context; the LCG carries mutable state, so
// an instance belongs to one thread (distinct instances may run in parallel).
class PrngEngine {
 public:
  static PrngEngine lcg(uint64_t seed);
  static PrngEngine counter_mode(CounterModeContext ctx);

  EngineKind kind() const { return kind_; }
  const CounterModeContext& context() const { return ctx_; }
  uint64_t lcg_seed_value() const { return lcg_seed_; }

  // Produces exactly length_bits bits (final block truncated, keeping the
  // leading bits).  Advances the LCG; MAC engines are stateless.
  BitStream fill(uint64_t length_bits);

  // Fresh engine whose context binds the given restart index: MAC engines
  // append BE32(index) to the base message, the LCG reseeds with
  // seed + index.
  PrngEngine restarted(uint32_t index) const;

 private:
  PrngEngine() = default;

  EngineKind kind_ = EngineKind::kLcg;
  LcgState lcg_state_{};
  uint64_t lcg_seed_ = 0;
  CounterModeContext ctx_{};
};

}  // namespace passmint

#endif  // PASSMINT_ENGINE_HPP_

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

#include "passmint/engine.hpp"

#include <stdexcept>

namespace passmint {

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::kLcg:
      return "lcg";
    case EngineKind::kHmac:
      return "hmac";
    case EngineKind::kCmac:
      return "cmac";
    case EngineKind::kKmac:
      return "kmac";
  }
  return "unknown";
}

std::optional<EngineKind> engine_from_name(std::string_view name) {
  if (name == "lcg") return EngineKind::kLcg;
  if (name == "hmac") return EngineKind::kHmac;
  if (name == "cmac") return EngineKind::kCmac;
  if (name == "kmac") return EngineKind::kKmac;
  return std::nullopt;
}

Bytes counter_block_message(const CounterModeContext& ctx, uint64_t i) {
  if (i < 1) {
    throw std::invalid_argument("counter must start at 1");
  }
  if (i > 0xffffffffULL || ctx.output_bits > 0xffffffffULL) {
    throw std::invalid_argument("counter/length exceed 32-bit encoding");
  }
  Bytes out;
  out.reserve(4 + 3 + 1 + ctx.base_message.size() + 4);
  auto push_be32 = [&out](uint64_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      out.push_back(static_cast<uint8_t>(v >> shift));
    }
  };
  push_be32(i);
  out.insert(out.end(), CounterModeContext::kLabel.begin(),
             CounterModeContext::kLabel.end());
  out.push_back(CounterModeContext::kSeparator);
  out.insert(out.end(), ctx.base_message.begin(), ctx.base_message.end());
  push_be32(ctx.output_bits);
  return out;
}

PrngEngine PrngEngine::lcg(uint64_t seed) {
  PrngEngine e;
  e.kind_ = EngineKind::kLcg;
  e.lcg_seed_ = seed;
  e.lcg_state_ = lcg_seed(seed);
  return e;
}

PrngEngine PrngEngine::counter_mode(CounterModeContext ctx) {
  if (ctx.construction == EngineKind::kLcg) {
    throw std::invalid_argument("counter mode requires a MAC construction");
  }
  PrngEngine e;
  e.kind_ = ctx.construction;
  e.ctx_ = std::move(ctx);
  return e;
}

BitStream PrngEngine::fill(uint64_t length_bits) {
  if (length_bits < 1) {
    throw std::invalid_argument("fill length must be positive");
  }
  switch (kind_) {
    case EngineKind::kLcg: {
      BitStream out;
      uint8_t block[6];
      while (out.size() < length_bits) {
        auto [next, value] = lcg_next(lcg_state_);
        lcg_state_ = next;
        for (int j = 0; j < 6; ++j) {
          block[j] = static_cast<uint8_t>(value >> (40 - 8 * j));
        }
        out.append_bytes(block, 48);
      }
      out.truncate(length_bits);
      return out;
    }
    case EngineKind::kHmac:
    case EngineKind::kCmac: {
      CounterModeContext ctx = ctx_;
      ctx.output_bits = length_bits;
      BitStream out;
      for (uint64_t i = 1; out.size() < length_bits; ++i) {
        Bytes block = counter_block_message(ctx, i);
        MacTag tag = kind_ == EngineKind::kHmac
                         ? hmac(ctx.key, block, HmacParams{ctx.hmac_hash})
                         : cmac(ctx.key, block, CmacParams{ctx.cmac_cipher});
        out.append(tag.bits);
      }
      out.truncate(length_bits);
      return out;
    }
    case EngineKind::kKmac: {
      KmacParams params;
      params.variant = ctx_.kmac_variant;
      params.output_bits = length_bits;
      return kmac(ctx_.key, ctx_.base_message, params).bits;
    }
  }
  throw std::logic_error("unreachable engine kind");
}

PrngEngine PrngEngine::restarted(uint32_t index) const {
  if (kind_ == EngineKind::kLcg) {
    return PrngEngine::lcg(lcg_seed_ + index);
  }
  CounterModeContext ctx = ctx_;
  for (int shift = 24; shift >= 0; shift -= 8) {
    ctx.base_message.push_back(static_cast<uint8_t>(index >> shift));
  }
  return PrngEngine::counter_mode(std::move(ctx));
}

}  // namespace passmint

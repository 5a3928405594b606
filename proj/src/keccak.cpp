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

#include "passmint/keccak.hpp"

#include <bit>
#include <cassert>

namespace passmint {

namespace {

constexpr std::array<uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr std::array<int, 24> kRotations = {1,  3,  6,  10, 15, 21, 28, 36,
                                            45, 55, 2,  14, 27, 41, 56, 8,
                                            25, 43, 62, 18, 39, 61, 20, 44};

constexpr std::array<int, 24> kPiLane = {10, 7,  11, 17, 18, 3, 5,  16,
                                         8,  21, 24, 4,  15, 23, 19, 13,
                                         12, 2,  20, 14, 22, 9,  6,  1};

void keccak_f1600(std::array<uint64_t, 25>& a) {
  for (int round = 0; round < 24; ++round) {
    // theta
    uint64_t c[5];
    for (int x = 0; x < 5; ++x) {
      c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    }
    for (int x = 0; x < 5; ++x) {
      uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
      for (int y = 0; y < 25; y += 5) {
        a[x + y] ^= d;
      }
    }
    // rho and pi
    uint64_t t = a[1];
    for (int i = 0; i < 24; ++i) {
      int j = kPiLane[i];
      uint64_t tmp = a[j];
      a[j] = std::rotl(t, kRotations[i]);
      t = tmp;
    }
    // chi
    for (int y = 0; y < 25; y += 5) {
      uint64_t row[5];
      for (int x = 0; x < 5; ++x) {
        row[x] = a[y + x];
      }
      for (int x = 0; x < 5; ++x) {
        a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
      }
    }
    // iota
    a[0] ^= kRoundConstants[round];
  }
}

}  // namespace

KeccakSponge::KeccakSponge(size_t rate_bytes) : rate_(rate_bytes) {
  assert(rate_bytes > 0 && rate_bytes < 200 && rate_bytes % 8 == 0);
}

void KeccakSponge::permute() { keccak_f1600(state_); }

void KeccakSponge::absorb(std::span<const uint8_t> data) {
  assert(!finalized_);
  for (uint8_t byte : data) {
    state_[offset_ / 8] ^= static_cast<uint64_t>(byte) << (8 * (offset_ % 8));
    if (++offset_ == rate_) {
      permute();
      offset_ = 0;
    }
  }
}

void KeccakSponge::finalize(uint8_t domain_suffix) {
  assert(!finalized_);
  state_[offset_ / 8] ^= static_cast<uint64_t>(domain_suffix)
                         << (8 * (offset_ % 8));
  state_[(rate_ - 1) / 8] ^= 0x80ULL << (8 * ((rate_ - 1) % 8));
  permute();
  offset_ = 0;
  finalized_ = true;
}

void KeccakSponge::squeeze(std::span<uint8_t> out) {
  assert(finalized_);
  for (auto& byte : out) {
    byte = static_cast<uint8_t>(state_[offset_ / 8] >> (8 * (offset_ % 8)));
    if (++offset_ == rate_) {
      permute();
      offset_ = 0;
    }
  }
}

std::array<uint8_t, 32> sha3_256(std::span<const uint8_t> data) {
  KeccakSponge sponge(136);
  sponge.absorb(data);
  sponge.finalize(0x06);
  std::array<uint8_t, 32> out;
  sponge.squeeze(out);
  return out;
}

Bytes shake128(std::span<const uint8_t> data, size_t out_bytes) {
  KeccakSponge sponge(168);
  sponge.absorb(data);
  sponge.finalize(0x1f);
  Bytes out(out_bytes);
  sponge.squeeze(out);
  return out;
}

Bytes shake256(std::span<const uint8_t> data, size_t out_bytes) {
  KeccakSponge sponge(136);
  sponge.absorb(data);
  sponge.finalize(0x1f);
  Bytes out(out_bytes);
  sponge.squeeze(out);
  return out;
}

namespace {

Bytes encode_with(uint64_t value, bool length_first) {
  // Minimal big-endian byte string for value (at least one byte), with the
  // byte count prepended (left_encode) or appended (right_encode).
  int n = 1;
  while ((value >> (8 * n)) != 0 && n < 8) {
    ++n;
  }
  Bytes out;
  out.reserve(n + 1);
  if (length_first) {
    out.push_back(static_cast<uint8_t>(n));
  }
  for (int i = n - 1; i >= 0; --i) {
    out.push_back(static_cast<uint8_t>(value >> (8 * i)));
  }
  if (!length_first) {
    out.push_back(static_cast<uint8_t>(n));
  }
  return out;
}

}  // namespace

Bytes left_encode(uint64_t value) { return encode_with(value, true); }

Bytes right_encode(uint64_t value) { return encode_with(value, false); }

Bytes encode_string(std::span<const uint8_t> s) {
  Bytes out = left_encode(static_cast<uint64_t>(s.size()) * 8);
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

Bytes bytepad(std::span<const uint8_t> s, size_t rate_bytes) {
  Bytes out = left_encode(rate_bytes);
  out.insert(out.end(), s.begin(), s.end());
  while (out.size() % rate_bytes != 0) {
    out.push_back(0x00);
  }
  return out;
}

namespace {

Bytes cshake(size_t rate_bytes, std::span<const uint8_t> data,
             size_t out_bytes, std::span<const uint8_t> function_name,
             std::span<const uint8_t> customization) {
  if (function_name.empty() && customization.empty()) {
    return rate_bytes == 168 ? shake128(data, out_bytes)
                             : shake256(data, out_bytes);
  }
  Bytes prefix = encode_string(function_name);
  Bytes custom = encode_string(customization);
  prefix.insert(prefix.end(), custom.begin(), custom.end());
  Bytes padded = bytepad(prefix, rate_bytes);

  KeccakSponge sponge(rate_bytes);
  sponge.absorb(padded);
  sponge.absorb(data);
  sponge.finalize(0x04);
  Bytes out(out_bytes);
  sponge.squeeze(out);
  return out;
}

}  // namespace

Bytes cshake128(std::span<const uint8_t> data, size_t out_bytes,
                std::span<const uint8_t> function_name,
                std::span<const uint8_t> customization) {
  return cshake(168, data, out_bytes, function_name, customization);
}

Bytes cshake256(std::span<const uint8_t> data, size_t out_bytes,
                std::span<const uint8_t> function_name,
                std::span<const uint8_t> customization) {
  return cshake(136, data, out_bytes, function_name, customization);
}

}  // namespace passmint

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

#include "passmint/aes.hpp"

#include <cassert>
#include <stdexcept>

namespace passmint {

namespace {

constexpr uint8_t xtime(uint8_t x) {
  return static_cast<uint8_t>((x << 1) ^ ((x >> 7) * 0x1b));
}

// Multiplicative inverse in GF(2^8) by exponentiation (x^254 = x^-1).
constexpr uint8_t gf_mul(uint8_t a, uint8_t b) {
  uint8_t p = 0;
  for (int i = 0; i < 8; ++i) {
    if (b & 1) {
      p ^= a;
    }
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

constexpr uint8_t gf_inv(uint8_t x) {
  // x^254 via square-and-multiply.
  uint8_t result = 1;
  uint8_t base = x;
  int e = 254;
  while (e > 0) {
    if (e & 1) {
      result = gf_mul(result, base);
    }
    base = gf_mul(base, base);
    e >>= 1;
  }
  return result;
}

constexpr std::array<uint8_t, 256> make_sbox() {
  std::array<uint8_t, 256> box{};
  for (int i = 0; i < 256; ++i) {
    uint8_t x = gf_inv(static_cast<uint8_t>(i));
    uint8_t y = x;
    for (int shift = 1; shift <= 4; ++shift) {
      y ^= static_cast<uint8_t>((x << shift) | (x >> (8 - shift)));
    }
    box[i] = y ^ 0x63;
  }
  return box;
}

constexpr std::array<uint8_t, 256> kSbox = make_sbox();
static_assert(kSbox[0x00] == 0x63 && kSbox[0x01] == 0x7c &&
              kSbox[0x53] == 0xed && kSbox[0xff] == 0x16);

constexpr uint32_t sub_word(uint32_t w) {
  return (static_cast<uint32_t>(kSbox[(w >> 24) & 0xff]) << 24) |
         (static_cast<uint32_t>(kSbox[(w >> 16) & 0xff]) << 16) |
         (static_cast<uint32_t>(kSbox[(w >> 8) & 0xff]) << 8) |
         static_cast<uint32_t>(kSbox[w & 0xff]);
}

constexpr uint32_t rot_word(uint32_t w) { return (w << 8) | (w >> 24); }

}  // namespace

Aes::Aes(std::span<const uint8_t> key) {
  if (key.size() != 16 && key.size() != 32) {
    throw std::invalid_argument("AES key must be 16 or 32 bytes");
  }
  const int nk = static_cast<int>(key.size() / 4);
  rounds_ = nk + 6;
  const int total_words = 4 * (rounds_ + 1);

  for (int i = 0; i < nk; ++i) {
    round_keys_[i] = (static_cast<uint32_t>(key[4 * i]) << 24) |
                     (static_cast<uint32_t>(key[4 * i + 1]) << 16) |
                     (static_cast<uint32_t>(key[4 * i + 2]) << 8) |
                     static_cast<uint32_t>(key[4 * i + 3]);
  }
  uint8_t rcon = 0x01;
  for (int i = nk; i < total_words; ++i) {
    uint32_t temp = round_keys_[i - 1];
    if (i % nk == 0) {
      temp = sub_word(rot_word(temp)) ^ (static_cast<uint32_t>(rcon) << 24);
      rcon = xtime(rcon);
    } else if (nk == 8 && i % nk == 4) {
      temp = sub_word(temp);
    }
    round_keys_[i] = round_keys_[i - nk] ^ temp;
  }
}

std::array<uint8_t, Aes::kBlockBytes> Aes::encrypt_block(
    std::span<const uint8_t> plaintext) const {
  assert(plaintext.size() == kBlockBytes);
  std::array<uint8_t, kBlockBytes> state;
  for (size_t i = 0; i < kBlockBytes; ++i) {
    state[i] = plaintext[i];
  }

  auto add_round_key = [&](int round) {
    for (int c = 0; c < 4; ++c) {
      uint32_t w = round_keys_[4 * round + c];
      state[4 * c] ^= static_cast<uint8_t>(w >> 24);
      state[4 * c + 1] ^= static_cast<uint8_t>(w >> 16);
      state[4 * c + 2] ^= static_cast<uint8_t>(w >> 8);
      state[4 * c + 3] ^= static_cast<uint8_t>(w);
    }
  };

  auto sub_bytes = [&] {
    for (auto& b : state) {
      b = kSbox[b];
    }
  };

  auto shift_rows = [&] {
    // Row r (bytes r, r+4, r+8, r+12) rotates left by r positions.
    std::array<uint8_t, kBlockBytes> t = state;
    for (int r = 1; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        state[4 * c + r] = t[4 * ((c + r) % 4) + r];
      }
    }
  };

  auto mix_columns = [&] {
    for (int c = 0; c < 4; ++c) {
      uint8_t* col = &state[4 * c];
      uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
      col[0] = static_cast<uint8_t>(xtime(a0) ^ xtime(a1) ^ a1 ^ a2 ^ a3);
      col[1] = static_cast<uint8_t>(a0 ^ xtime(a1) ^ xtime(a2) ^ a2 ^ a3);
      col[2] = static_cast<uint8_t>(a0 ^ a1 ^ xtime(a2) ^ xtime(a3) ^ a3);
      col[3] = static_cast<uint8_t>(xtime(a0) ^ a0 ^ a1 ^ a2 ^ xtime(a3));
    }
  };

  add_round_key(0);
  for (int round = 1; round < rounds_; ++round) {
    sub_bytes();
    shift_rows();
    mix_columns();
    add_round_key(round);
  }
  sub_bytes();
  shift_rows();
  add_round_key(rounds_);
  return state;
}

}  // namespace passmint

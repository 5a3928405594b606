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

#include "passmint/mac.hpp"

#include <stdexcept>

#include "passmint/aes.hpp"
#include "passmint/keccak.hpp"
#include "passmint/sha256.hpp"

namespace passmint {

MacKey make_key(std::span<const uint8_t> raw) {
  return MacKey{Bytes(raw.begin(), raw.end()), raw.size() * 8};
}

size_t hmac_block_bytes(HmacHash hash) {
  return hash == HmacHash::kSha256 ? 64 : 136;
}

size_t hmac_output_bytes(HmacHash hash) {
  (void)hash;
  return 32;
}

namespace {

Bytes hash_bytes(HmacHash hash, std::span<const uint8_t> data) {
  if (hash == HmacHash::kSha256) {
    auto d = Sha256::digest(data);
    return Bytes(d.begin(), d.end());
  }
  auto d = sha3_256(data);
  return Bytes(d.begin(), d.end());
}

}  // namespace

MacKey hmac_preprocess_key(std::span<const uint8_t> raw, HmacHash hash) {
  const size_t block = hmac_block_bytes(hash);
  Bytes k0;
  if (raw.size() > block) {
    k0 = hash_bytes(hash, raw);
  } else {
    k0.assign(raw.begin(), raw.end());
  }
  k0.resize(block, 0x00);
  return MacKey{std::move(k0), block * 8};
}

MacTag hmac(const MacKey& key, std::span<const uint8_t> message,
            const HmacParams& params) {
  const size_t block = hmac_block_bytes(params.hash);
  MacKey k0 = key.bytes.size() == block
                  ? key
                  : hmac_preprocess_key(key.bytes, params.hash);

  Bytes inner(block);
  Bytes outer(block);
  for (size_t i = 0; i < block; ++i) {
    inner[i] = k0.bytes[i] ^ HmacParams::kIpadByte;
    outer[i] = k0.bytes[i] ^ HmacParams::kOpadByte;
  }
  inner.insert(inner.end(), message.begin(), message.end());
  Bytes inner_digest = hash_bytes(params.hash, inner);
  outer.insert(outer.end(), inner_digest.begin(), inner_digest.end());
  Bytes tag = hash_bytes(params.hash, outer);
  return MacTag{BitStream::from_bytes(tag, tag.size() * 8)};
}

namespace {

std::array<uint8_t, 16> dbl(const std::array<uint8_t, 16>& in) {
  std::array<uint8_t, 16> out;
  uint8_t carry = 0;
  for (int i = 15; i >= 0; --i) {
    out[i] = static_cast<uint8_t>((in[i] << 1) | carry);
    carry = in[i] >> 7;
  }
  if (in[0] & 0x80) {
    out[15] ^= 0x87;
  }
  return out;
}

}  // namespace

CmacSubkeys cmac_subkeys(const Aes& cipher) {
  const std::array<uint8_t, 16> zero{};
  std::array<uint8_t, 16> l = cipher.encrypt_block(zero);
  CmacSubkeys keys;
  keys.k1 = dbl(l);
  keys.k2 = dbl(keys.k1);
  return keys;
}

MacTag cmac(const MacKey& key, std::span<const uint8_t> message,
            const CmacParams& params) {
  const size_t expected = params.cipher == CmacCipher::kAes128 ? 16 : 32;
  if (key.bytes.size() != expected) {
    throw std::invalid_argument("CMAC key length does not match cipher");
  }
  const Aes cipher(key.bytes);
  const CmacSubkeys keys = cmac_subkeys(cipher);

  constexpr size_t kBlock = Aes::kBlockBytes;
  const size_t n = message.empty() ? 1 : (message.size() + kBlock - 1) / kBlock;
  const bool complete = !message.empty() && message.size() % kBlock == 0;

  std::array<uint8_t, kBlock> last;
  if (complete) {
    for (size_t i = 0; i < kBlock; ++i) {
      last[i] = message[(n - 1) * kBlock + i] ^ keys.k1[i];
    }
  } else {
    const size_t tail = message.size() - (n - 1) * kBlock;
    for (size_t i = 0; i < kBlock; ++i) {
      uint8_t byte = i < tail ? message[(n - 1) * kBlock + i]
                              : (i == tail ? uint8_t{0x80} : uint8_t{0x00});
      last[i] = byte ^ keys.k2[i];
    }
  }

  std::array<uint8_t, kBlock> c{};
  for (size_t b = 0; b + 1 < n; ++b) {
    for (size_t i = 0; i < kBlock; ++i) {
      c[i] ^= message[b * kBlock + i];
    }
    c = cipher.encrypt_block(c);
  }
  for (size_t i = 0; i < kBlock; ++i) {
    c[i] ^= last[i];
  }
  c = cipher.encrypt_block(c);
  return MacTag{BitStream::from_bytes(c, c.size() * 8)};
}

MacTag kmac(const MacKey& key, std::span<const uint8_t> message,
            const KmacParams& params) {
  if (params.output_bits == 0) {
    throw std::invalid_argument("KMAC output length must be positive");
  }
  const size_t rate = params.variant == KmacVariant::kKmac128 ? 168 : 136;

  Bytes input = bytepad(encode_string(key.bytes), rate);
  input.insert(input.end(), message.begin(), message.end());
  Bytes length_suffix = right_encode(params.output_bits);
  input.insert(input.end(), length_suffix.begin(), length_suffix.end());

  const size_t out_bytes = (params.output_bits + 7) / 8;
  static constexpr std::string_view kFunctionName = "KMAC";
  Bytes out = params.variant == KmacVariant::kKmac128
                  ? cshake128(input, out_bytes, as_bytes_view(kFunctionName),
                              params.customization)
                  : cshake256(input, out_bytes, as_bytes_view(kFunctionName),
                              params.customization);
  BitStream bits = BitStream::from_bytes(out, out.size() * 8);
  bits.truncate(params.output_bits);
  return MacTag{std::move(bits)};
}

}  // namespace passmint

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

#ifndef PASSMINT_MAC_HPP_
#define PASSMINT_MAC_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "passmint/bitstream.hpp"
#include "passmint/hex.hpp"

namespace passmint {

class Aes;

// Key material plus its nominal bit length.  For HMAC the preprocessed key
// always occupies one full hash block; CMAC keys are 128 or 256 bits; KMAC
// keys default to 256 bits but any length is accepted.
struct MacKey {
  Bytes bytes;
  size_t intended_bits = 0;

  bool consistent() const { return bytes.size() * 8 == intended_bits; }
};

MacKey make_key(std::span<const uint8_t> raw);

enum class HmacHash { kSha256, kSha3_256 };

struct HmacParams {
  HmacHash hash = HmacHash::kSha256;
  static constexpr uint8_t kIpadByte = 0x36;
  static constexpr uint8_t kOpadByte = 0x5c;
};

size_t hmac_block_bytes(HmacHash hash);
size_t hmac_output_bytes(HmacHash hash);

// FIPS 198-1 key preprocessing: keys longer than the hash block are hashed,
// then every key is zero-padded to exactly one block.
MacKey hmac_preprocess_key(std::span<const uint8_t> raw, HmacHash hash);

enum class CmacCipher { kAes128, kAes256 };

struct CmacParams {
  CmacCipher cipher = CmacCipher::kAes128;
  static constexpr size_t kBlockBits = 128;
};

enum class KmacVariant { kKmac128, kKmac256 };

struct KmacParams {
  KmacVariant variant = KmacVariant::kKmac128;
  size_t output_bits = 256;
  Bytes customization;
};

struct MacTag {
  BitStream bits;
};

// HMAC over the selected hash; raw keys of any length are preprocessed
// internally.  Tag length equals the hash output length.
MacTag hmac(const MacKey& key, std::span<const uint8_t> message,
            const HmacParams& params = {});

// AES-CMAC (SP 800-38B).  Key must be 16 or 32 bytes to match the cipher.
// Tag length is the 128-bit block size.
MacTag cmac(const MacKey& key, std::span<const uint8_t> message,
            const CmacParams& params = {});

// KMAC128/256 (SP 800-185).  Output length is params.output_bits exactly;
// the length is bound into the input, so outputs for different L are
// unrelated rather than prefixes of each other.
MacTag kmac(const MacKey& key, std::span<const uint8_t> message,
            const KmacParams& params);

struct CmacSubkeys {
  std::array<uint8_t, 16> k1;
  std::array<uint8_t, 16> k2;
};

// Subkey derivation (K1 = dbl(AES_k(0)), K2 = dbl(K1)), exposed for tests.
CmacSubkeys cmac_subkeys(const Aes& cipher);

}  // namespace passmint

#endif  // PASSMINT_MAC_HPP_

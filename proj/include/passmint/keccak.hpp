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

#ifndef PASSMINT_KECCAK_HPP_
#define PASSMINT_KECCAK_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "passmint/hex.hpp"

namespace passmint {

// Keccak[1600] sponge.  Absorb any number of byte spans, then call
// finalize(suffix) once with the domain-separation bits (0x06 for SHA-3,
// 0x1f for SHAKE, 0x04 for cSHAKE) and squeeze as many bytes as needed.
class KeccakSponge {
 public:
  explicit KeccakSponge(size_t rate_bytes);

  size_t rate() const { return rate_; }

  void absorb(std::span<const uint8_t> data);
  void finalize(uint8_t domain_suffix);
  void squeeze(std::span<uint8_t> out);

 private:
  void permute();

  std::array<uint64_t, 25> state_{};
  size_t rate_;
  size_t offset_ = 0;  // byte position within the current rate block
  bool finalized_ = false;
};

std::array<uint8_t, 32> sha3_256(std::span<const uint8_t> data);
Bytes shake128(std::span<const uint8_t> data, size_t out_bytes);
Bytes shake256(std::span<const uint8_t> data, size_t out_bytes);

// SP 800-185 string encodings.
Bytes left_encode(uint64_t value);
Bytes right_encode(uint64_t value);
Bytes encode_string(std::span<const uint8_t> s);
Bytes bytepad(std::span<const uint8_t> s, size_t rate_bytes);

// cSHAKE with function name N and customization string S.  With both empty
// this degrades to plain SHAKE, as the standard requires.
Bytes cshake128(std::span<const uint8_t> data, size_t out_bytes,
                std::span<const uint8_t> function_name,
                std::span<const uint8_t> customization);
Bytes cshake256(std::span<const uint8_t> data, size_t out_bytes,
                std::span<const uint8_t> function_name,
                std::span<const uint8_t> customization);

inline std::span<const uint8_t> as_bytes_view(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace passmint

#endif  // PASSMINT_KECCAK_HPP_

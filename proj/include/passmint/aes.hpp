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

#ifndef PASSMINT_AES_HPP_
#define PASSMINT_AES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace passmint {

// AES block cipher, encryption direction only (sufficient for CMAC and
// counter-mode use).  Supports 128- and 256-bit keys.
class Aes {
 public:
  static constexpr size_t kBlockBytes = 16;

  // key.size() must be 16 or 32.
  explicit Aes(std::span<const uint8_t> key);

  std::array<uint8_t, kBlockBytes> encrypt_block(
      std::span<const uint8_t> plaintext) const;

 private:
  std::array<uint32_t, 60> round_keys_{};  // up to 14+1 round keys, 4 words each
  int rounds_;
};

}  // namespace passmint

#endif  // PASSMINT_AES_HPP_

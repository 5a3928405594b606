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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "passmint/hex.hpp"

namespace passmint {

// Ordered bit sequence, MSB-first within bytes. Unused low bits of the
// final packed byte are always zero, so packed bytes compare bitwise.
class BitStream {
 public:
  BitStream() = default;

  // Takes the leading `nbits` of `bytes` (nbits <= 8 * bytes.size()).
  static BitStream from_bytes(std::span<const uint8_t> bytes, size_t nbits);

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  int bit(size_t index) const;

  void append_bit(int value);
  void append_bytes(std::span<const uint8_t> bytes, size_t nbits);
  void append(const BitStream& other);

  // Keeps the leading `nbits`; no-op when the stream is already shorter.
  void truncate(size_t nbits);

  // Value of bits [pos, pos + nbits), MSB-first; nbits <= 64.
  uint64_t read_uint(size_t pos, size_t nbits) const;

  // Packed MSB-first; size() bits, zero padding in the last byte.
  const Bytes& packed() const { return bytes_; }

  // One byte per bit, each 0 or 1.
  std::vector<uint8_t> unpacked() const;

  bool is_prefix_of(const BitStream& other) const;

  std::string hex() const { return to_hex(bytes_); }

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  Bytes bytes_;
  size_t nbits_ = 0;
};

}  // namespace passmint

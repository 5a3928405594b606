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

#include "passmint/bitstream.hpp"

#include <stdexcept>

namespace passmint {

BitStream BitStream::from_bytes(std::span<const uint8_t> bytes, size_t nbits) {
  BitStream out;
  out.append_bytes(bytes, nbits);
  return out;
}

int BitStream::bit(size_t index) const {
  if (index >= nbits_) {
    throw std::out_of_range("bit index past end of stream");
  }
  return (bytes_[index >> 3] >> (7 - (index & 7))) & 1;
}

void BitStream::append_bit(int value) {
  if (nbits_ % 8 == 0) {
    bytes_.push_back(0);
  }
  if (value) {
    bytes_[nbits_ >> 3] |= static_cast<uint8_t>(1u << (7 - (nbits_ & 7)));
  }
  ++nbits_;
}

void BitStream::append_bytes(std::span<const uint8_t> bytes, size_t nbits) {
  if (nbits > bytes.size() * 8) {
    throw std::invalid_argument("append_bytes: not enough input bits");
  }
  if (nbits_ % 8 == 0) {
    size_t whole = nbits / 8;
    bytes_.insert(bytes_.end(), bytes.begin(), bytes.begin() + whole);
    nbits_ += whole * 8;
    size_t rest = nbits - whole * 8;
    if (rest > 0) {
      uint8_t tail = bytes[whole] & static_cast<uint8_t>(0xff00 >> rest);
      bytes_.push_back(tail);
      nbits_ += rest;
    }
    return;
  }
  for (size_t i = 0; i < nbits; ++i) {
    append_bit((bytes[i >> 3] >> (7 - (i & 7))) & 1);
  }
}

void BitStream::append(const BitStream& other) {
  append_bytes(other.bytes_, other.nbits_);
}

void BitStream::truncate(size_t nbits) {
  if (nbits >= nbits_) {
    return;
  }
  nbits_ = nbits;
  bytes_.resize((nbits + 7) / 8);
  size_t rest = nbits % 8;
  if (rest > 0) {
    bytes_.back() &= static_cast<uint8_t>(0xff00 >> rest);
  }
}

uint64_t BitStream::read_uint(size_t pos, size_t nbits) const {
  if (nbits > 64) {
    throw std::invalid_argument("read_uint: more than 64 bits requested");
  }
  if (pos + nbits > nbits_) {
    throw std::out_of_range("read_uint past end of stream");
  }
  uint64_t value = 0;
  size_t i = pos;
  const size_t end = pos + nbits;
  // byte-aligned middle runs fast; edges bit by bit
  while (i < end && (i & 7) != 0) {
    value = (value << 1) | static_cast<uint64_t>(bit(i++));
  }
  while (i + 8 <= end) {
    value = (value << 8) | bytes_[i >> 3];
    i += 8;
  }
  while (i < end) {
    value = (value << 1) | static_cast<uint64_t>(bit(i++));
  }
  return value;
}

std::vector<uint8_t> BitStream::unpacked() const {
  std::vector<uint8_t> out(nbits_);
  for (size_t i = 0; i < nbits_; ++i) {
    out[i] = static_cast<uint8_t>((bytes_[i >> 3] >> (7 - (i & 7))) & 1);
  }
  return out;
}

bool BitStream::is_prefix_of(const BitStream& other) const {
  if (nbits_ > other.nbits_) {
    return false;
  }
  size_t whole = nbits_ / 8;
  for (size_t i = 0; i < whole; ++i) {
    if (bytes_[i] != other.bytes_[i]) {
      return false;
    }
  }
  size_t rest = nbits_ % 8;
  if (rest > 0) {
    uint8_t mask = static_cast<uint8_t>(0xff00 >> rest);
    if ((bytes_[whole] & mask) != (other.bytes_[whole] & mask)) {
      return false;
    }
  }
  return true;
}

}  // namespace passmint

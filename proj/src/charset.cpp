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

#include "passmint/charset.hpp"

#include <stdexcept>

namespace passmint {

namespace {

constexpr char kLower[] = "abcdefghijklmnopqrstuvwxyz";
constexpr char kUpper[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr char kDigits[] = "0123456789";
constexpr char kSpecials[] = "~!@#$%^+-=";

}  // namespace

Charset Charset::preset(int which) {
  Charset cs;
  cs.symbols.reserve(72);
  cs.symbols += kLower;
  cs.symbols += kUpper;
  if (which >= 2) {
    cs.symbols += kDigits;
  }
  if (which >= 3) {
    cs.symbols += kSpecials;
  }
  if (which < 1 || which > 3) {
    throw std::invalid_argument("charset preset must be 1, 2, or 3");
  }
  return cs;
}

}  // namespace passmint

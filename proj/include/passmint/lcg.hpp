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

#ifndef PASSMINT_LCG_HPP_
#define PASSMINT_LCG_HPP_

#include <cstdint>
#include <utility>

namespace passmint {

// 48-bit linear congruential generator with the stock library constants
// (a = 25214903917, c = 11, m = 2^48).  Full states are emitted, which makes
// the recurrence exactly invertible — the point of the seed-recovery demo.
struct LcgState {
  static constexpr uint64_t kMultiplier = 25214903917ULL;  // 0x5deece66d
  static constexpr uint64_t kIncrement = 11;
  static constexpr uint64_t kModulusMask = (uint64_t{1} << 48) - 1;

  uint64_t state = 0;  // always < 2^48

  friend bool operator==(const LcgState&, const LcgState&) = default;
};

// state = (a XOR k) mod 2^48; only the low 48 bits of the seed participate.
LcgState lcg_seed(uint64_t k);

// Advances one step; the returned value is the new 48-bit state itself.
std::pair<LcgState, uint64_t> lcg_next(LcgState s);

// Unique predecessor: (state - c) * a^{-1} mod 2^48.
LcgState lcg_invert(LcgState s);

// a^{-1} mod 2^48, computed at compile time by lifting the inverse 2-adically
// (Newton: x <- x * (2 - a * x), doubling the valid bit width each step).
constexpr uint64_t lcg_multiplier_inverse() {
  uint64_t a = LcgState::kMultiplier;
  uint64_t x = a;  // a * a == 1 (mod 8) for odd a
  for (int i = 0; i < 5; ++i) {
    x = (x * (2 - a * x)) & LcgState::kModulusMask;
  }
  return x;
}

static_assert((lcg_multiplier_inverse() * LcgState::kMultiplier &
               LcgState::kModulusMask) == 1);

// Walks back `steps` states from s to f_0, then unmasks the seed's low
// 48 bits via k = a XOR f_0.
uint64_t lcg_recover_seed_low48(LcgState s, uint64_t steps);

}  // namespace passmint

#endif  // PASSMINT_LCG_HPP_

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

#include "passmint/lcg.hpp"

namespace passmint {

LcgState lcg_seed(uint64_t k) {
  return LcgState{(LcgState::kMultiplier ^ k) & LcgState::kModulusMask};
}

std::pair<LcgState, uint64_t> lcg_next(LcgState s) {
  uint64_t next = (LcgState::kMultiplier * s.state + LcgState::kIncrement) &
                  LcgState::kModulusMask;
  return {LcgState{next}, next};
}

LcgState lcg_invert(LcgState s) {
  uint64_t prev =
      ((s.state - LcgState::kIncrement) * lcg_multiplier_inverse()) &
      LcgState::kModulusMask;
  return LcgState{prev};
}

uint64_t lcg_recover_seed_low48(LcgState s, uint64_t steps) {
  for (uint64_t i = 0; i < steps; ++i) {
    s = lcg_invert(s);
  }
  return (LcgState::kMultiplier ^ s.state) & LcgState::kModulusMask;
}

}  // namespace passmint

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

#ifndef PASSMINT_DEFAULTS_HPP_
#define PASSMINT_DEFAULTS_HPP_

#include <cstdint>

#include "passmint/engine.hpp"

namespace passmint {

// Key length in bits each construction expects (HMAC: one hash block;
// CMAC: AES-128; KMAC: 256).  For the LCG this is the 64-bit seed width.
size_t default_key_bits(EngineKind kind);

// Frozen per-engine contexts for the reproducible validation experiments
// (restart matrix, IID battery, character uniformity).  MAC engines derive
// their key from the timestamp below with an empty base message; the LCG
// uses the seed directly.  Interactive generation does NOT use these — it
// defaults to the wall clock.
uint64_t default_validation_key_time(EngineKind kind);

PrngEngine make_validation_engine(EngineKind kind);

}  // namespace passmint

#endif  // PASSMINT_DEFAULTS_HPP_

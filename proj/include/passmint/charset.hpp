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

#ifndef PASSMINT_CHARSET_HPP_
#define PASSMINT_CHARSET_HPP_

#include <cstddef>
#include <string>

namespace passmint {

// Ordered password alphabet; the symbol index is what random values are
// reduced to modulo size().
struct Charset {
  std::string symbols;

  size_t size() const { return symbols.size(); }
  char at(size_t index) const { return symbols[index]; }

  // Presets 1..3: lowercase+uppercase (52), +digits (62),
  // +the ten specials ~!@#$%^+-= (72).
  static Charset preset(int which);
};

}  // namespace passmint

#endif  // PASSMINT_CHARSET_HPP_

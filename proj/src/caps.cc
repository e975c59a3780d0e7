// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "persuade/caps.hpp"

#include <cstdlib>

#include "persuade/error.hpp"

namespace persuade {

Caps Caps::uniform(std::uint64_t cap) {
  return Caps{cap, cap, cap, cap, cap};
}

Caps Caps::from_environment() {
  if (const char* text = std::getenv("PERSUADE_CAP"); text != nullptr && *text) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(text, &end, 10);
    if (end == text || *end != '\0' || v == 0) {
      throw ValidationError(std::string("PERSUADE_CAP must be a positive integer, got '") +
                            text + "'");
    }
    return uniform(v);
  }
  return Caps{};
}

void check_cap(std::uint64_t count, std::uint64_t cap, const std::string& what) {
  if (count > cap) {
    throw CapExceeded(what + ": " + std::to_string(count) + " exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace persuade

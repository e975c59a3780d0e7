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

#ifndef PERSUADE_CAPS_HPP_
#define PERSUADE_CAPS_HPP_

#include <cstdint>
#include <string>

namespace persuade {

// Budgets for the exhaustive enumerations. Every value counts enumerated
// objects (partitions, maps, subsets, determinants, staircases).
struct Caps {
  std::uint64_t set_partitions = 4'213'597;  // Bell(12)
  std::uint64_t pure_maps = 10'000'000;
  std::uint64_t subsets = std::uint64_t{1} << 20;
  std::uint64_t determinants = 1'000'000;
  std::uint64_t staircases = 1'000'000;

  // Same value for every budget.
  static Caps uniform(std::uint64_t cap);
  // Defaults, overridden by PERSUADE_CAP when set.
  static Caps from_environment();
};

// Throws CapExceeded when count > cap.
void check_cap(std::uint64_t count, std::uint64_t cap, const std::string& what);

}  // namespace persuade

#endif  // PERSUADE_CAPS_HPP_

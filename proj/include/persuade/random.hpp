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

#ifndef PERSUADE_RANDOM_HPP_
#define PERSUADE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "persuade/rational.hpp"

namespace persuade {

// Seeded generator. Uses mt19937_64 directly (no std distributions) so that
// draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for sample `index` of a run seeded with `seed`.
  // Streams depend only on (seed, index), never on scheduling.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  // k / 2^53 with k uniform on [0, 2^53).
  Rational uniform_unit();
  // Uniform dyadic on [0, width].
  Rational uniform(const Rational& width) { return uniform_unit() * width; }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace persuade

#endif  // PERSUADE_RANDOM_HPP_

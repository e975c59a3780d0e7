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

#include "persuade/combinatorics.hpp"

#include <limits>

namespace persuade {
namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

}  // namespace

std::uint64_t count_set_partitions(std::size_t n, std::size_t max_blocks) {
  if (n == 0) return 1;
  if (max_blocks == 0 || max_blocks > n) max_blocks = n;
  // Stirling numbers of the second kind, row by row.
  std::vector<std::uint64_t> s(n + 1, 0);
  s[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (std::size_t k = 1; k <= i; ++k) {
      next[k] = sat_add(sat_mul(k, s[k]), s[k - 1]);
    }
    s = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= max_blocks; ++k) total = sat_add(total, s[k]);
  return total;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace persuade

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

#ifndef PERSUADE_COMBINATORICS_HPP_
#define PERSUADE_COMBINATORICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace persuade {

// Number of set partitions of an n-set into at most max_blocks blocks
// (saturates at UINT64_MAX). max_blocks == 0 means no limit (Bell number).
std::uint64_t count_set_partitions(std::size_t n, std::size_t max_blocks = 0);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Saturating integer power.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent);

// Visits every set partition of {0..n-1} with at most max_blocks blocks
// (0 = unlimited) as a restricted growth string: rgs[0] = 0 and
// rgs[i] <= 1 + max(rgs[0..i-1]). The visitor receives the string, the block
// count and the block membership bitmasks (n <= 32).
template <typename Visitor>
void for_each_set_partition(std::size_t n, std::size_t max_blocks, Visitor&& visit) {
  if (n == 0) return;
  if (max_blocks == 0 || max_blocks > n) max_blocks = n;
  std::vector<int> rgs(n, 0);
  std::vector<std::uint32_t> masks(n, 0);
  auto recurse = [&](auto& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      visit(std::span<const int>(rgs), blocks,
            std::span<const std::uint32_t>(masks.data(), blocks));
      return;
    }
    const std::size_t limit = blocks < max_blocks ? blocks + 1 : blocks;
    for (std::size_t b = 0; b < limit; ++b) {
      rgs[i] = static_cast<int>(b);
      masks[b] |= std::uint32_t{1} << i;
      self(self, i + 1, b == blocks ? blocks + 1 : blocks);
      masks[b] &= ~(std::uint32_t{1} << i);
    }
  };
  rgs[0] = 0;
  masks[0] = 1;
  recurse(recurse, 1, 1);
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visitor>
void for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Visits every map {0..n-1} -> {0..m-1} in lexicographic order.
template <typename Visitor>
void for_each_map(std::size_t n, std::size_t m, Visitor&& visit) {
  std::vector<int> g(n, 0);
  while (true) {
    visit(std::span<const int>(g));
    std::size_t i = n;
    while (i > 0 && g[i - 1] == static_cast<int>(m) - 1) {
      g[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
    ++g[i - 1];
  }
}

}  // namespace persuade

#endif  // PERSUADE_COMBINATORICS_HPP_

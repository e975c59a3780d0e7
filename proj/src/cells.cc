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

#include "persuade/cells.hpp"

#include <bit>

#include "persuade/error.hpp"

namespace persuade {
namespace {

// Integer numerators of prior(w) * u(w, a) over their common denominator.
Matrix<Integer> scaled_weights(const Environment& env, const RationalMatrix& u,
                               Integer& scale) {
  std::vector<Rational> weighted;
  weighted.reserve(env.n_states() * env.n_actions());
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    for (std::size_t a = 0; a < env.n_actions(); ++a) {
      weighted.push_back(env.prior(w) * u(w, a));
    }
  }
  scale = common_denominator(weighted);
  Matrix<Integer> out(env.n_states(), env.n_actions());
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    for (std::size_t a = 0; a < env.n_actions(); ++a) {
      out(w, a) = boost::multiprecision::numerator(
          Rational(weighted[w * env.n_actions() + a] * scale));
    }
  }
  return out;
}

}  // namespace

CellTable::CellTable(const Environment& env, const Caps& caps)
    : n_states_(env.n_states()), n_actions_(env.n_actions()) {
  if (n_states_ > 31 || n_actions_ > 32) {
    throw ValidationError("cell tables support at most 31 states and 32 actions");
  }
  const std::uint64_t n_cells = std::uint64_t{1} << n_states_;
  check_cap(n_cells, caps.subsets, "state subsets");

  Integer receiver_scale;
  const Matrix<Integer> receiver = scaled_weights(env, env.u_receiver(), receiver_scale);
  const Matrix<Integer> sender = scaled_weights(env, env.u_sender(), sender_scale_);

  argmax_.assign(n_cells, 0);
  preferred_.assign(n_cells, -1);
  value_.assign(n_cells, Integer(0));

  // Running subset sums: cell = rest + lowest state.
  std::vector<Integer> r_sum(n_cells * n_actions_);
  std::vector<Integer> s_sum(n_cells * n_actions_);
  for (std::uint64_t cell = 1; cell < n_cells; ++cell) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(cell));
    const std::uint64_t rest = cell & (cell - 1);
    Integer* r = &r_sum[cell * n_actions_];
    Integer* s = &s_sum[cell * n_actions_];
    const Integer* r_rest = &r_sum[rest * n_actions_];
    const Integer* s_rest = &s_sum[rest * n_actions_];
    for (std::size_t a = 0; a < n_actions_; ++a) {
      r[a] = r_rest[a] + receiver(low, a);
      s[a] = s_rest[a] + sender(low, a);
    }
    std::uint32_t best_mask = 1;
    std::size_t best = 0;
    for (std::size_t a = 1; a < n_actions_; ++a) {
      if (r[a] > r[best]) {
        best = a;
        best_mask = std::uint32_t{1} << a;
      } else if (r[a] == r[best]) {
        best_mask |= std::uint32_t{1} << a;
      }
    }
    argmax_[cell] = best_mask;
    int preferred = -1;
    for (std::size_t a = 0; a < n_actions_; ++a) {
      if (!((best_mask >> a) & 1u)) continue;
      if (preferred < 0 || s[a] > s[static_cast<std::size_t>(preferred)]) {
        preferred = static_cast<int>(a);
      }
    }
    preferred_[cell] = preferred;
    value_[cell] = s[static_cast<std::size_t>(preferred)];
  }
}

std::uint32_t state_mask(const std::vector<int>& states) {
  std::uint32_t mask = 0;
  for (int w : states) mask |= std::uint32_t{1} << w;
  return mask;
}

std::vector<int> mask_states(std::uint32_t mask) {
  std::vector<int> out;
  for (int w = 0; mask != 0; ++w, mask >>= 1) {
    if (mask & 1u) out.push_back(w);
  }
  return out;
}

}  // namespace persuade

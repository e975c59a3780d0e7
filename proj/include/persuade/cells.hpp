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

#ifndef PERSUADE_CELLS_HPP_
#define PERSUADE_CELLS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/core.hpp"

namespace persuade {

// Receiver's response to every belief of the form "prior conditioned on a
// nonempty subset of states", indexed by state bitmask. All sums are kept
// as integers over one common denominator per player.
class CellTable {
 public:
  // Throws CapExceeded when 2^|states| exceeds caps.subsets and
  // ValidationError when there are more than 32 states or actions.
  CellTable(const Environment& env, const Caps& caps = Caps::from_environment());

  std::size_t n_states() const { return n_states_; }
  std::size_t n_actions() const { return n_actions_; }

  // Receiver's argmax of sum_{w in cell} prior(w) u_R(a, w), as an action mask.
  std::uint32_t receiver_argmax(std::uint32_t cell) const { return argmax_[cell]; }
  bool is_receiver_optimal(std::uint32_t cell, int action) const {
    return (argmax_[cell] >> action) & 1u;
  }
  // Sender-preferred action among Receiver's argmax (lowest index on ties).
  int sender_preferred_response(std::uint32_t cell) const { return preferred_[cell]; }
  // Sender's unnormalized cell payoff sum_{w in cell} prior(w) u_S(a, w) for
  // the Sender-preferred response, scaled by sender_scale().
  const Integer& sender_value_scaled(std::uint32_t cell) const { return value_[cell]; }
  const Integer& sender_scale() const { return sender_scale_; }
  Rational sender_value(std::uint32_t cell) const {
    return Rational(value_[cell], sender_scale_);
  }

 private:
  std::size_t n_states_;
  std::size_t n_actions_;
  Integer sender_scale_;
  std::vector<std::uint32_t> argmax_;
  std::vector<int> preferred_;
  std::vector<Integer> value_;
};

// Bitmask with one bit per state in `states`.
std::uint32_t state_mask(const std::vector<int>& states);
std::vector<int> mask_states(std::uint32_t mask);

}  // namespace persuade

#endif  // PERSUADE_CELLS_HPP_

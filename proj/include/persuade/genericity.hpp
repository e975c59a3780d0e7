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

#ifndef PERSUADE_GENERICITY_HPP_
#define PERSUADE_GENERICITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/core.hpp"

namespace persuade {

struct UniqueResponseResult {
  bool holds = true;
  // First subset (by bitmask order) with a tied Receiver argmax.
  std::vector<int> witness_cell;
  std::vector<int> tied_actions;
};

UniqueResponseResult partitional_unique_response(const Environment& env,
                                                 const Caps& caps = Caps::from_environment());

// Rows: u_S(a_j) - u_S(a_i) for j != i, then u_R(a_j) - u_R(a_i) for j != i,
// then the |Ω| x |Ω| identity. Columns are states.
RationalMatrix expanded_indifference_matrix(const Environment& env, std::size_t base_action);

struct ScantIndifferenceResult {
  bool holds = true;
  std::size_t base_action = 0;
  // Row indices into the expanded-indifference matrix of a singular square
  // row-submatrix, and that submatrix.
  std::vector<std::size_t> rows;
  RationalMatrix witness;
};

// Number of square row-submatrices examined, summed over base actions.
std::uint64_t scant_indifference_budget(std::size_t n_states, std::size_t n_actions);

ScantIndifferenceResult scant_indifferences(const Environment& env,
                                            const Caps& caps = Caps::from_environment());

struct SenderRegularity {
  bool regular = true;
  // ideal_sets[i]: states where a_i is the unique Sender-ideal action.
  std::vector<std::vector<int>> ideal_sets;
  // weak_ideal_sets[i]: states where a_i is a Sender-ideal action; may overlap.
  std::vector<std::vector<int>> weak_ideal_sets;
  // First state with a Sender tie, or -1.
  int witness_state = -1;
};

SenderRegularity sender_regular(const Environment& env);

struct FelicityResult {
  bool holds = true;
  // (i, j) with sum_{w in Ω_i} prior(w) (u_R(a_i,w) - u_R(a_j,w)) < 0.
  int witness_ideal = -1;
  int witness_deviation = -1;
};

// Throws ValidationError when u_S is not regular.
FelicityResult felicitous(const Environment& env);

// True iff some state has `action` as the unique ideal action of both players.
bool jointly_ideal_in_some_state(const Environment& env, std::size_t action);

struct JointInclusivityResult {
  bool holds = true;
  int missing_action = -1;
};

JointInclusivityResult jointly_inclusive(const Environment& env);

struct TransparencyResult {
  bool transparent = false;
  // Set only when transparent.
  std::optional<bool> no_duplicate_actions;
  std::vector<Rational> v;
};

TransparencyResult transparent_checks(const Environment& env);

struct GenericityReport {
  UniqueResponseResult partitional_unique_response;
  ScantIndifferenceResult scant_indifferences;
  SenderRegularity sender_regular;
  JointInclusivityResult jointly_inclusive;
  // Unset when u_S is not regular.
  std::optional<FelicityResult> felicitous;
  TransparencyResult transparent;

  bool generic() const {
    return partitional_unique_response.holds && scant_indifferences.holds;
  }
};

GenericityReport genericity_report(const Environment& env,
                                   const Caps& caps = Caps::from_environment());

}  // namespace persuade

#endif  // PERSUADE_GENERICITY_HPP_

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

#ifndef PERSUADE_CURVE_HPP_
#define PERSUADE_CURVE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/core.hpp"

namespace persuade {

// Total orders as position -> original index.
struct Orders {
  std::vector<int> states;
  std::vector<int> actions;
};

Orders natural_orders(const Environment& env);
void validate_orders(const Environment& env, const Orders& orders);

struct SupermodularityResult {
  bool holds = true;
  // Original indices with a < a' and w < w' in the orders where
  // u(a',w') - u(a,w') > u(a',w) - u(a,w) fails.
  int a = -1, a_prime = -1, w = -1, w_prime = -1;
};

// Adjacent pairs suffice: the cross difference over any rectangle is a sum of
// adjacent cross differences.
SupermodularityResult is_strictly_supermodular(const RationalMatrix& u, const Orders& orders);
// Every pair a < a', w < w'.
SupermodularityResult is_strictly_supermodular_full(const RationalMatrix& u,
                                                    const Orders& orders);

// Per-state action interval [lo_t, hi_t] in order positions, with
// lo_1 <= hi_1 <= lo_2 <= ... <= hi_n.
struct Staircase {
  std::vector<int> lo;
  std::vector<int> hi;
};

// C(m + 2n - 1, 2n).
std::uint64_t staircase_count(std::size_t n_states, std::size_t n_actions);

template <typename Visitor>
void for_each_staircase(std::size_t n_states, std::size_t n_actions, Visitor&& visit) {
  // A staircase is a non-decreasing sequence of length 2n over m values.
  const std::size_t len = 2 * n_states;
  std::vector<int> seq(len, 0);
  Staircase s{std::vector<int>(n_states), std::vector<int>(n_states)};
  const int top = static_cast<int>(n_actions) - 1;
  while (true) {
    for (std::size_t t = 0; t < n_states; ++t) {
      s.lo[t] = seq[2 * t];
      s.hi[t] = seq[2 * t + 1];
    }
    visit(static_cast<const Staircase&>(s));
    std::size_t i = len;
    while (i > 0 && seq[i - 1] == top) --i;
    if (i == 0) return;
    const int v = seq[i - 1] + 1;
    for (std::size_t j = i - 1; j < len; ++j) seq[j] = v;
  }
}

// Pairwise definition: a < a' with pi(a|w) > 0 and pi(a'|w') > 0 forces w <= w'.
bool is_comonotone(const RationalMatrix& pi, const Orders& orders);

// Every obedience inequality sum_w pi(a|w) prior(w) (u_R(a,w) - u_R(a',w)) >= 0.
bool is_obedient(const Environment& env, const RationalMatrix& pi);

struct CurveSolution {
  Rational value;
  OutcomeDistribution outcome;
  Staircase envelope;
  std::uint64_t staircases = 0;
  std::uint64_t feasible = 0;
};

// Max Sender payoff over comonotone, obedient outcomes. Throws ValidationError
// unless u_S is strictly supermodular in the orders.
CurveSolution curve_payoff(const Environment& env, const Orders& orders,
                           const Caps& caps = Caps::from_environment());

struct CurvePartitionalSolution {
  Rational value;
  DeterministicOutcomeMap map;
};

// Max Sender payoff over weakly monotone deterministic maps whose outcome is
// obedient.
CurvePartitionalSolution curve_partitional_payoff(const Environment& env, const Orders& orders,
                                                  const Caps& caps = Caps::from_environment());

struct Theorem4Check {
  bool hypothesis = false;
  bool conclusion = false;
  bool pass = true;
  Rational curve;
  Rational curve_partitional;
  Rational cheap_talk;
};

// hypothesis: curve > best pure cheap talk; conclusion: curve > curve
// partitional. Requires strict supermodularity and partitional unique response.
Theorem4Check theorem4_check(const Environment& env, const Orders& orders,
                             const Caps& caps = Caps::from_environment());

// First order pair (lexicographic in state then action permutations) making
// u_S strictly supermodular; limited to at most 5 states and 5 actions.
std::optional<Orders> find_supermodular_orders(const Environment& env);

}  // namespace persuade

#endif  // PERSUADE_CURVE_HPP_

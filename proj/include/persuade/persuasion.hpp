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

#ifndef PERSUADE_PERSUASION_HPP_
#define PERSUADE_PERSUASION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/core.hpp"
#include "persuade/exactlp.hpp"

namespace persuade {

// An optimal recommendation outcome of the persuasion program.
struct PersuasionSolution {
  Rational value;
  OutcomeDistribution outcome;
  // joint(w, a) = prior(w) * pi(a | w).
  RationalMatrix joint;
  // Actions recommended with positive probability.
  std::vector<int> recommended_actions;
  // Ordered pairs (a, a') with a recommended whose obedience constraint holds
  // with equality at this vertex.
  std::vector<std::pair<int, int>> binding_obedience;
};

// max sum x(w,a) u_S(a,w) s.t. x >= 0, sum_a x(w,a) = prior(w) and, for every
// ordered pair a != a', sum_w x(w,a) (u_R(a,w) - u_R(a',w)) >= 0. Variable
// x(w,a) has index w * |A| + a.
exactlp::LinearProgram persuasion_lp(const Environment& env);

PersuasionSolution persuasion_payoff(const Environment& env);

// Recommendation profile of a persuasion solution: message a recommends a
// (|M| = default_message_count), unused messages recommend the lowest
// recommended action.
Profile recommendation_profile(const Environment& env, const PersuasionSolution& sol);

struct PartitionalSolution {
  Rational value;
  std::vector<std::vector<int>> cells;
  // Sender-preferred Receiver best response, one per cell.
  std::vector<int> actions;
};

enum class PartitionMethod {
  // Restricted-growth-string walk over set partitions.
  kEnumerate,
  // Dynamic program over state subsets, f(S) = max_{C ∋ min S} v(C) + f(S \ C).
  // Same optimum over all set partitions in O(3^|Ω|) time.
  kSubsetDp,
};

struct PartitionOptions {
  PartitionMethod method = PartitionMethod::kEnumerate;
  // Enumeration only: 0 visits every set partition, k > 0 those with <= k cells.
  std::size_t max_cells = 0;
  Caps caps = Caps::from_environment();
};

// Best partitional persuasion profile, by exhaustive restricted-growth-string
// enumeration of set partitions. Ties inside a cell go to Sender. Throws
// CapExceeded when the partition count exceeds caps.set_partitions.
PartitionalSolution partitional_persuasion_payoff(const Environment& env,
                                                  const PartitionOptions& options = {});

// Sender's payoff when Receiver acts on the prior, ties broken for Sender.
Rational babbling_payoff(const Environment& env);
int babbling_action(const Environment& env);

// sum_w prior(w) max_a u_S(a, w).
Rational sender_ideal_payoff(const Environment& env);

struct RecommendationCheck {
  int action;
  Belief posterior;
  std::vector<int> receiver_argmax;
};

// Per-vertex diagnostic: flag is true iff Receiver is indifferent between two
// or more actions at the posterior induced by some recommendation.
struct IndifferenceDiagnostic {
  bool flag = false;
  std::vector<RecommendationCheck> recommendations;
};

IndifferenceDiagnostic receiver_indifference_diagnostic(const Environment& env,
                                                        const PersuasionSolution& sol);

}  // namespace persuade

#endif  // PERSUADE_PERSUASION_HPP_

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

#ifndef PERSUADE_CHEAPTALK_HPP_
#define PERSUADE_CHEAPTALK_HPP_

#include <string>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/core.hpp"

namespace persuade {

struct PureEquilibrium {
  DeterministicOutcomeMap map;
  Rational payoff_S;
  Rational payoff_R;
  std::vector<int> induced_actions;
};

// Every map g: Ω -> A supported by a partitional Sender strategy and a pure
// Receiver strategy in a cheap-talk equilibrium, in lexicographic order of g.
std::vector<PureEquilibrium> enumerate_pure_equilibria(
    const Environment& env, const Caps& caps = Caps::from_environment());

// Best Sender payoff over pure equilibria; ties go to the lexicographically
// smallest map.
PureEquilibrium best_pure_cheap_talk(const Environment& env,
                                     const Caps& caps = Caps::from_environment());

// True iff g passes both equilibrium conditions.
bool is_pure_equilibrium(const Environment& env, const DeterministicOutcomeMap& g);

// Message a announces action a; off-path messages repeat the lowest induced
// action. Uses default_message_count(env) messages.
Profile to_profile(const Environment& env, const PureEquilibrium& eq);

struct Violation {
  // "sender" (index is a state) or "receiver" (index is a message).
  std::string player;
  std::size_t index = 0;
  // Better message (sender) or better action (receiver).
  std::size_t deviation = 0;
  Rational gain;
};

struct VerificationReport {
  bool is_R_BR = true;
  bool is_S_BR = true;
  Rational payoff_S;
  Rational payoff_R;
  std::vector<Violation> violations;

  bool is_equilibrium() const { return is_R_BR && is_S_BR; }
};

// Nash check: Receiver rows are constrained only on messages sent with
// positive probability.
VerificationReport verify_profile(const Environment& env, const Profile& profile);

// State w sends m_i for the unique Sender-ideal a_i; message m_i is answered
// with a_i. Throws ValidationError unless u_S is regular.
Profile requesting_compliant(const Environment& env);

}  // namespace persuade

#endif  // PERSUADE_CHEAPTALK_HPP_

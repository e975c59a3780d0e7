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

#ifndef PERSUADE_CORE_HPP_
#define PERSUADE_CORE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "persuade/rational.hpp"

namespace persuade {

// A finite Sender-Receiver environment: an interior prior over states and
// one utility matrix per player, indexed [state][action].
class Environment {
 public:
  Environment() = default;

  // Validates dimensions, strict positivity of the prior and that it sums to
  // one. Missing labels are filled with "w<i>" / "a<j>".
  Environment(std::vector<Rational> prior, RationalMatrix u_sender,
              RationalMatrix u_receiver,
              std::vector<std::string> state_labels = {},
              std::vector<std::string> action_labels = {});

  std::size_t n_states() const { return prior_.size(); }
  std::size_t n_actions() const { return u_sender_.cols(); }

  const std::vector<Rational>& prior() const { return prior_; }
  const Rational& prior(std::size_t state) const { return prior_[state]; }
  const RationalMatrix& u_sender() const { return u_sender_; }
  const RationalMatrix& u_receiver() const { return u_receiver_; }
  const Rational& u_sender(std::size_t state, std::size_t action) const {
    return u_sender_(state, action);
  }
  const Rational& u_receiver(std::size_t state, std::size_t action) const {
    return u_receiver_(state, action);
  }
  const std::vector<std::string>& state_labels() const { return state_labels_; }
  const std::vector<std::string>& action_labels() const { return action_labels_; }

  // All utilities lie in [0, 1].
  bool in_unit_box() const;

  Environment with_sender_utility(RationalMatrix u_sender) const;
  Environment with_receiver_utility(RationalMatrix u_receiver) const;
  Environment with_prior(std::vector<Rational> prior) const;

  friend bool operator==(const Environment&, const Environment&) = default;

 private:
  std::vector<Rational> prior_;
  RationalMatrix u_sender_;
  RationalMatrix u_receiver_;
  std::vector<std::string> state_labels_;
  std::vector<std::string> action_labels_;
};

// A probability vector over states.
struct Belief {
  std::vector<Rational> probabilities;

  std::size_t size() const { return probabilities.size(); }
  const Rational& operator[](std::size_t i) const { return probabilities[i]; }
  friend bool operator==(const Belief&, const Belief&) = default;
};

// A messaging strategy sigma[state][message] paired with an action strategy
// rho[message][action] over an explicit finite message set.
class Profile {
 public:
  Profile() = default;
  Profile(RationalMatrix sigma, RationalMatrix rho);

  std::size_t n_states() const { return sigma_.rows(); }
  std::size_t n_messages() const { return sigma_.cols(); }
  std::size_t n_actions() const { return rho_.cols(); }
  const RationalMatrix& sigma() const { return sigma_; }
  const RationalMatrix& rho() const { return rho_; }

  // Every sigma row puts probability one on a single message.
  bool is_partitional() const;
  // Every rho row puts probability one on a single action.
  bool is_pure_rho() const;
  // Probability that `message` is sent, weighted by `prior`.
  Rational message_probability(const std::vector<Rational>& prior,
                               std::size_t message) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  RationalMatrix sigma_;
  RationalMatrix rho_;
};

// State-conditional action lottery pi[state][action].
struct OutcomeDistribution {
  RationalMatrix pi;

  bool is_deterministic() const;
  friend bool operator==(const OutcomeDistribution&,
                         const OutcomeDistribution&) = default;
};

// Deterministic outcome g: state -> action.
struct DeterministicOutcomeMap {
  std::vector<int> assignment;

  std::size_t size() const { return assignment.size(); }
  int operator[](std::size_t state) const { return assignment[state]; }
  OutcomeDistribution to_outcome(std::size_t n_actions) const;
  friend bool operator==(const DeterministicOutcomeMap&,
                         const DeterministicOutcomeMap&) = default;
  friend auto operator<=>(const DeterministicOutcomeMap&,
                          const DeterministicOutcomeMap&) = default;
};

struct PayoffPair {
  Rational sender;
  Rational receiver;
};

// |M| = max(|states|, |actions|) + 1.
std::size_t default_message_count(const Environment& env);

PayoffPair evaluate_profile(const Environment& env, const Profile& profile);

// Bayes posterior after `message`. Throws OffPathMessage when the message has
// zero probability.
Belief induced_posterior(const Environment& env, const Profile& profile,
                         std::size_t message);

OutcomeDistribution outcome_of_profile(const Environment& env,
                                       const Profile& profile);

// Ex-ante payoffs of an outcome distribution.
PayoffPair evaluate_outcome(const Environment& env,
                            const OutcomeDistribution& outcome);

// Expected utility of `action` for each player under `belief`.
Rational expected_sender_utility(const Environment& env, const Belief& belief,
                                 std::size_t action);
Rational expected_receiver_utility(const Environment& env, const Belief& belief,
                                   std::size_t action);

// Receiver's full argmax set at `belief`, ascending.
std::vector<int> receiver_best_responses(const Environment& env,
                                         const Belief& belief);

}  // namespace persuade

#endif  // PERSUADE_CORE_HPP_

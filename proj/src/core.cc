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

#include "persuade/core.hpp"

#include <algorithm>

#include "persuade/error.hpp"

namespace persuade {
namespace {

std::vector<std::string> default_labels(std::vector<std::string> labels,
                                        std::size_t n, char prefix) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(1, prefix) + std::to_string(i + 1));
    }
  }
  return labels;
}

}  // namespace

Environment::Environment(std::vector<Rational> prior, RationalMatrix u_sender,
                         RationalMatrix u_receiver,
                         std::vector<std::string> state_labels,
                         std::vector<std::string> action_labels)
    : prior_(std::move(prior)),
      u_sender_(std::move(u_sender)),
      u_receiver_(std::move(u_receiver)) {
  const std::size_t n = prior_.size();
  if (n == 0) throw ValidationError("environment needs at least one state");
  if (u_sender_.rows() != n || u_receiver_.rows() != n) {
    throw ValidationError("utility matrices must have one row per state");
  }
  if (u_sender_.cols() == 0 || u_sender_.cols() != u_receiver_.cols()) {
    throw ValidationError("utility matrices must share a nonzero action count");
  }
  Rational total = 0;
  for (const Rational& p : prior_) {
    if (p <= 0) throw ValidationError("prior must be interior (all entries > 0)");
    total += p;
  }
  if (total != 1) throw ValidationError("prior must sum to 1, got " + to_string(total));

  state_labels_ = default_labels(std::move(state_labels), n, 'w');
  action_labels_ = default_labels(std::move(action_labels), n_actions(), 'a');
  if (state_labels_.size() != n || action_labels_.size() != n_actions()) {
    throw ValidationError("label count does not match dimensions");
  }
}

bool Environment::in_unit_box() const {
  for (std::size_t i = 0; i < n_states(); ++i) {
    for (std::size_t j = 0; j < n_actions(); ++j) {
      for (const Rational* u : {&u_sender_(i, j), &u_receiver_(i, j)}) {
        if (*u < 0 || *u > 1) return false;
      }
    }
  }
  return true;
}

Environment Environment::with_sender_utility(RationalMatrix u_sender) const {
  return Environment(prior_, std::move(u_sender), u_receiver_, state_labels_,
                     action_labels_);
}

Environment Environment::with_receiver_utility(RationalMatrix u_receiver) const {
  return Environment(prior_, u_sender_, std::move(u_receiver), state_labels_,
                     action_labels_);
}

Environment Environment::with_prior(std::vector<Rational> prior) const {
  return Environment(std::move(prior), u_sender_, u_receiver_, state_labels_,
                     action_labels_);
}

Profile::Profile(RationalMatrix sigma, RationalMatrix rho)
    : sigma_(std::move(sigma)), rho_(std::move(rho)) {
  if (sigma_.cols() == 0) throw ValidationError("profile needs at least one message");
  if (rho_.rows() != sigma_.cols()) {
    throw ValidationError("rho must have one row per message");
  }
  if (!is_row_stochastic(sigma_)) throw ValidationError("sigma rows must be stochastic");
  if (!is_row_stochastic(rho_)) throw ValidationError("rho rows must be stochastic");
}

bool Profile::is_partitional() const {
  for (std::size_t i = 0; i < sigma_.rows(); ++i) {
    if (degenerate_index(sigma_.row(i)) < 0) return false;
  }
  return true;
}

bool Profile::is_pure_rho() const {
  for (std::size_t m = 0; m < rho_.rows(); ++m) {
    if (degenerate_index(rho_.row(m)) < 0) return false;
  }
  return true;
}

Rational Profile::message_probability(const std::vector<Rational>& prior,
                                      std::size_t message) const {
  Rational p = 0;
  for (std::size_t w = 0; w < sigma_.rows(); ++w) p += prior[w] * sigma_(w, message);
  return p;
}

bool OutcomeDistribution::is_deterministic() const {
  for (std::size_t w = 0; w < pi.rows(); ++w) {
    if (degenerate_index(pi.row(w)) < 0) return false;
  }
  return true;
}

OutcomeDistribution DeterministicOutcomeMap::to_outcome(std::size_t n_actions) const {
  OutcomeDistribution out{RationalMatrix(assignment.size(), n_actions)};
  for (std::size_t w = 0; w < assignment.size(); ++w) {
    out.pi(w, static_cast<std::size_t>(assignment[w])) = 1;
  }
  return out;
}

std::size_t default_message_count(const Environment& env) {
  return std::max(env.n_states(), env.n_actions()) + 1;
}

namespace {

void check_dimensions(const Environment& env, const Profile& profile) {
  if (profile.n_states() != env.n_states() || profile.n_actions() != env.n_actions()) {
    throw ValidationError("profile dimensions do not match the environment");
  }
}

}  // namespace

OutcomeDistribution outcome_of_profile(const Environment& env,
                                       const Profile& profile) {
  check_dimensions(env, profile);
  OutcomeDistribution out{RationalMatrix(env.n_states(), env.n_actions())};
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    for (std::size_t m = 0; m < profile.n_messages(); ++m) {
      const Rational& s = profile.sigma()(w, m);
      if (s == 0) continue;
      for (std::size_t a = 0; a < env.n_actions(); ++a) {
        if (profile.rho()(m, a) != 0) out.pi(w, a) += s * profile.rho()(m, a);
      }
    }
  }
  return out;
}

PayoffPair evaluate_outcome(const Environment& env,
                            const OutcomeDistribution& outcome) {
  if (outcome.pi.rows() != env.n_states() || outcome.pi.cols() != env.n_actions()) {
    throw ValidationError("outcome dimensions do not match the environment");
  }
  PayoffPair result{0, 0};
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    for (std::size_t a = 0; a < env.n_actions(); ++a) {
      const Rational& p = outcome.pi(w, a);
      if (p == 0) continue;
      Rational weight = env.prior(w) * p;
      result.sender += weight * env.u_sender(w, a);
      result.receiver += weight * env.u_receiver(w, a);
    }
  }
  return result;
}

PayoffPair evaluate_profile(const Environment& env, const Profile& profile) {
  check_dimensions(env, profile);
  PayoffPair result{0, 0};
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    for (std::size_t m = 0; m < profile.n_messages(); ++m) {
      const Rational& s = profile.sigma()(w, m);
      if (s == 0) continue;
      for (std::size_t a = 0; a < env.n_actions(); ++a) {
        const Rational& r = profile.rho()(m, a);
        if (r == 0) continue;
        Rational weight = env.prior(w) * s * r;
        result.sender += weight * env.u_sender(w, a);
        result.receiver += weight * env.u_receiver(w, a);
      }
    }
  }
  return result;
}

Belief induced_posterior(const Environment& env, const Profile& profile,
                         std::size_t message) {
  check_dimensions(env, profile);
  if (message >= profile.n_messages()) {
    throw ValidationError("message index out of range");
  }
  Rational total = profile.message_probability(env.prior(), message);
  if (total == 0) {
    throw OffPathMessage("message " + std::to_string(message) +
                         " is sent with probability zero");
  }
  Belief belief;
  belief.probabilities.reserve(env.n_states());
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    belief.probabilities.push_back(env.prior(w) * profile.sigma()(w, message) / total);
  }
  return belief;
}

Rational expected_sender_utility(const Environment& env, const Belief& belief,
                                 std::size_t action) {
  Rational v = 0;
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    if (belief[w] != 0) v += belief[w] * env.u_sender(w, action);
  }
  return v;
}

Rational expected_receiver_utility(const Environment& env, const Belief& belief,
                                   std::size_t action) {
  Rational v = 0;
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    if (belief[w] != 0) v += belief[w] * env.u_receiver(w, action);
  }
  return v;
}

std::vector<int> receiver_best_responses(const Environment& env,
                                         const Belief& belief) {
  std::vector<int> best;
  Rational best_value;
  for (std::size_t a = 0; a < env.n_actions(); ++a) {
    Rational v = expected_receiver_utility(env, belief, a);
    if (best.empty() || v > best_value) {
      best.assign(1, static_cast<int>(a));
      best_value = v;
    } else if (v == best_value) {
      best.push_back(static_cast<int>(a));
    }
  }
  return best;
}

}  // namespace persuade

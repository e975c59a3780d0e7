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

#include "persuade/cheaptalk.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <span>

#include "persuade/cells.hpp"
#include "persuade/combinatorics.hpp"
#include "persuade/error.hpp"
#include "persuade/genericity.hpp"

namespace persuade {
namespace {

// Sender best response condition against the induced action set: no state
// prefers another induced action to its own.
bool sender_obeys(const Environment& env, std::span<const int> g, std::uint32_t range) {
  for (std::size_t w = 0; w < g.size(); ++w) {
    const Rational& own = env.u_sender(w, static_cast<std::size_t>(g[w]));
    for (std::uint32_t r = range; r != 0; r &= r - 1) {
      if (env.u_sender(w, static_cast<std::size_t>(std::countr_zero(r))) > own) return false;
    }
  }
  return true;
}

bool check_map(const Environment& env, const CellTable& cells, std::span<const int> g,
               std::vector<std::uint32_t>& cell_of) {
  std::fill(cell_of.begin(), cell_of.end(), 0);
  std::uint32_t range = 0;
  for (std::size_t w = 0; w < g.size(); ++w) {
    cell_of[static_cast<std::size_t>(g[w])] |= std::uint32_t{1} << w;
    range |= std::uint32_t{1} << g[w];
  }
  for (std::uint32_t r = range; r != 0; r &= r - 1) {
    const int a = std::countr_zero(r);
    if (!cells.is_receiver_optimal(cell_of[static_cast<std::size_t>(a)], a)) return false;
  }
  return sender_obeys(env, g, range);
}

PureEquilibrium make_equilibrium(const Environment& env, std::span<const int> g) {
  PureEquilibrium eq;
  eq.map.assignment.assign(g.begin(), g.end());
  eq.payoff_S = 0;
  eq.payoff_R = 0;
  std::uint32_t range = 0;
  for (std::size_t w = 0; w < g.size(); ++w) {
    const auto a = static_cast<std::size_t>(g[w]);
    eq.payoff_S += env.prior(w) * env.u_sender(w, a);
    eq.payoff_R += env.prior(w) * env.u_receiver(w, a);
    range |= std::uint32_t{1} << a;
  }
  eq.induced_actions = mask_states(range);
  return eq;
}

void check_map_size(const Environment& env, const Caps& caps) {
  check_cap(saturating_pow(env.n_actions(), env.n_states()), caps.pure_maps,
            "outcome maps");
}

}  // namespace

bool is_pure_equilibrium(const Environment& env, const DeterministicOutcomeMap& g) {
  if (g.size() != env.n_states()) throw ValidationError("map size differs from state count");
  for (int a : g.assignment) {
    if (a < 0 || static_cast<std::size_t>(a) >= env.n_actions()) {
      throw ValidationError("map action out of range");
    }
  }
  const CellTable cells(env);
  std::vector<std::uint32_t> cell_of(env.n_actions());
  return check_map(env, cells, g.assignment, cell_of);
}

std::vector<PureEquilibrium> enumerate_pure_equilibria(const Environment& env,
                                                       const Caps& caps) {
  check_map_size(env, caps);
  const CellTable cells(env, caps);
  std::vector<std::uint32_t> cell_of(env.n_actions());
  std::vector<PureEquilibrium> out;
  for_each_map(env.n_states(), env.n_actions(), [&](std::span<const int> g) {
    if (check_map(env, cells, g, cell_of)) out.push_back(make_equilibrium(env, g));
  });
  return out;
}

PureEquilibrium best_pure_cheap_talk(const Environment& env, const Caps& caps) {
  check_map_size(env, caps);
  const CellTable cells(env, caps);
  std::vector<std::uint32_t> cell_of(env.n_actions());
  std::optional<PureEquilibrium> best;
  for_each_map(env.n_states(), env.n_actions(), [&](std::span<const int> g) {
    if (!check_map(env, cells, g, cell_of)) return;
    PureEquilibrium eq = make_equilibrium(env, g);
    if (!best || eq.payoff_S > best->payoff_S) best = std::move(eq);
  });
  // Babbling on a Sender-preferred prior best response is always present.
  if (!best) throw std::logic_error("no pure cheap-talk equilibrium found");
  return *best;
}

Profile to_profile(const Environment& env, const PureEquilibrium& eq) {
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  const std::size_t messages = default_message_count(env);
  RationalMatrix sigma(n, messages), rho(messages, k);
  for (std::size_t w = 0; w < n; ++w) sigma(w, static_cast<std::size_t>(eq.map[w])) = 1;
  const int fallback = eq.induced_actions.front();
  for (std::size_t m = 0; m < messages; ++m) {
    const bool on_path = std::find(eq.induced_actions.begin(), eq.induced_actions.end(),
                                   static_cast<int>(m)) != eq.induced_actions.end();
    rho(m, static_cast<std::size_t>(on_path ? static_cast<int>(m) : fallback)) = 1;
  }
  return Profile(std::move(sigma), std::move(rho));
}

VerificationReport verify_profile(const Environment& env, const Profile& profile) {
  if (profile.n_states() != env.n_states() || profile.n_actions() != env.n_actions()) {
    throw ValidationError("profile dimensions do not match the environment");
  }
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  const std::size_t messages = profile.n_messages();
  VerificationReport report;

  // Sender: each message sent in state w must attain max_m sum_a rho(a|m) u_S(a,w).
  std::vector<Rational> value(messages);
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t best = 0;
    for (std::size_t m = 0; m < messages; ++m) {
      value[m] = 0;
      for (std::size_t a = 0; a < k; ++a) value[m] += profile.rho()(m, a) * env.u_sender(w, a);
      if (value[m] > value[best]) best = m;
    }
    for (std::size_t m = 0; m < messages; ++m) {
      if (profile.sigma()(w, m) > 0 && value[m] < value[best]) {
        report.is_S_BR = false;
        report.violations.push_back({"sender", w, best, value[best] - value[m]});
      }
    }
  }

  // Receiver: on-path messages only.
  for (std::size_t m = 0; m < messages; ++m) {
    if (profile.message_probability(env.prior(), m) == 0) continue;
    const Belief posterior = induced_posterior(env, profile, m);
    std::vector<Rational> r(k);
    std::size_t best = 0;
    for (std::size_t a = 0; a < k; ++a) {
      r[a] = expected_receiver_utility(env, posterior, a);
      if (r[a] > r[best]) best = a;
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (profile.rho()(m, a) > 0 && r[a] < r[best]) {
        report.is_R_BR = false;
        report.violations.push_back({"receiver", m, best, r[best] - r[a]});
      }
    }
  }

  const PayoffPair payoff = evaluate_profile(env, profile);
  report.payoff_S = payoff.sender;
  report.payoff_R = payoff.receiver;
  return report;
}

Profile requesting_compliant(const Environment& env) {
  const SenderRegularity regularity = sender_regular(env);
  if (!regularity.regular) {
    throw ValidationError("requesting strategy requires a regular Sender utility");
  }
  const std::size_t k = env.n_actions();
  RationalMatrix sigma(env.n_states(), k), rho(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    rho(i, i) = 1;
    for (int w : regularity.ideal_sets[i]) sigma(static_cast<std::size_t>(w), i) = 1;
  }
  return Profile(std::move(sigma), std::move(rho));
}

}  // namespace persuade

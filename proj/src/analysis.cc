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

#include "persuade/analysis.hpp"

#include <bit>
#include <stdexcept>

#include "persuade/cells.hpp"
#include "persuade/error.hpp"
#include "persuade/generators.hpp"
#include "persuade/random.hpp"

namespace persuade {
namespace {

void require(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("payoff ordering violated: ") + what);
}

}  // namespace

AnalysisReport analyze(const Environment& env, const std::vector<NamedProfile>& witnesses,
                       const Caps& caps) {
  AnalysisReport r;
  r.persuasion = persuasion_payoff(env);
  PartitionOptions options;
  options.caps = caps;
  r.partitional = partitional_persuasion_payoff(env, options);
  r.cheap_talk_witness = best_pure_cheap_talk(env, caps);
  r.genericity = genericity_report(env, caps);
  r.receiver_indifference = receiver_indifference_diagnostic(env, r.persuasion);

  Payoffs& p = r.payoffs;
  p.persuasion = r.persuasion.value;
  p.partitional_persuasion = r.partitional.value;
  p.best_pure_cheap_talk = r.cheap_talk_witness.payoff_S;
  p.babbling = babbling_payoff(env);
  p.sender_ideal = sender_ideal_payoff(env);
  for (const NamedProfile& w : witnesses) {
    WitnessOutcome outcome{w.name, verify_profile(env, w.profile)};
    if (outcome.report.is_equilibrium() &&
        (!p.verified_cheap_talk || outcome.report.payoff_S > *p.verified_cheap_talk)) {
      p.verified_cheap_talk = outcome.report.payoff_S;
    }
    r.witnesses.push_back(std::move(outcome));
  }

  require(p.babbling <= p.best_pure_cheap_talk, "babbling <= best pure cheap talk");
  require(p.best_pure_cheap_talk <= p.persuasion, "best pure cheap talk <= persuasion");
  require(p.babbling <= p.partitional_persuasion, "babbling <= partitional");
  require(p.partitional_persuasion <= p.persuasion, "partitional <= persuasion");
  require(p.persuasion <= p.sender_ideal, "persuasion <= Sender ideal");
  if (p.verified_cheap_talk) {
    require(*p.verified_cheap_talk <= p.persuasion, "verified cheap talk <= persuasion");
  }

  r.delta_R = p.persuasion - p.partitional_persuasion;
  Rational cheap_talk = p.best_pure_cheap_talk;
  if (p.verified_cheap_talk && *p.verified_cheap_talk > cheap_talk) {
    cheap_talk = *p.verified_cheap_talk;
  }
  r.delta_C_upper = p.persuasion - cheap_talk;

  Verdicts& v = r.verdicts;
  v.generic = r.genericity.generic();
  v.randomization_valuable = r.delta_R > 0;
  if (v.generic) {
    v.commitment_valuable = r.delta_R > 0;
    v.cheap_talk_agrees = (r.delta_R == 0) == (p.best_pure_cheap_talk == p.persuasion);
  } else if (r.delta_C_upper == 0) {
    v.commitment_valuable = false;
  }
  return r;
}

SuiteResult theorem_suite(SuiteKind kind, std::uint64_t n_draws, std::size_t n_states,
                          std::size_t n_actions, std::uint64_t seed, const Caps& caps) {
  SuiteResult result;
  for (std::uint64_t i = 0; i < n_draws; ++i) {
    Rng rng = Rng::stream(seed, i);
    const Environment env = kind == SuiteKind::kUniform
                                ? sample_uniform_env(n_states, n_actions, rng)
                                : make_transparent_random(n_states, n_actions, rng);
    ++result.draws;
    auto fail = [&](const char* check) { result.failures.push_back({i, check, env}); };

    AnalysisReport r;
    try {
      r = analyze(env, {}, caps);
    } catch (const std::logic_error& e) {
      fail(e.what());
      continue;
    }
    const Payoffs& p = r.payoffs;
    const bool no_value = p.persuasion == p.partitional_persuasion;

    if (kind == SuiteKind::kTransparent) {
      if (!r.genericity.transparent.transparent ||
          !r.genericity.transparent.no_duplicate_actions.value_or(false)) {
        ++result.skipped;
        continue;
      }
      ++result.checked;
      result.no_value += no_value ? 1 : 0;
      if (no_value != (p.babbling == p.persuasion)) {
        fail("no value of randomization iff babbling attains persuasion");
      }
      continue;
    }

    if (!r.verdicts.generic) {
      ++result.skipped;
      continue;
    }
    ++result.checked;
    result.no_value += no_value ? 1 : 0;
    const bool cheap_talk_attains = p.best_pure_cheap_talk == p.persuasion;
    if (no_value != cheap_talk_attains) {
      fail("no value of randomization iff pure cheap talk attains persuasion");
    }
    if (cheap_talk_attains) {
      const Profile profile = to_profile(env, r.cheap_talk_witness);
      if (!profile.is_partitional() || !profile.is_pure_rho() ||
          !verify_profile(env, profile).is_equilibrium()) {
        fail("cheap-talk witness is partitional, pure and an equilibrium");
      }
    }
    if (no_value) {
      const CellTable cells(env, caps);
      for (const std::vector<int>& cell : r.partitional.cells) {
        if (std::popcount(cells.receiver_argmax(state_mask(cell))) != 1) {
          fail("optimal partition has unique Receiver responses");
          break;
        }
      }
      if (p.best_pure_cheap_talk != p.partitional_persuasion) {
        fail("no value of randomization implies a pure equilibrium attains partitional");
      }
    }
  }
  return result;
}

Rational d2_indifference_belief(const Environment& env, const Rational& k,
                                IndifferenceFormula formula) {
  const Environment base = make_example2(k);
  if (env.n_states() != 2 || env.n_actions() != 3) {
    throw ValidationError("the witness needs two states and three actions");
  }
  auto r = [&](int i, int j) {
    const auto w = static_cast<std::size_t>(i - 1);
    const auto a = static_cast<std::size_t>(j - 1);
    return Rational(env.u_receiver(w, a) - base.u_receiver(w, a));
  };
  if (formula == IndifferenceFormula::kPrinted) {
    return Rational(1) / (3 + r(1, 2) + r(2, 2) - r(1, 2) - r(2, 1));
  }
  return (1 + r(1, 1) - r(1, 2)) / (3 + r(1, 1) - r(1, 2) - r(2, 1) + r(2, 2));
}

Profile d2_witness_profile(const Environment& env, const Rational& k,
                           IndifferenceFormula formula) {
  const Environment base = make_example2(k);
  const Rational mu = d2_indifference_belief(env, k, formula);
  auto s = [&](int i, int j) {
    const auto w = static_cast<std::size_t>(i - 1);
    const auto a = static_cast<std::size_t>(j - 1);
    return Rational(env.u_sender(w, a) - base.u_sender(w, a));
  };
  const Rational p = (2 * k + s(2, 3) - s(2, 2)) / (4 * k + s(2, 1) - s(2, 2));
  if (mu <= 0 || 2 * mu > 1 || p < 0 || p > 1) {
    throw ValidationError("perturbation too large for the witness construction");
  }
  const std::size_t messages = default_message_count(env);
  RationalMatrix sigma(2, messages), rho(messages, 3);
  sigma(0, 0) = 1;
  sigma(1, 0) = mu / (1 - mu);
  sigma(1, 1) = (1 - 2 * mu) / (1 - mu);
  rho(0, 0) = p;
  rho(0, 1) = 1 - p;
  for (std::size_t m = 1; m < messages; ++m) rho(m, 2) = 1;
  return Profile(std::move(sigma), std::move(rho));
}

}  // namespace persuade

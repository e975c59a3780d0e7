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

#ifndef PERSUADE_ANALYSIS_HPP_
#define PERSUADE_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/cheaptalk.hpp"
#include "persuade/core.hpp"
#include "persuade/genericity.hpp"
#include "persuade/persuasion.hpp"

namespace persuade {

struct NamedProfile {
  std::string name;
  Profile profile;
};

struct WitnessOutcome {
  std::string name;
  VerificationReport report;
};

struct Payoffs {
  Rational persuasion;
  Rational partitional_persuasion;
  Rational best_pure_cheap_talk;
  Rational babbling;
  Rational sender_ideal;
  // Best Sender payoff among supplied profiles that pass verification.
  std::optional<Rational> verified_cheap_talk;
};

struct Verdicts {
  // Both genericity predicates hold.
  bool generic = false;
  // delta_R > 0.
  bool randomization_valuable = false;
  // Generic: delta_R > 0. Otherwise decided only when delta_C_upper is 0;
  // unset when the computed bounds cannot settle it.
  std::optional<bool> commitment_valuable;
  // Generic only: delta_R == 0 iff best pure cheap talk == persuasion.
  std::optional<bool> cheap_talk_agrees;
};

struct AnalysisReport {
  Payoffs payoffs;
  Rational delta_R;
  Rational delta_C_upper;
  GenericityReport genericity;
  IndifferenceDiagnostic receiver_indifference;
  PersuasionSolution persuasion;
  PartitionalSolution partitional;
  PureEquilibrium cheap_talk_witness;
  std::vector<WitnessOutcome> witnesses;
  Verdicts verdicts;
};

// Runs every solver. Throws std::logic_error if a payoff ordering that must
// hold on every environment fails.
AnalysisReport analyze(const Environment& env, const std::vector<NamedProfile>& witnesses = {},
                       const Caps& caps = Caps::from_environment());

enum class SuiteKind { kUniform, kTransparent };

struct SuiteFailure {
  std::uint64_t draw = 0;
  std::string check;
  Environment env;
};

struct SuiteResult {
  std::uint64_t draws = 0;
  // Draws on which the checks ran (uniform: both genericity predicates hold).
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  // Draws where persuasion == partitional persuasion.
  std::uint64_t no_value = 0;
  std::vector<SuiteFailure> failures;
};

// Uniform draws: on generic environments, delta_R == 0 iff a pure cheap-talk
// equilibrium attains persuasion; when it does, its witness is partitional,
// pure and verifies; delta_R == 0 implies the optimal partition has unique
// Receiver responses. Transparent draws: delta_R == 0 iff babbling attains
// persuasion. Payoff orderings are checked on every draw.
SuiteResult theorem_suite(SuiteKind kind, std::uint64_t n_draws, std::size_t n_states,
                          std::size_t n_actions, std::uint64_t seed,
                          const Caps& caps = Caps::from_environment());

// Posterior P(w2) at which Receiver is indifferent between a1 and a2 in the
// perturbed two-state, three-action family.
enum class IndifferenceFormula {
  // 1 / (3 + r12 + r22 - r12 - r21), taken literally.
  kPrinted,
  // (1 + r11 - r12) / (3 + r11 - r12 - r21 + r22), from the indifference
  // condition.
  kDerived,
};

Rational d2_indifference_belief(const Environment& env, const Rational& k,
                                IndifferenceFormula formula);

// Two on-path messages: w1 sends m1; w2 sends m1 with probability
// mu/(1-mu), else m2. m1 mixes a1 (probability p) and a2; m2 and every unused
// message induce a3. p = (2k + s23 - s22) / (4k + s21 - s22).
Profile d2_witness_profile(const Environment& env, const Rational& k,
                           IndifferenceFormula formula = IndifferenceFormula::kDerived);

}  // namespace persuade

#endif  // PERSUADE_ANALYSIS_HPP_

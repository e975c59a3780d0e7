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

#ifndef PERSUADE_SHARES_HPP_
#define PERSUADE_SHARES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "persuade/caps.hpp"
#include "persuade/core.hpp"

namespace persuade {

enum class ShareProperty {
  kFelicity,
  kFelicityGivenNonempty,
  kJointInclusivity,
  kPerActionInclusivity,
  kCommitmentNoValue,
  kRandomizationNoValue,
};

std::string to_string(ShareProperty property);
// Throws ValidationError on an unknown name.
ShareProperty parse_share_property(std::string_view name);

struct ShareOptions {
  // Empty means uniform.
  std::vector<Rational> prior;
  unsigned threads = 1;
  // Every `spot_check_stride`-th sample also runs both genericity predicates.
  std::uint64_t spot_check_stride = 100;
  Caps caps = Caps::from_environment();
};

// Per-sample consistency checks run alongside the estimate.
struct ShareAudit {
  // Draws rejected for a non-regular Sender utility.
  std::uint64_t resampled_irregular = 0;
  // Draws rejected for an empty Sender-ideal cell (felicity_given_nonempty).
  std::uint64_t resampled_empty = 0;
  // Samples where commitment_no_value was decided.
  std::uint64_t commitment_checked = 0;
  // Felicitous but commitment valuable.
  std::uint64_t felicity_dominance_violations = 0;
  std::uint64_t spot_checks = 0;
  std::uint64_t spot_check_nongeneric = 0;
  // Jointly inclusive, no value of commitment, generic, yet not felicitous.
  std::uint64_t inclusivity_violations = 0;

  friend bool operator==(const ShareAudit&, const ShareAudit&) = default;
};

struct ShareEstimate {
  ShareProperty property = ShareProperty::kFelicity;
  std::size_t n_states = 0;
  std::size_t n_actions = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  Rational point;
  double wilson_lo = 0;
  double wilson_hi = 0;
  std::uint64_t seed = 0;
  ShareAudit audit;

  // Binomial standard error sqrt(p (1 - p) / n).
  double standard_error() const;
};

inline constexpr double kWilsonZ99 = 2.5758293035489;

struct Interval {
  double lo;
  double hi;
};

Interval wilson_interval(std::uint64_t hits, std::uint64_t samples, double z = kWilsonZ99);

// Sample i draws from Rng::stream(seed, i), so the result does not depend on
// the thread count.
ShareEstimate estimate_share(ShareProperty property, std::size_t n_states,
                             std::size_t n_actions, std::uint64_t n_samples,
                             std::uint64_t seed, const ShareOptions& options = {});

std::vector<ShareEstimate> share_sweep(ShareProperty property, std::size_t n_actions,
                                       const std::vector<std::size_t>& states_list,
                                       std::uint64_t n_samples, std::uint64_t seed,
                                       const ShareOptions& options = {});

std::string share_csv_header();
std::string share_csv_row(const ShareEstimate& estimate);
std::string share_csv(const std::vector<ShareEstimate>& estimates);

// Exact no-value-of-commitment decision: persuasion == partitional persuasion.
bool commitment_has_no_value(const Environment& env, const Caps& caps = Caps::from_environment());

}  // namespace persuade

#endif  // PERSUADE_SHARES_HPP_

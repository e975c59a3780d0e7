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

#include "persuade/shares.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "persuade/error.hpp"
#include "persuade/generators.hpp"
#include "persuade/genericity.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/random.hpp"

namespace persuade {
namespace {

constexpr std::pair<ShareProperty, std::string_view> kNames[] = {
    {ShareProperty::kFelicity, "felicity"},
    {ShareProperty::kFelicityGivenNonempty, "felicity_given_nonempty"},
    {ShareProperty::kJointInclusivity, "joint_inclusivity"},
    {ShareProperty::kPerActionInclusivity, "per_action_inclusivity"},
    {ShareProperty::kCommitmentNoValue, "commitment_no_value"},
    {ShareProperty::kRandomizationNoValue, "randomization_no_value"},
};

struct SampleResult {
  bool hit = false;
  ShareAudit audit;
};

SampleResult run_sample(ShareProperty property, std::size_t n_states, std::size_t n_actions,
                        std::uint64_t seed, std::uint64_t index,
                        const ShareOptions& options) {
  SampleResult result;
  ShareAudit& audit = result.audit;
  Rng rng = Rng::stream(seed, index);
  Environment env;
  SenderRegularity regularity;
  while (true) {
    env = sample_uniform_env(n_states, n_actions, rng, options.prior);
    regularity = sender_regular(env);
    if (!regularity.regular) {
      ++audit.resampled_irregular;
      continue;
    }
    if (property == ShareProperty::kFelicityGivenNonempty &&
        std::any_of(regularity.ideal_sets.begin(), regularity.ideal_sets.end(),
                    [](const std::vector<int>& cell) { return cell.empty(); })) {
      ++audit.resampled_empty;
      continue;
    }
    break;
  }

  const bool felicity = felicitous(env).holds;
  const bool inclusive = jointly_inclusive(env).holds;
  const bool no_value = commitment_has_no_value(env, options.caps);
  ++audit.commitment_checked;
  if (felicity && !no_value) ++audit.felicity_dominance_violations;
  if (options.spot_check_stride != 0 && index % options.spot_check_stride == 0) {
    ++audit.spot_checks;
    const bool generic = partitional_unique_response(env, options.caps).holds &&
                         scant_indifferences(env, options.caps).holds;
    if (!generic) ++audit.spot_check_nongeneric;
    if (generic && inclusive && no_value && !felicity) ++audit.inclusivity_violations;
  }

  switch (property) {
    case ShareProperty::kFelicity:
    case ShareProperty::kFelicityGivenNonempty:
      result.hit = felicity;
      break;
    case ShareProperty::kJointInclusivity:
      result.hit = inclusive;
      break;
    case ShareProperty::kPerActionInclusivity:
      result.hit = jointly_ideal_in_some_state(env, 0);
      break;
    case ShareProperty::kCommitmentNoValue:
    case ShareProperty::kRandomizationNoValue:
      result.hit = no_value;
      break;
  }
  return result;
}

void accumulate(ShareAudit& total, const ShareAudit& a) {
  total.resampled_irregular += a.resampled_irregular;
  total.resampled_empty += a.resampled_empty;
  total.commitment_checked += a.commitment_checked;
  total.felicity_dominance_violations += a.felicity_dominance_violations;
  total.spot_checks += a.spot_checks;
  total.spot_check_nongeneric += a.spot_check_nongeneric;
  total.inclusivity_violations += a.inclusivity_violations;
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

}  // namespace

std::string to_string(ShareProperty property) {
  for (const auto& [p, name] : kNames) {
    if (p == property) return std::string(name);
  }
  return "unknown";
}

ShareProperty parse_share_property(std::string_view name) {
  for (const auto& [p, n] : kNames) {
    if (n == name) return p;
  }
  throw ValidationError("unknown share property '" + std::string(name) + "'");
}

double ShareEstimate::standard_error() const {
  if (samples == 0) return 0;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return std::sqrt(p * (1 - p) / static_cast<double>(samples));
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t samples, double z) {
  if (samples == 0) throw ValidationError("Wilson interval needs at least one sample");
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

bool commitment_has_no_value(const Environment& env, const Caps& caps) {
  PartitionOptions options;
  options.method = PartitionMethod::kSubsetDp;
  options.caps = caps;
  return persuasion_payoff(env).value == partitional_persuasion_payoff(env, options).value;
}

ShareEstimate estimate_share(ShareProperty property, std::size_t n_states,
                             std::size_t n_actions, std::uint64_t n_samples,
                             std::uint64_t seed, const ShareOptions& options) {
  if (n_samples == 0) throw ValidationError("sample count must be positive");
  if (n_states == 0 || n_actions == 0) throw ValidationError("sizes must be positive");
  check_cap(std::uint64_t{1} << std::min<std::size_t>(n_states, 63), options.caps.subsets,
            "state subsets");
  if (!options.prior.empty() && options.prior.size() != n_states) {
    throw ValidationError("prior length differs from the state count");
  }

  std::vector<SampleResult> results(n_samples);
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, n_samples));
  auto work = [&](unsigned t) {
    const std::uint64_t begin = n_samples * t / threads;
    const std::uint64_t end = n_samples * (t + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) {
      results[i] = run_sample(property, n_states, n_actions, seed, i, options);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ShareEstimate est;
  est.property = property;
  est.n_states = n_states;
  est.n_actions = n_actions;
  est.samples = n_samples;
  est.seed = seed;
  for (const SampleResult& r : results) {
    est.hits += r.hit ? 1 : 0;
    accumulate(est.audit, r.audit);
  }
  est.point = Rational(static_cast<unsigned long long>(est.hits),
                       static_cast<unsigned long long>(n_samples));
  const Interval ci = wilson_interval(est.hits, est.samples);
  est.wilson_lo = ci.lo;
  est.wilson_hi = ci.hi;
  return est;
}

std::vector<ShareEstimate> share_sweep(ShareProperty property, std::size_t n_actions,
                                       const std::vector<std::size_t>& states_list,
                                       std::uint64_t n_samples, std::uint64_t seed,
                                       const ShareOptions& options) {
  if (states_list.empty()) throw ValidationError("state list is empty");
  std::vector<ShareEstimate> out;
  for (std::size_t n : states_list) {
    out.push_back(estimate_share(property, n, n_actions, n_samples, seed, options));
  }
  return out;
}

std::string share_csv_header() {
  return "property,n_states,n_actions,samples,hits,point,wilson_lo,wilson_hi,seed,point_fraction\n";
}

std::string share_csv_row(const ShareEstimate& e) {
  return to_string(e.property) + "," + std::to_string(e.n_states) + "," +
         std::to_string(e.n_actions) + "," + std::to_string(e.samples) + "," +
         std::to_string(e.hits) + "," + to_decimal(e.point, 12) + "," + fixed(e.wilson_lo) +
         "," + fixed(e.wilson_hi) + "," + std::to_string(e.seed) + "," + to_string(e.point) +
         "\n";
}

std::string share_csv(const std::vector<ShareEstimate>& estimates) {
  std::string out = share_csv_header();
  for (const ShareEstimate& e : estimates) out += share_csv_row(e);
  return out;
}

}  // namespace persuade

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

#include "persuade/persuasion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "persuade/cells.hpp"
#include "persuade/combinatorics.hpp"
#include "persuade/error.hpp"

namespace persuade {

exactlp::LinearProgram persuasion_lp(const Environment& env) {
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  exactlp::LinearProgram lp(n * k);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t a = 0; a < k; ++a) lp.objective[w * k + a] = env.u_sender(w, a);
  }
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Rational> row(n * k);
    for (std::size_t a = 0; a < k; ++a) row[w * k + a] = 1;
    lp.add(std::move(row), exactlp::Relation::kEqual, env.prior(w));
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      std::vector<Rational> row(n * k);
      for (std::size_t w = 0; w < n; ++w) {
        row[w * k + a] = env.u_receiver(w, a) - env.u_receiver(w, b);
      }
      lp.add(std::move(row), exactlp::Relation::kGreaterEqual, 0);
    }
  }
  return lp;
}

PersuasionSolution persuasion_payoff(const Environment& env) {
  const exactlp::LpSolution lp_solution = exactlp::solve(persuasion_lp(env));
  if (lp_solution.status != exactlp::Status::kOptimal) {
    // Babbling on a prior-optimal action is always feasible and the feasible
    // set is bounded.
    throw std::logic_error("persuasion program not solved to optimality");
  }
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  PersuasionSolution sol;
  sol.value = lp_solution.value;
  sol.joint = RationalMatrix(n, k);
  sol.outcome.pi = RationalMatrix(n, k);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t a = 0; a < k; ++a) {
      sol.joint(w, a) = lp_solution.point[w * k + a];
      sol.outcome.pi(w, a) = sol.joint(w, a) / env.prior(w);
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    bool used = false;
    for (std::size_t w = 0; w < n && !used; ++w) used = sol.joint(w, a) > 0;
    if (!used) continue;
    sol.recommended_actions.push_back(static_cast<int>(a));
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      Rational slack = 0;
      for (std::size_t w = 0; w < n; ++w) {
        slack += sol.joint(w, a) * (env.u_receiver(w, a) - env.u_receiver(w, b));
      }
      if (slack < 0) throw std::logic_error("obedience violated at LP optimum");
      if (slack == 0) sol.binding_obedience.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return sol;
}

Profile recommendation_profile(const Environment& env, const PersuasionSolution& sol) {
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  const std::size_t messages = default_message_count(env);
  RationalMatrix sigma(n, messages), rho(messages, k);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t a = 0; a < k; ++a) sigma(w, a) = sol.outcome.pi(w, a);
  }
  const std::size_t fallback = static_cast<std::size_t>(sol.recommended_actions.front());
  for (std::size_t m = 0; m < messages; ++m) {
    bool on_path = false;
    for (int a : sol.recommended_actions) on_path = on_path || static_cast<std::size_t>(a) == m;
    rho(m, on_path ? m : fallback) = 1;
  }
  return Profile(std::move(sigma), std::move(rho));
}

namespace {

// Best partition by dynamic programming over subsets; cells are built by
// always placing the lowest remaining state, so each partition is reached once.
template <typename Value>
std::vector<std::uint32_t> best_partition_dp(const CellTable& cells,
                                             const std::vector<Value>& value) {
  const std::uint32_t full = (std::uint32_t{1} << cells.n_states()) - 1;
  std::vector<Value> best(std::size_t{full} + 1);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  for (std::uint32_t set = 1; set <= full; ++set) {
    const std::uint32_t low = set & (~set + 1);
    const std::uint32_t rest = set ^ low;
    // Enumerate sub ⊆ rest; the cell is sub | low.
    std::uint32_t sub = rest;
    bool first = true;
    while (true) {
      const std::uint32_t cell = sub | low;
      Value total = value[cell];
      total += best[set ^ cell];
      if (first || total > best[set]) {
        best[set] = total;
        choice[set] = cell;
        first = false;
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t set = full; set != 0; set ^= choice[set]) masks.push_back(choice[set]);
  return masks;
}

std::vector<std::uint32_t> best_partition_dp(const CellTable& cells) {
  const std::size_t n_cells = std::size_t{1} << cells.n_states();
  // Scaled values are sums of at most 31 numerators; use 128-bit arithmetic
  // when every numerator leaves ample headroom.
  bool fits = true;
  for (std::size_t c = 1; c < n_cells && fits; ++c) {
    const Integer& v = cells.sender_value_scaled(static_cast<std::uint32_t>(c));
    fits = v == 0 || boost::multiprecision::msb(boost::multiprecision::abs(v)) < 100;
  }
  if (fits) {
    std::vector<__int128> value(n_cells, 0);
    for (std::size_t c = 1; c < n_cells; ++c) {
      const Integer& v = cells.sender_value_scaled(static_cast<std::uint32_t>(c));
      const Integer mag = boost::multiprecision::abs(v);
      const auto lo = static_cast<unsigned long long>(mag & Integer(~0ULL));
      const auto hi = static_cast<unsigned long long>(mag >> 64);
      __int128 x = (static_cast<__int128>(hi) << 64) | lo;
      value[c] = v < 0 ? -x : x;
    }
    return best_partition_dp(cells, value);
  }
  std::vector<Integer> value(n_cells);
  for (std::size_t c = 1; c < n_cells; ++c) {
    value[c] = cells.sender_value_scaled(static_cast<std::uint32_t>(c));
  }
  return best_partition_dp(cells, value);
}

PartitionalSolution to_solution(const CellTable& cells, std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  PartitionalSolution sol;
  Integer total = 0;
  for (std::uint32_t mask : masks) {
    total += cells.sender_value_scaled(mask);
    sol.cells.push_back(mask_states(mask));
    sol.actions.push_back(cells.sender_preferred_response(mask));
  }
  sol.value = Rational(total, cells.sender_scale());
  return sol;
}

}  // namespace

PartitionalSolution partitional_persuasion_payoff(const Environment& env,
                                                  const PartitionOptions& options) {
  const std::size_t n = env.n_states();
  if (options.method == PartitionMethod::kSubsetDp) {
    const CellTable cells(env, options.caps);
    return to_solution(cells, best_partition_dp(cells));
  }
  check_cap(count_set_partitions(n, options.max_cells), options.caps.set_partitions,
            "set partitions");
  const CellTable cells(env, options.caps);

  Integer best_value;
  std::vector<std::uint32_t> best_masks;
  Integer total;
  for_each_set_partition(n, options.max_cells,
                         [&](std::span<const int>, std::size_t,
                             std::span<const std::uint32_t> masks) {
                           total = 0;
                           for (std::uint32_t mask : masks) total += cells.sender_value_scaled(mask);
                           if (best_masks.empty() || total > best_value) {
                             best_value = total;
                             best_masks.assign(masks.begin(), masks.end());
                           }
                         });

  return to_solution(cells, std::move(best_masks));
}

int babbling_action(const Environment& env) {
  const Belief prior{env.prior()};
  int best = -1;
  Rational best_value;
  for (int a : receiver_best_responses(env, prior)) {
    Rational v = expected_sender_utility(env, prior, static_cast<std::size_t>(a));
    if (best < 0 || v > best_value) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

Rational babbling_payoff(const Environment& env) {
  return expected_sender_utility(env, Belief{env.prior()},
                                 static_cast<std::size_t>(babbling_action(env)));
}

Rational sender_ideal_payoff(const Environment& env) {
  Rational total = 0;
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    Rational best = env.u_sender(w, 0);
    for (std::size_t a = 1; a < env.n_actions(); ++a) {
      if (env.u_sender(w, a) > best) best = env.u_sender(w, a);
    }
    total += env.prior(w) * best;
  }
  return total;
}

IndifferenceDiagnostic receiver_indifference_diagnostic(const Environment& env,
                                                        const PersuasionSolution& sol) {
  IndifferenceDiagnostic diag;
  for (int a : sol.recommended_actions) {
    Rational mass = 0;
    for (std::size_t w = 0; w < env.n_states(); ++w) mass += sol.joint(w, a);
    Belief posterior;
    for (std::size_t w = 0; w < env.n_states(); ++w) {
      posterior.probabilities.push_back(sol.joint(w, a) / mass);
    }
    RecommendationCheck check{a, posterior, receiver_best_responses(env, posterior)};
    diag.flag = diag.flag || check.receiver_argmax.size() >= 2;
    diag.recommendations.push_back(std::move(check));
  }
  return diag;
}

}  // namespace persuade

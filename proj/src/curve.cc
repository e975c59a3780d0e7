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

#include "persuade/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "persuade/cells.hpp"
#include "persuade/cheaptalk.hpp"
#include "persuade/combinatorics.hpp"
#include "persuade/error.hpp"
#include "persuade/exactlp.hpp"
#include "persuade/genericity.hpp"

namespace persuade {
namespace {

bool is_permutation_of(const std::vector<int>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int i : order) {
    if (i < 0 || static_cast<std::size_t>(i) >= n || seen[static_cast<std::size_t>(i)]) {
      return false;
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

// Cross difference over positions (p, p') x (q, q') of the orders.
Rational cross(const RationalMatrix& u, const Orders& o, std::size_t p, std::size_t pp,
               std::size_t q, std::size_t qq) {
  const auto a = static_cast<std::size_t>(o.actions[p]);
  const auto ap = static_cast<std::size_t>(o.actions[pp]);
  const auto w = static_cast<std::size_t>(o.states[q]);
  const auto wp = static_cast<std::size_t>(o.states[qq]);
  return (u(wp, ap) - u(wp, a)) - (u(w, ap) - u(w, a));
}

SupermodularityResult check_supermodular(const RationalMatrix& u, const Orders& o,
                                         bool adjacent_only) {
  SupermodularityResult result;
  const std::size_t n = o.states.size();
  const std::size_t m = o.actions.size();
  for (std::size_t p = 0; p + 1 < m; ++p) {
    for (std::size_t pp = p + 1; pp < (adjacent_only ? p + 2 : m); ++pp) {
      for (std::size_t q = 0; q + 1 < n; ++q) {
        for (std::size_t qq = q + 1; qq < (adjacent_only ? q + 2 : n); ++qq) {
          if (cross(u, o, p, pp, q, qq) > 0) continue;
          result.holds = false;
          result.a = o.actions[p];
          result.a_prime = o.actions[pp];
          result.w = o.states[q];
          result.w_prime = o.states[qq];
          return result;
        }
      }
    }
  }
  return result;
}

void require_supermodular(const Environment& env, const Orders& orders) {
  validate_orders(env, orders);
  const SupermodularityResult sm = is_strictly_supermodular(env.u_sender(), orders);
  if (!sm.holds) {
    throw ValidationError("Sender utility is not strictly supermodular in the given orders");
  }
}

}  // namespace

Orders natural_orders(const Environment& env) {
  Orders o{std::vector<int>(env.n_states()), std::vector<int>(env.n_actions())};
  std::iota(o.states.begin(), o.states.end(), 0);
  std::iota(o.actions.begin(), o.actions.end(), 0);
  return o;
}

void validate_orders(const Environment& env, const Orders& orders) {
  if (!is_permutation_of(orders.states, env.n_states()) ||
      !is_permutation_of(orders.actions, env.n_actions())) {
    throw ValidationError("orders must be permutations of the state and action indices");
  }
}

SupermodularityResult is_strictly_supermodular(const RationalMatrix& u, const Orders& orders) {
  return check_supermodular(u, orders, true);
}

SupermodularityResult is_strictly_supermodular_full(const RationalMatrix& u,
                                                    const Orders& orders) {
  return check_supermodular(u, orders, false);
}

std::uint64_t staircase_count(std::size_t n_states, std::size_t n_actions) {
  return binomial(n_actions + 2 * n_states - 1, 2 * n_states);
}

bool is_comonotone(const RationalMatrix& pi, const Orders& orders) {
  const std::size_t n = orders.states.size();
  const std::size_t m = orders.actions.size();
  auto at = [&](std::size_t q, std::size_t p) {
    return pi(static_cast<std::size_t>(orders.states[q]), static_cast<std::size_t>(orders.actions[p]));
  };
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t pp = p + 1; pp < m; ++pp) {
      for (std::size_t q = 0; q < n; ++q) {
        if (at(q, p) <= 0) continue;
        for (std::size_t qq = 0; qq < q; ++qq) {
          if (at(qq, pp) > 0) return false;
        }
      }
    }
  }
  return true;
}

bool is_obedient(const Environment& env, const RationalMatrix& pi) {
  for (std::size_t a = 0; a < env.n_actions(); ++a) {
    for (std::size_t b = 0; b < env.n_actions(); ++b) {
      if (a == b) continue;
      Rational sum = 0;
      for (std::size_t w = 0; w < env.n_states(); ++w) {
        sum += pi(w, a) * env.prior(w) * (env.u_receiver(w, a) - env.u_receiver(w, b));
      }
      if (sum < 0) return false;
    }
  }
  return true;
}

CurveSolution curve_payoff(const Environment& env, const Orders& orders, const Caps& caps) {
  require_supermodular(env, orders);
  const std::size_t n = env.n_states();
  const std::size_t m = env.n_actions();
  check_cap(staircase_count(n, m), caps.staircases, "staircases");

  CurveSolution best;
  bool found = false;
  // var[(q, p)]: LP column of cell (state position q, action position p).
  std::vector<int> var(n * m);
  for_each_staircase(n, m, [&](const Staircase& s) {
    ++best.staircases;
    std::size_t n_vars = 0;
    std::fill(var.begin(), var.end(), -1);
    for (std::size_t q = 0; q < n; ++q) {
      for (int p = s.lo[q]; p <= s.hi[q]; ++p) var[q * m + static_cast<std::size_t>(p)] = static_cast<int>(n_vars++);
    }
    exactlp::LinearProgram lp(n_vars);
    for (std::size_t q = 0; q < n; ++q) {
      const auto w = static_cast<std::size_t>(orders.states[q]);
      std::vector<Rational> row(n_vars);
      for (int p = s.lo[q]; p <= s.hi[q]; ++p) {
        const auto col = static_cast<std::size_t>(var[q * m + static_cast<std::size_t>(p)]);
        row[col] = 1;
        lp.objective[col] = env.prior(w) * env.u_sender(w, static_cast<std::size_t>(orders.actions[static_cast<std::size_t>(p)]));
      }
      lp.add(std::move(row), exactlp::Relation::kEqual, 1);
    }
    for (std::size_t p = 0; p < m; ++p) {
      const auto a = static_cast<std::size_t>(orders.actions[p]);
      bool used = false;
      for (std::size_t q = 0; q < n; ++q) used = used || var[q * m + p] >= 0;
      if (!used) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        std::vector<Rational> row(n_vars);
        for (std::size_t q = 0; q < n; ++q) {
          if (var[q * m + p] < 0) continue;
          const auto w = static_cast<std::size_t>(orders.states[q]);
          row[static_cast<std::size_t>(var[q * m + p])] =
              env.prior(w) * (env.u_receiver(w, a) - env.u_receiver(w, b));
        }
        lp.add(std::move(row), exactlp::Relation::kGreaterEqual, 0);
      }
    }
    const exactlp::LpSolution sol = exactlp::solve(lp);
    if (sol.status != exactlp::Status::kOptimal) return;
    ++best.feasible;
    if (found && sol.value <= best.value) return;
    found = true;
    best.value = sol.value;
    best.envelope = s;
    best.outcome.pi = RationalMatrix(n, m);
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = 0; p < m; ++p) {
        if (var[q * m + p] < 0) continue;
        best.outcome.pi(static_cast<std::size_t>(orders.states[q]),
                        static_cast<std::size_t>(orders.actions[p])) =
            sol.point[static_cast<std::size_t>(var[q * m + p])];
      }
    }
  });
  if (!found) throw std::logic_error("no feasible staircase; babbling should be feasible");
  if (!is_comonotone(best.outcome.pi, orders) || !is_obedient(env, best.outcome.pi) ||
      !is_row_stochastic(best.outcome.pi)) {
    throw std::logic_error("curve outcome failed its recheck");
  }
  return best;
}

CurvePartitionalSolution curve_partitional_payoff(const Environment& env, const Orders& orders,
                                                  const Caps& caps) {
  require_supermodular(env, orders);
  const std::size_t n = env.n_states();
  const std::size_t m = env.n_actions();
  check_cap(binomial(m + n - 1, n), caps.pure_maps, "monotone maps");
  const CellTable cells(env, caps);

  CurvePartitionalSolution best;
  bool found = false;
  // Non-decreasing position sequences, lexicographic.
  std::vector<int> seq(n, 0);
  std::vector<std::uint32_t> cell_of(m);
  std::vector<int> g(n);
  while (true) {
    std::fill(cell_of.begin(), cell_of.end(), 0);
    for (std::size_t q = 0; q < n; ++q) {
      const int w = orders.states[q];
      g[static_cast<std::size_t>(w)] = orders.actions[static_cast<std::size_t>(seq[q])];
      cell_of[static_cast<std::size_t>(g[static_cast<std::size_t>(w)])] |= std::uint32_t{1} << w;
    }
    bool obedient = true;
    for (std::size_t a = 0; a < m && obedient; ++a) {
      if (cell_of[a] != 0) obedient = cells.is_receiver_optimal(cell_of[a], static_cast<int>(a));
    }
    if (obedient) {
      Rational value = 0;
      for (std::size_t w = 0; w < n; ++w) {
        value += env.prior(w) * env.u_sender(w, static_cast<std::size_t>(g[w]));
      }
      if (!found || value > best.value) {
        found = true;
        best.value = value;
        best.map.assignment = g;
      }
    }
    std::size_t i = n;
    while (i > 0 && seq[i - 1] == static_cast<int>(m) - 1) --i;
    if (i == 0) break;
    const int v = seq[i - 1] + 1;
    for (std::size_t j = i - 1; j < n; ++j) seq[j] = v;
  }
  if (!found) throw std::logic_error("no obedient monotone map; pooling should be obedient");
  return best;
}

Theorem4Check theorem4_check(const Environment& env, const Orders& orders, const Caps& caps) {
  require_supermodular(env, orders);
  if (!partitional_unique_response(env, caps).holds) {
    throw ValidationError("Receiver utility fails partitional unique response");
  }
  Theorem4Check check;
  check.curve = curve_payoff(env, orders, caps).value;
  check.curve_partitional = curve_partitional_payoff(env, orders, caps).value;
  check.cheap_talk = best_pure_cheap_talk(env, caps).payoff_S;
  check.hypothesis = check.curve > check.cheap_talk;
  check.conclusion = check.curve > check.curve_partitional;
  check.pass = !check.hypothesis || check.conclusion;
  return check;
}

std::optional<Orders> find_supermodular_orders(const Environment& env) {
  if (env.n_states() > 5 || env.n_actions() > 5) {
    throw ValidationError("order search is limited to 5 states and 5 actions");
  }
  Orders o = natural_orders(env);
  do {
    std::iota(o.actions.begin(), o.actions.end(), 0);
    do {
      if (is_strictly_supermodular(env.u_sender(), o).holds) return o;
    } while (std::next_permutation(o.actions.begin(), o.actions.end()));
  } while (std::next_permutation(o.states.begin(), o.states.end()));
  return std::nullopt;
}

}  // namespace persuade

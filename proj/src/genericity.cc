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

#include "persuade/genericity.hpp"

#include <bit>
#include <span>

#include "persuade/cells.hpp"
#include "persuade/combinatorics.hpp"
#include "persuade/error.hpp"
#include "persuade/linalg.hpp"

namespace persuade {
namespace {

std::vector<int> strict_argmax_per_state(const RationalMatrix& u, std::size_t w,
                                         std::size_t n_actions) {
  std::vector<int> best{0};
  for (std::size_t a = 1; a < n_actions; ++a) {
    if (u(w, a) > u(w, static_cast<std::size_t>(best.front()))) {
      best.assign(1, static_cast<int>(a));
    } else if (u(w, a) == u(w, static_cast<std::size_t>(best.front()))) {
      best.push_back(static_cast<int>(a));
    }
  }
  return best;
}

}  // namespace

UniqueResponseResult partitional_unique_response(const Environment& env, const Caps& caps) {
  const CellTable cells(env, caps);
  UniqueResponseResult result;
  const std::uint32_t n_cells = std::uint32_t{1} << env.n_states();
  for (std::uint32_t cell = 1; cell < n_cells; ++cell) {
    const std::uint32_t argmax = cells.receiver_argmax(cell);
    if (std::popcount(argmax) >= 2) {
      result.holds = false;
      result.witness_cell = mask_states(cell);
      result.tied_actions = mask_states(argmax);
      break;
    }
  }
  return result;
}

RationalMatrix expanded_indifference_matrix(const Environment& env, std::size_t base_action) {
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  if (base_action >= k) throw ValidationError("base action out of range");
  RationalMatrix t(2 * (k - 1) + n, n);
  std::size_t row = 0;
  for (const RationalMatrix* u : {&env.u_sender(), &env.u_receiver()}) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == base_action) continue;
      for (std::size_t w = 0; w < n; ++w) t(row, w) = (*u)(w, j) - (*u)(w, base_action);
      ++row;
    }
  }
  for (std::size_t w = 0; w < n; ++w) t(row + w, w) = 1;
  return t;
}

std::uint64_t scant_indifference_budget(std::size_t n_states, std::size_t n_actions) {
  const std::uint64_t per_action = binomial(2 * (n_actions - 1) + n_states, n_states);
  if (per_action == UINT64_MAX || per_action > UINT64_MAX / n_actions) return UINT64_MAX;
  return per_action * n_actions;
}

// A square row-submatrix that takes d difference rows and n - d identity rows
// is, up to sign, the d x d minor of the difference rows on the states not
// covered by the identity rows. Checking every minor of the difference block
// therefore decides every square row-submatrix.
ScantIndifferenceResult scant_indifferences(const Environment& env, const Caps& caps) {
  const std::size_t n = env.n_states();
  const std::size_t k = env.n_actions();
  check_cap(scant_indifference_budget(n, k), caps.determinants, "determinants");
  ScantIndifferenceResult result;
  const std::size_t diff_rows = 2 * (k - 1);
  for (std::size_t i = 0; i < k && result.holds; ++i) {
    const RationalMatrix t = expanded_indifference_matrix(env, i);
    for (std::size_t d = 1; d <= std::min(n, diff_rows) && result.holds; ++d) {
      for_each_combination(diff_rows, d, [&](std::span<const std::size_t> rows) {
        if (!result.holds) return;
        for_each_combination(n, d, [&](std::span<const std::size_t> cols) {
          if (!result.holds) return;
          RationalMatrix minor(d, d);
          for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) minor(r, c) = t(rows[r], cols[c]);
          }
          if (determinant(minor) != 0) return;
          result.holds = false;
          result.base_action = i;
          result.rows.assign(rows.begin(), rows.end());
          std::size_t c = 0;
          for (std::size_t w = 0; w < n; ++w) {
            if (c < d && cols[c] == w) {
              ++c;
            } else {
              result.rows.push_back(diff_rows + w);
            }
          }
          result.witness = RationalMatrix(n, n);
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) {
              result.witness(r, col) = t(result.rows[r], col);
            }
          }
        });
      });
    }
  }
  return result;
}

SenderRegularity sender_regular(const Environment& env) {
  SenderRegularity result;
  result.ideal_sets.resize(env.n_actions());
  result.weak_ideal_sets.resize(env.n_actions());
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    const std::vector<int> best = strict_argmax_per_state(env.u_sender(), w, env.n_actions());
    for (int a : best) result.weak_ideal_sets[static_cast<std::size_t>(a)].push_back(static_cast<int>(w));
    if (best.size() == 1) {
      result.ideal_sets[static_cast<std::size_t>(best.front())].push_back(static_cast<int>(w));
    } else if (result.regular) {
      result.regular = false;
      result.witness_state = static_cast<int>(w);
    }
  }
  return result;
}

FelicityResult felicitous(const Environment& env) {
  const SenderRegularity regularity = sender_regular(env);
  if (!regularity.regular) {
    throw ValidationError("felicity requires a regular Sender utility; state " +
                          std::to_string(regularity.witness_state) + " has tied ideal actions");
  }
  FelicityResult result;
  for (std::size_t i = 0; i < env.n_actions(); ++i) {
    const std::vector<int>& cell = regularity.ideal_sets[i];
    if (cell.empty()) continue;
    for (std::size_t j = 0; j < env.n_actions(); ++j) {
      if (j == i) continue;
      Rational sum = 0;
      for (int w : cell) {
        const auto s = static_cast<std::size_t>(w);
        sum += env.prior(s) * (env.u_receiver(s, i) - env.u_receiver(s, j));
      }
      if (sum < 0) {
        result.holds = false;
        result.witness_ideal = static_cast<int>(i);
        result.witness_deviation = static_cast<int>(j);
        return result;
      }
    }
  }
  return result;
}

bool jointly_ideal_in_some_state(const Environment& env, std::size_t action) {
  for (std::size_t w = 0; w < env.n_states(); ++w) {
    const auto s = strict_argmax_per_state(env.u_sender(), w, env.n_actions());
    const auto r = strict_argmax_per_state(env.u_receiver(), w, env.n_actions());
    const int a = static_cast<int>(action);
    if (s.size() == 1 && r.size() == 1 && s.front() == a && r.front() == a) return true;
  }
  return false;
}

JointInclusivityResult jointly_inclusive(const Environment& env) {
  JointInclusivityResult result;
  for (std::size_t a = 0; a < env.n_actions(); ++a) {
    if (!jointly_ideal_in_some_state(env, a)) {
      result.holds = false;
      result.missing_action = static_cast<int>(a);
      break;
    }
  }
  return result;
}

TransparencyResult transparent_checks(const Environment& env) {
  TransparencyResult result;
  result.transparent = true;
  for (std::size_t a = 0; a < env.n_actions() && result.transparent; ++a) {
    for (std::size_t w = 1; w < env.n_states(); ++w) {
      if (env.u_sender(w, a) != env.u_sender(0, a)) {
        result.transparent = false;
        break;
      }
    }
  }
  if (!result.transparent) return result;
  for (std::size_t a = 0; a < env.n_actions(); ++a) result.v.push_back(env.u_sender(0, a));
  bool distinct = true;
  for (std::size_t a = 0; a < result.v.size(); ++a) {
    for (std::size_t b = a + 1; b < result.v.size(); ++b) distinct = distinct && result.v[a] != result.v[b];
  }
  result.no_duplicate_actions = distinct;
  return result;
}

GenericityReport genericity_report(const Environment& env, const Caps& caps) {
  GenericityReport report;
  report.partitional_unique_response = partitional_unique_response(env, caps);
  report.scant_indifferences = scant_indifferences(env, caps);
  report.sender_regular = sender_regular(env);
  report.jointly_inclusive = jointly_inclusive(env);
  if (report.sender_regular.regular) report.felicitous = felicitous(env);
  report.transparent = transparent_checks(env);
  return report;
}

}  // namespace persuade

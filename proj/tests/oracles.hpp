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

// Independent reference implementations used as test oracles. They favour
// brute force and direct definitions over the library's algorithms.

#ifndef PERSUADE_TESTS_ORACLES_HPP_
#define PERSUADE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "persuade/core.hpp"
#include "persuade/exactlp.hpp"
#include "persuade/rational.hpp"

namespace oracle {

using persuade::Environment;
using persuade::Rational;
using persuade::RationalMatrix;

// Solves A x = b exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

inline Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// Maximum of a bounded, feasible LP with nonnegative variables by
// enumerating every basic solution. nullopt when infeasible.
inline std::optional<Rational> vertex_max(const persuade::exactlp::LinearProgram& lp) {
  using persuade::exactlp::Relation;
  struct Row {
    std::vector<Rational> a;
    Rational b;
  };
  const std::size_t n = lp.n_vars;
  std::vector<Row> equalities, inequalities;
  for (const auto& c : lp.constraints) {
    (c.relation == Relation::kEqual ? equalities : inequalities).push_back({c.coefficients, c.rhs});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    inequalities.push_back({e, 0});
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& c : lp.constraints) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += c.coefficients[j] * x[j];
      if (c.relation == Relation::kEqual && lhs != c.rhs) return false;
      if (c.relation == Relation::kLessEqual && lhs > c.rhs) return false;
      if (c.relation == Relation::kGreaterEqual && lhs < c.rhs) return false;
    }
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; });
  };
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec;
  // Choose n tight rows: all equalities that fit plus inequalities.
  rec = [&](std::size_t start, std::size_t need) {
    if (need == 0) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i : pick) {
        const Row& r = i < equalities.size() ? equalities[i] : inequalities[i - equalities.size()];
        a.push_back(r.a);
        b.push_back(r.b);
      }
      auto x = solve_square(a, b);
      if (!x || !feasible(*x)) return;
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
      if (!best || v > *best) best = v;
      return;
    }
    const std::size_t total = equalities.size() + inequalities.size();
    for (std::size_t i = start; i < total; ++i) {
      if (total - i < need) break;
      pick.push_back(i);
      rec(i + 1, need - 1);
      pick.pop_back();
    }
  };
  rec(0, n);
  return best;
}

// Persuasion payoff through its obedience program, solved by vertex
// enumeration.
inline Rational persuasion(const Environment& env) {
  const std::size_t n = env.n_states(), k = env.n_actions();
  persuade::exactlp::LinearProgram lp(n * k);
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Rational> row(n * k);
    for (std::size_t a = 0; a < k; ++a) {
      lp.objective[w * k + a] = env.u_sender(w, a);
      row[w * k + a] = 1;
    }
    lp.add(row, persuade::exactlp::Relation::kEqual, env.prior(w));
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      std::vector<Rational> row(n * k);
      for (std::size_t w = 0; w < n; ++w) row[w * k + a] = env.u_receiver(w, a) - env.u_receiver(w, b);
      lp.add(row, persuade::exactlp::Relation::kGreaterEqual, 0);
    }
  }
  return *vertex_max(lp);
}

// Sender-favourable value of pooling the states in `cell` (unnormalised).
inline Rational cell_value(const Environment& env, const std::vector<int>& cell) {
  std::optional<Rational> best_r, best_s;
  for (std::size_t a = 0; a < env.n_actions(); ++a) {
    Rational r = 0, s = 0;
    for (int w : cell) {
      r += env.prior(static_cast<std::size_t>(w)) * env.u_receiver(static_cast<std::size_t>(w), a);
      s += env.prior(static_cast<std::size_t>(w)) * env.u_sender(static_cast<std::size_t>(w), a);
    }
    if (!best_r || r > *best_r) {
      best_r = r;
      best_s = s;
    } else if (r == *best_r && s > *best_s) {
      best_s = s;
    }
  }
  return *best_s;
}

// Partitional persuasion payoff over every labelling of states by block
// names 0..n-1 (each set partition appears many times).
inline Rational partitional(const Environment& env) {
  const std::size_t n = env.n_states();
  std::vector<int> label(n, 0);
  std::optional<Rational> best;
  while (true) {
    Rational total = 0;
    for (int b = 0; b < static_cast<int>(n); ++b) {
      std::vector<int> cell;
      for (std::size_t w = 0; w < n; ++w) {
        if (label[w] == b) cell.push_back(static_cast<int>(w));
      }
      if (!cell.empty()) total += cell_value(env, cell);
    }
    if (!best || total > *best) best = total;
    std::size_t i = n;
    while (i > 0 && label[i - 1] == static_cast<int>(n) - 1) label[--i] = 0;
    if (i == 0) break;
    ++label[i - 1];
  }
  return *best;
}

}  // namespace oracle

#endif  // PERSUADE_TESTS_ORACLES_HPP_

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

#include <doctest.h>

#include <bit>

#include "persuade/cheaptalk.hpp"
#include "persuade/curve.hpp"
#include "persuade/error.hpp"
#include "persuade/exactlp.hpp"
#include "persuade/generators.hpp"
#include "persuade/genericity.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/random.hpp"
#include "curve_oracle.hpp"

using namespace persuade;

TEST_CASE("supermodularity") {
  const Environment q = make_quadratic(2, Rational(3, 4));
  CHECK(is_strictly_supermodular(q.u_sender(), natural_orders(q)).holds);
  CHECK(is_strictly_supermodular_full(q.u_sender(), natural_orders(q)).holds);

  const Environment e2 = make_example2(1);
  const SupermodularityResult r = is_strictly_supermodular(e2.u_sender(), natural_orders(e2));
  CHECK(!r.holds);
  CHECK(r.a == 0);
  CHECK(r.a_prime == 1);
  CHECK(r.w == 0);
  CHECK(r.w_prime == 1);

  const auto col = RationalMatrix::from_rows({{1}, {5}, {2}});
  CHECK(is_strictly_supermodular(col, Orders{{0, 1, 2}, {0}}).holds);
  const auto row = RationalMatrix::from_rows({{3, 1, 2}});
  CHECK(is_strictly_supermodular(row, Orders{{0}, {0, 1, 2}}).holds);

  // Reversing both orders preserves supermodularity.
  CHECK(is_strictly_supermodular(q.u_sender(), Orders{{1, 0}, {2, 1, 0}}).holds);
  CHECK(!is_strictly_supermodular(q.u_sender(), Orders{{1, 0}, {0, 1, 2}}).holds);
}

TEST_CASE("adjacent and full supermodularity checks agree") {
  Rng rng(10);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(4), k = 1 + rng.below(4);
    RationalMatrix u(n, k);
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t a = 0; a < k; ++a) u(w, a) = static_cast<long>(rng.below(5)) * static_cast<long>(w + a);
    }
    Orders o{std::vector<int>(n), std::vector<int>(k)};
    for (std::size_t i = 0; i < n; ++i) o.states[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < k; ++i) o.actions[i] = static_cast<int>(i);
    CHECK(is_strictly_supermodular(u, o).holds == is_strictly_supermodular_full(u, o).holds);
  }
  for (int t = 0; t < 50; ++t) {
    const Environment env = sample_supermodular_env(3, 3, rng);
    CHECK(is_strictly_supermodular_full(env.u_sender(), natural_orders(env)).holds);
  }
}

TEST_CASE("staircases") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      std::uint64_t count = 0;
      for_each_staircase(n, m, [&](const Staircase& s) {
        ++count;
        for (std::size_t t = 0; t < n; ++t) {
          CHECK(s.lo[t] <= s.hi[t]);
          if (t + 1 < n) CHECK(s.hi[t] <= s.lo[t + 1]);
        }
      });
      CHECK(count == staircase_count(n, m));
    }
  }
  CHECK(staircase_count(4, 3) == 45);
}

TEST_CASE("comonotonicity, pairwise") {
  const Orders o{{0, 1}, {0, 1}};
  CHECK(is_comonotone(RationalMatrix::from_rows({{1, 0}, {Rational(1, 2), Rational(1, 2)}}), o));
  CHECK(!is_comonotone(RationalMatrix::from_rows({{Rational(1, 2), Rational(1, 2)}, {1, 0}}), o));
  CHECK(is_comonotone(RationalMatrix::from_rows({{Rational(1, 2), Rational(1, 2)}, {0, 1}}), o));
  CHECK(!is_comonotone(RationalMatrix::from_rows({{0, 1}, {1, 0}}), o));
  CHECK(is_comonotone(RationalMatrix::from_rows({{0, 1}, {1, 0}}), Orders{{1, 0}, {0, 1}}));
}

TEST_CASE("quadratic family") {
  const Environment lo = make_quadratic(2, Rational(1, 4));
  const CurveSolution c = curve_payoff(lo, natural_orders(lo));
  CHECK(c.value == persuasion_payoff(lo).value);
  // Full revelation: a = 0 at w = 0, a = 1 at w = 1; value -b^2.
  CHECK(c.value == Rational(-1, 16));

  const Environment hi = make_quadratic(2, Rational(3, 4));
  const CurveSolution ch = curve_payoff(hi, natural_orders(hi));
  const CurvePartitionalSolution ph = curve_partitional_payoff(hi, natural_orders(hi));
  CHECK(ph.value == Rational(-9, 16));
  CHECK(ch.value <= persuasion_payoff(hi).value);
  CHECK(ch.value > ph.value);
  CHECK(ch.value == curve_oracle::curve_value(hi, natural_orders(hi)));
  CHECK(is_comonotone(ch.outcome.pi, natural_orders(hi)));
  CHECK(is_obedient(hi, ch.outcome.pi));
  const Theorem4Check t = theorem4_check(hi, natural_orders(hi));
  CHECK(t.pass);
}

TEST_CASE("aligned supermodular preferences") {
  Rng rng(55);
  for (int i = 0; i < 10; ++i) {
    const Environment s = sample_supermodular_env(3, 3, rng);
    const Environment aligned = s.with_receiver_utility(s.u_sender());
    const CurveSolution c = curve_payoff(aligned, natural_orders(aligned));
    CHECK(c.value == persuasion_payoff(aligned).value);
    CHECK(c.value == sender_ideal_payoff(aligned));
    CHECK(curve_partitional_payoff(aligned, natural_orders(aligned)).value == c.value);
    if (partitional_unique_response(aligned).holds) {
      const Theorem4Check t = theorem4_check(aligned, natural_orders(aligned));
      CHECK(!t.hypothesis);
      CHECK(t.pass);
    }
  }
}

TEST_CASE("single state: best obedient action") {
  const Environment env({1}, RationalMatrix::from_rows({{0, 1, 2}}),
                        RationalMatrix::from_rows({{3, 1, 3}}));
  CHECK(curve_partitional_payoff(env, natural_orders(env)).value == 2);
  CHECK(curve_payoff(env, natural_orders(env)).value == 2);
}

TEST_CASE("curve payoff agrees with the support-enumeration oracle and the orderings") {
  Rng rng(808);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(3), k = 2 + rng.below(2);
    const Environment env = sample_supermodular_env(n, k, rng);
    const Orders o = natural_orders(env);
    const CurveSolution c = curve_payoff(env, o);
    CHECK(c.value == curve_oracle::curve_value(env, o));
    CHECK(c.value <= persuasion_payoff(env).value);
    CHECK(c.value >= best_pure_cheap_talk(env).payoff_S);
    CHECK(c.value >= curve_partitional_payoff(env, o).value);
    CHECK(is_comonotone(c.outcome.pi, o));
    CHECK(is_obedient(env, c.outcome.pi));
  }
}

TEST_CASE("curve harness on random supermodular instances") {
  Rng rng(4242);
  int ran = 0;
  for (int t = 0; t < 40; ++t) {
    const Environment env = sample_supermodular_env(4, 3, rng);
    if (!partitional_unique_response(env).holds) continue;
    ++ran;
    CHECK(theorem4_check(env, natural_orders(env)).pass);
  }
  CHECK(ran > 30);
}

TEST_CASE("preconditions") {
  const Environment e2 = make_example2(1);
  CHECK_THROWS_AS(curve_payoff(e2, natural_orders(e2)), ValidationError);
  CHECK_THROWS_AS(curve_payoff(e2, Orders{{0, 0}, {0, 1, 2}}), ValidationError);
  const Environment q = make_quadratic(2, Rational(3, 4));
  CHECK_THROWS_AS(curve_payoff(q, natural_orders(q), Caps::uniform(3)), CapExceeded);
  CHECK_THROWS_AS(theorem4_check(make_example1(1).with_sender_utility(
                                     RationalMatrix::from_rows({{0, 1}, {0, 2}})),
                                 Orders{{0, 1}, {0, 1}}),
                  ValidationError);
}

TEST_CASE("order search") {
  // Sender's state differences in Example 2 are (3, -3, 3): the tie rules out
  // every order.
  CHECK(!find_supermodular_orders(make_example2(1)).has_value());
  const auto shuffled = RationalMatrix::from_rows({{5, 0, 1}, {0, 3, 2}});
  const Environment s({Rational(1, 2), Rational(1, 2)}, shuffled, shuffled);
  const auto o = find_supermodular_orders(s);
  REQUIRE(o.has_value());
  CHECK(is_strictly_supermodular_full(s.u_sender(), *o).holds);
  const Environment q = make_quadratic(2, Rational(3, 4));
  const auto oq = find_supermodular_orders(q);
  REQUIRE(oq.has_value());
  CHECK(oq->states == std::vector<int>{0, 1});
  CHECK(oq->actions == std::vector<int>{0, 1, 2});
}

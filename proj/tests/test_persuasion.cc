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

#include "persuade/cells.hpp"
#include "persuade/cheaptalk.hpp"
#include "persuade/error.hpp"
#include "persuade/generators.hpp"
#include "persuade/genericity.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/random.hpp"
#include "oracles.hpp"

using namespace persuade;

TEST_CASE("prosecutor: persuasion optimum and its vertex") {
  const Environment env = make_prosecutor(Rational(3, 10));
  const PersuasionSolution s = persuasion_payoff(env);
  CHECK(s.value == Rational(3, 5));
  CHECK(s.joint(1, 1) == Rational(3, 10));
  CHECK(s.joint(0, 1) == Rational(3, 10));
  CHECK(s.joint(0, 0) == Rational(2, 5));
  CHECK(s.outcome.pi(0, 1) == Rational(3, 7));
  CHECK(s.recommended_actions == std::vector<int>{0, 1});
  // Convict recommendation leaves the judge indifferent.
  CHECK(std::find(s.binding_obedience.begin(), s.binding_obedience.end(),
                  std::make_pair(1, 0)) != s.binding_obedience.end());
  CHECK(oracle::persuasion(env) == s.value);

  const Profile rec = recommendation_profile(env, s);
  const VerificationReport report = verify_profile(env, rec);
  CHECK(report.is_R_BR);
  CHECK(report.payoff_S == s.value);
}

TEST_CASE("worked examples: persuasion and partitional payoffs") {
  CHECK(persuasion_payoff(make_example1(1)).value == Rational(1, 2));
  CHECK(persuasion_payoff(make_example2(1)).value == 1);

  const PartitionalSolution pros = partitional_persuasion_payoff(make_prosecutor(Rational(3, 10)));
  CHECK(pros.value == Rational(3, 10));
  CHECK(pros.cells.size() == 2);

  CHECK(partitional_persuasion_payoff(make_example1(1)).value == Rational(1, 2));
  CHECK(partitional_persuasion_payoff(make_example2(1)).value == Rational(1, 2));
  CHECK(partitional_persuasion_payoff(make_quadratic(2, Rational(3, 4))).value ==
        Rational(-9, 16));
}

TEST_CASE("babbling and ideal payoffs") {
  CHECK(babbling_payoff(make_prosecutor(Rational(3, 10))) == 0);
  // The judge convicts at prior 7/10.
  CHECK(babbling_payoff(make_prosecutor(Rational(7, 10))) == 1);
  CHECK(sender_ideal_payoff(make_prosecutor(Rational(3, 10))) == 1);
  CHECK(sender_ideal_payoff(make_prosecutor(Rational(1, 9))) == 1);
  // Row maxima 2 and 3.
  CHECK(sender_ideal_payoff(make_example2(1)) == Rational(5, 2));

  Rng rng(4);
  const Environment u = sample_uniform_env(3, 3, rng);
  const Environment aligned = u.with_sender_utility(u.u_receiver());
  const Belief prior{aligned.prior()};
  const int a = receiver_best_responses(aligned, prior).front();
  CHECK(babbling_payoff(aligned) == expected_receiver_utility(aligned, prior, static_cast<std::size_t>(a)));

  const Environment constant =
      u.with_sender_utility(RationalMatrix(3, 3, Rational(2, 7)));
  CHECK(sender_ideal_payoff(constant) == Rational(2, 7));
}

TEST_CASE("receiver indifference diagnostic") {
  const Environment p3 = make_prosecutor(Rational(3, 10));
  const IndifferenceDiagnostic d3 = receiver_indifference_diagnostic(p3, persuasion_payoff(p3));
  CHECK(d3.flag);
  bool found = false;
  for (const auto& r : d3.recommendations) {
    if (r.action == 1) {
      found = true;
      CHECK(r.posterior.probabilities == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
      CHECK(r.receiver_argmax == std::vector<int>{0, 1});
    }
  }
  CHECK(found);

  const Environment p7 = make_prosecutor(Rational(7, 10));
  CHECK(!receiver_indifference_diagnostic(p7, persuasion_payoff(p7)).flag);

  // Aligned preferences: full revelation, strict best response per state.
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const Environment u = sample_uniform_env(3, 3, rng);
    const Environment aligned = u.with_sender_utility(u.u_receiver());
    const PersuasionSolution s = persuasion_payoff(aligned);
    CHECK(s.value == sender_ideal_payoff(aligned));
    CHECK(!receiver_indifference_diagnostic(aligned, s).flag);
  }
}

TEST_CASE("payoff orderings and oracle agreement on random environments") {
  Rng rng(77);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.below(3), k = 2 + rng.below(2);
    const Environment env = sample_uniform_env(n, k, rng);
    const PersuasionSolution s = persuasion_payoff(env);
    const Rational part = partitional_persuasion_payoff(env).value;
    CHECK(s.value >= part);
    CHECK(part >= babbling_payoff(env));
    CHECK(s.value <= sender_ideal_payoff(env));
    CHECK(part == oracle::partitional(env));
    if (n * k <= 6) CHECK(s.value == oracle::persuasion(env));

    // Obedience rechecked from the joint distribution.
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        Rational slack = 0;
        for (std::size_t w = 0; w < n; ++w) {
          slack += s.joint(w, a) * (env.u_receiver(w, a) - env.u_receiver(w, b));
        }
        CHECK(slack >= 0);
      }
    }
    for (std::size_t w = 0; w < n; ++w) {
      Rational row = 0;
      for (std::size_t a = 0; a < k; ++a) row += s.joint(w, a);
      CHECK(row == env.prior(w));
    }
  }
}

TEST_CASE("subset DP, capped enumeration and full enumeration agree") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(5), k = 2 + rng.below(2);
    const Environment env = sample_uniform_env(n, k, rng);
    const Rational full = partitional_persuasion_payoff(env).value;
    PartitionOptions dp;
    dp.method = PartitionMethod::kSubsetDp;
    const PartitionalSolution viadp = partitional_persuasion_payoff(env, dp);
    CHECK(viadp.value == full);
    // Merging cells that share a response never lowers the value, so at most
    // |A| cells suffice.
    PartitionOptions capped;
    capped.max_cells = k;
    CHECK(partitional_persuasion_payoff(env, capped).value == full);

    // Cells of the DP answer form a partition and reproduce its value.
    std::vector<int> seen(n, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < viadp.cells.size(); ++c) {
      for (int w : viadp.cells[c]) ++seen[static_cast<std::size_t>(w)];
      total += oracle::cell_value(env, viadp.cells[c]);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    CHECK(total == full);
  }
}

TEST_CASE("partition enumeration respects its cap") {
  Rng rng(1);
  const Environment env = sample_uniform_env(6, 2, rng);
  PartitionOptions options;
  options.caps = Caps::uniform(100);  // Bell(6) = 203
  CHECK_THROWS_AS(partitional_persuasion_payoff(env, options), CapExceeded);
  options.max_cells = 2;  // 32 partitions
  CHECK_NOTHROW(partitional_persuasion_payoff(env, options));
}

TEST_CASE("affine transformations of Sender utility") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const Environment env = sample_uniform_env(3, 3, rng);
    const Rational alpha = Rational(1 + static_cast<long>(rng.below(5)), 3);
    const Rational beta = Rational(static_cast<long>(rng.below(9)) - 4, 7);
    RationalMatrix u = env.u_sender();
    for (std::size_t w = 0; w < 3; ++w) {
      for (std::size_t a = 0; a < 3; ++a) u(w, a) = alpha * u(w, a) + beta;
    }
    const Environment moved = env.with_sender_utility(u);
    CHECK(persuasion_payoff(moved).value == alpha * persuasion_payoff(env).value + beta);
    const PartitionalSolution p0 = partitional_persuasion_payoff(env);
    const PartitionalSolution p1 = partitional_persuasion_payoff(moved);
    CHECK(p1.value == alpha * p0.value + beta);
    const CellTable c0(env), c1(moved);
    for (std::uint32_t cell = 1; cell < 8; ++cell) {
      CHECK(c0.receiver_argmax(cell) == c1.receiver_argmax(cell));
      CHECK(c0.sender_preferred_response(cell) == c1.sender_preferred_response(cell));
    }
  }
}

TEST_CASE("generic environments: a vertex without indifference implies no value of randomization") {
  Rng rng(31);
  int checked = 0, without_flag = 0;
  for (int t = 0; t < 150; ++t) {
    const Environment env = sample_uniform_env(3, 3, rng);
    if (!partitional_unique_response(env).holds || !scant_indifferences(env).holds) continue;
    ++checked;
    const PersuasionSolution s = persuasion_payoff(env);
    const bool equal = s.value == partitional_persuasion_payoff(env).value;
    if (!receiver_indifference_diagnostic(env, s).flag) {
      ++without_flag;
      CHECK(equal);
    }
    // A value gap forces an indifferent recommendation on every optimum.
    if (!equal) CHECK(receiver_indifference_diagnostic(env, s).flag);
  }
  CHECK(checked > 100);
  CHECK(without_flag > 0);
}

TEST_CASE("cell table against direct posterior computation") {
  Rng rng(6);
  const Environment env = sample_uniform_env(4, 3, rng);
  const CellTable cells(env);
  for (std::uint32_t cell = 1; cell < 16; ++cell) {
    const std::vector<int> states = mask_states(cell);
    CHECK(state_mask(states) == cell);
    Rational mass = 0;
    for (int w : states) mass += env.prior(static_cast<std::size_t>(w));
    std::vector<Rational> post(4);
    for (int w : states) post[static_cast<std::size_t>(w)] = env.prior(static_cast<std::size_t>(w)) / mass;
    const std::vector<int> br = receiver_best_responses(env, Belief{post});
    CHECK(cells.receiver_argmax(cell) == state_mask(br));
    CHECK(cells.sender_value(cell) == oracle::cell_value(env, states));
  }
}

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

#include "persuade/combinatorics.hpp"
#include "persuade/error.hpp"
#include "persuade/generators.hpp"
#include "persuade/genericity.hpp"
#include "persuade/linalg.hpp"
#include "persuade/random.hpp"
#include "persuade/shares.hpp"
#include "oracles.hpp"

using namespace persuade;

namespace {

// Definition taken literally: every row-submatrix of every T^i has full rank
// min(#rows, |Ω|).
bool scant_by_rank(const Environment& env) {
  for (std::size_t i = 0; i < env.n_actions(); ++i) {
    const RationalMatrix t = expanded_indifference_matrix(env, i);
    const std::size_t rows = t.rows();
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << rows); ++subset) {
      std::vector<std::vector<Rational>> m;
      for (std::size_t r = 0; r < rows; ++r) {
        if ((subset >> r) & 1u) m.emplace_back(t.row(r).begin(), t.row(r).end());
      }
      if (oracle::rank(m) != std::min(m.size(), env.n_states())) return false;
    }
  }
  return true;
}

Environment with_sender(const Environment& env, std::vector<std::vector<Rational>> rows) {
  return env.with_sender_utility(RationalMatrix::from_rows(rows));
}

}  // namespace

TEST_CASE("partitional unique response on the examples") {
  CHECK(partitional_unique_response(make_prosecutor(Rational(3, 10))).holds);
  const UniqueResponseResult e1 = partitional_unique_response(make_example1(1));
  CHECK(!e1.holds);
  CHECK(e1.witness_cell == std::vector<int>{1});
  CHECK(e1.tied_actions == std::vector<int>{0, 1});
  CHECK(partitional_unique_response(make_example2(1)).holds);
}

TEST_CASE("expanded indifference matrix layout") {
  const RationalMatrix t = expanded_indifference_matrix(make_example2(1), 0);
  CHECK(t.rows() == 2 * 2 + 2);
  CHECK(t.cols() == 2);
  CHECK(t(0, 0) == 2);
  CHECK(t(0, 1) == -4);
  CHECK(t(2, 0) == -1);
  CHECK(t(2, 1) == 2);
  CHECK(t(4, 0) == 1);
  CHECK(t(5, 1) == 1);
}

TEST_CASE("scant indifferences on the examples") {
  CHECK(scant_indifferences(make_prosecutor(Rational(3, 10))).holds);
  const ScantIndifferenceResult e2 = scant_indifferences(make_example2(1));
  CHECK(!e2.holds);
  CHECK(e2.base_action == 0);
  CHECK(e2.rows == std::vector<std::size_t>{0, 2});
  CHECK(e2.witness == RationalMatrix::from_rows({{2, -4}, {-1, 2}}));
  CHECK(determinant(e2.witness) == 0);

  // Sender indifferent between a1 and a2 in one state.
  Rng rng(1);
  const Environment u = sample_uniform_env(3, 3, rng);
  RationalMatrix s = u.u_sender();
  s(1, 1) = s(1, 0);
  CHECK(!scant_indifferences(u.with_sender_utility(s)).holds);
  CHECK(scant_indifference_budget(3, 3) == 3 * binomial(7, 3));
}

TEST_CASE("square-minor decision matches the row-submatrix definition") {
  Rng rng(17);
  int fails = 0;
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng.below(3), k = 2 + rng.below(2);
    Environment env = sample_uniform_env(n, k, rng);
    if (t % 2 == 1) {
      // Small integer tables produce singular minors often.
      RationalMatrix s(n, k), r(n, k);
      for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t a = 0; a < k; ++a) {
          s(w, a) = static_cast<long>(rng.below(3));
          r(w, a) = static_cast<long>(rng.below(3));
        }
      }
      env = env.with_sender_utility(s).with_receiver_utility(r);
    }
    const ScantIndifferenceResult res = scant_indifferences(env);
    CHECK(res.holds == scant_by_rank(env));
    if (!res.holds) {
      ++fails;
      // Witness reproduces: the reported rows of T^i, singular.
      const RationalMatrix t = expanded_indifference_matrix(env, res.base_action);
      REQUIRE(res.rows.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) CHECK(res.witness(i, c) == t(res.rows[i], c));
      }
      CHECK(determinant(res.witness) == 0);
    }
  }
  CHECK(fails > 10);
}

TEST_CASE("scant indifferences implies no Sender ties within a state") {
  Rng rng(23);
  for (int t = 0; t < 1000; ++t) {
    RationalMatrix s(2, 3), r(2, 3);
    for (std::size_t w = 0; w < 2; ++w) {
      for (std::size_t a = 0; a < 3; ++a) {
        s(w, a) = static_cast<long>(rng.below(4));
        r(w, a) = static_cast<long>(rng.below(4));
      }
    }
    const Environment env(uniform_prior(2), s, r);
    if (!scant_indifferences(env).holds) continue;
    for (std::size_t w = 0; w < 2; ++w) {
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) CHECK(s(w, a) != s(w, b));
      }
    }
  }
}

TEST_CASE("uniform draws are generic") {
  Rng rng(2025);
  int failures = 0;
  for (int t = 0; t < 10000; ++t) {
    const Environment env = sample_uniform_env(3, 3, rng);
    if (!partitional_unique_response(env).holds || !scant_indifferences(env).holds) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("determinant budget is enforced") {
  Rng rng(3);
  const Environment env = sample_uniform_env(4, 3, rng);
  Caps caps;
  caps.determinants = 10;
  CHECK_THROWS_AS(scant_indifferences(env, caps), CapExceeded);
  caps = Caps{};
  caps.subsets = 8;
  CHECK_THROWS_AS(partitional_unique_response(env, caps), CapExceeded);
}

TEST_CASE("Sender regularity and ideal partitions") {
  const SenderRegularity p = sender_regular(make_prosecutor(Rational(3, 10)));
  CHECK(p.regular);
  CHECK(p.ideal_sets[0].empty());
  CHECK(p.ideal_sets[1] == std::vector<int>{0, 1});

  const SenderRegularity e2 = sender_regular(make_example2(1));
  CHECK(e2.regular);
  CHECK(e2.ideal_sets[1] == std::vector<int>{0});
  CHECK(e2.ideal_sets[0] == std::vector<int>{1});
  CHECK(e2.ideal_sets[2].empty());

  const Environment tied = with_sender(make_example2(1), {{1, 1, 0}, {0, 0, 1}});
  const SenderRegularity t = sender_regular(tied);
  CHECK(!t.regular);
  CHECK(t.witness_state == 0);
  CHECK(t.weak_ideal_sets[0] == std::vector<int>{0});
  CHECK(t.weak_ideal_sets[1] == std::vector<int>{0});
  CHECK(t.ideal_sets[2] == std::vector<int>{1});
}

TEST_CASE("felicity") {
  const FelicityResult f3 = felicitous(make_prosecutor(Rational(3, 10)));
  CHECK(!f3.holds);
  CHECK(f3.witness_ideal == 1);
  CHECK(f3.witness_deviation == 0);
  CHECK(felicitous(make_prosecutor(Rational(7, 10))).holds);

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const Environment u = sample_uniform_env(3, 3, rng);
    CHECK(felicitous(u.with_sender_utility(u.u_receiver())).holds);
  }
  const Environment tied = with_sender(make_example2(1), {{1, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(felicitous(tied), ValidationError);
}

TEST_CASE("joint inclusivity") {
  const JointInclusivityResult p = jointly_inclusive(make_prosecutor(Rational(3, 10)));
  CHECK(!p.holds);
  CHECK(p.missing_action == 0);
  CHECK(jointly_ideal_in_some_state(make_prosecutor(Rational(3, 10)), 1));

  // Aligned, one state per action with a strict favourite.
  const auto u = RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(jointly_inclusive(Environment(uniform_prior(4), u, u)).holds);

  const auto one = RationalMatrix::from_rows({{0}, {1}});
  CHECK(jointly_inclusive(Environment(uniform_prior(2), one, one)).holds);
}

TEST_CASE("transparency") {
  const TransparencyResult p = transparent_checks(make_prosecutor(Rational(3, 10)));
  CHECK(p.transparent);
  CHECK(p.no_duplicate_actions == true);
  CHECK(p.v == std::vector<Rational>{0, 1});

  const TransparencyResult e2 = transparent_checks(make_example2(1));
  CHECK(!e2.transparent);
  CHECK(!e2.no_duplicate_actions.has_value());

  const Environment zero = make_example2(1).with_sender_utility(RationalMatrix(2, 3));
  const TransparencyResult z = transparent_checks(zero);
  CHECK(z.transparent);
  CHECK(z.no_duplicate_actions == false);
}

TEST_CASE("genericity report") {
  const GenericityReport r = genericity_report(make_example1(1));
  CHECK(!r.partitional_unique_response.holds);
  CHECK(!r.generic());
  REQUIRE(r.felicitous.has_value());
  const Environment tied = with_sender(make_example2(1), {{1, 1, 0}, {0, 0, 1}});
  CHECK(!genericity_report(tied).felicitous.has_value());
  CHECK(genericity_report(make_prosecutor(Rational(3, 10))).generic());
}

TEST_CASE("felicity given nonempty cells has probability 1/4 with two actions") {
  const ShareEstimate e =
      estimate_share(ShareProperty::kFelicityGivenNonempty, 6, 2, 10000, 314159);
  CHECK(e.wilson_lo <= 0.25);
  CHECK(e.wilson_hi >= 0.25);
  CHECK(e.audit.resampled_empty > 0);
}

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

#include "persuade/analysis.hpp"
#include "persuade/error.hpp"
#include "persuade/generators.hpp"
#include "persuade/io.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/plot.hpp"
#include "persuade/random.hpp"

using namespace persuade;

TEST_CASE("two-state plots of the examples") {
  const TwoStatePlot e2 = plot_two_state(make_example2(1));
  CHECK(e2.breakpoints == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK(e2.prior_mu == Rational(1, 2));
  CHECK(e2.envelope_at_prior == 1);

  const TwoStatePlot pj = plot_two_state(make_prosecutor(Rational(3, 10)));
  CHECK(pj.prior_mu == Rational(3, 10));
  CHECK(pj.envelope_at_prior == Rational(3, 5));
  CHECK(pj.breakpoints == std::vector<Rational>{Rational(1, 2)});
  CHECK(indirect_utility(make_prosecutor(Rational(3, 10)), Rational(1, 2)) == 1);
  CHECK(indirect_utility(make_prosecutor(Rational(3, 10)), Rational(49, 100)) == 0);

  CHECK(plot_two_state(make_example1(1)).envelope_at_prior == Rational(1, 2));
  Rng rng(1);
  CHECK_THROWS_AS(plot_two_state(sample_uniform_env(3, 2, rng)), ValidationError);
}

TEST_CASE("concave envelope at the prior equals the persuasion payoff") {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const Environment env = sample_uniform_env(2, 1 + rng.below(4), rng);
    const TwoStatePlot plot = plot_two_state(env);
    CHECK(plot.envelope_at_prior == persuasion_payoff(env).value);
    // The hull lies weakly above every candidate point and is concave.
    for (const BeliefPoint& p : plot.points) CHECK(envelope_at(plot, p.mu) >= p.value);
    for (std::size_t j = 0; j + 2 < plot.hull.size(); ++j) {
      const BeliefPoint &a = plot.hull[j], &b = plot.hull[j + 1], &c = plot.hull[j + 2];
      CHECK((b.value - a.value) * (c.mu - b.mu) > (c.value - b.value) * (b.mu - a.mu));
    }
    CHECK(plot.hull.front().mu == 0);
    CHECK(plot.hull.back().mu == 1);
  }
}

TEST_CASE("SVG rendering") {
  const Environment env = make_example2(1);
  const std::string svg = render_svg(env, plot_two_state(env));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("rationals in JSON") {
  CHECK(rational_from_json(Json("3/5")) == Rational(3, 5));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK(rational_from_json(Json(-2)) == -2);
  CHECK(rational_from_json(Json("0.125")) == Rational(1, 8));
  CHECK(rational_from_json(Json::parse("0.1")) == Rational(1, 10));
  CHECK(to_json(Rational(-7, 3)) == Json("-7/3"));
  CHECK_THROWS_AS(rational_from_json(Json::array()), ValidationError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ValidationError);
}

TEST_CASE("environment and profile round trip") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Environment env = sample_uniform_env(1 + rng.below(4), 1 + rng.below(4), rng);
    const Environment back = environment_from_json(Json::parse(to_json(env).dump()));
    CHECK(back == env);
  }
  const Environment e2 = make_example2(1);
  const Profile w = d2_witness_profile(e2, 1);
  CHECK(profile_from_json(Json::parse(to_json(w).dump())) == w);

  CHECK_THROWS_AS(environment_from_json(Json::parse(R"({"prior": [1]})")), ValidationError);
  CHECK_THROWS_AS(environment_from_json(Json::parse(
                      R"({"prior": ["1/2", "1/2"], "u_sender": [[1]], "u_receiver": [[1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(environment_from_json(Json::parse(
                      R"({"prior": ["1/2", "1/2"], "u_sender": [[1], [1, 2]],
                          "u_receiver": [[1], [1]]})")),
                  ValidationError);
}

TEST_CASE("reports are identical after a JSON round trip") {
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const Environment env = sample_uniform_env(3, 3, rng);
    const Environment back = environment_from_json(Json::parse(to_json(env).dump()));
    CHECK(to_json(env, analyze(env)).dump() == to_json(back, analyze(back)).dump());
  }
  const Environment pj = make_prosecutor(Rational(3, 10));
  const Json report = to_json(pj, analyze(pj));
  CHECK(report.at("schema") == kReportSchema);
  CHECK(report.at("payoffs").at("persuasion") == "3/5");
}

TEST_CASE("files") {
  const std::string path = "plot_io_env.json";
  write_text(path, to_json(make_example1(1)).dump(2));
  CHECK(read_environment(path) == make_example1(1));
  write_text(path, "{ not json");
  CHECK_THROWS_AS(read_environment(path), ValidationError);
  CHECK_THROWS_AS(read_environment("does/not/exist.json"), ValidationError);
}

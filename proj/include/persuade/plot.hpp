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

#ifndef PERSUADE_PLOT_HPP_
#define PERSUADE_PLOT_HPP_

#include <string>
#include <vector>

#include "persuade/core.hpp"

namespace persuade {

struct BeliefPoint {
  // Probability of the second state.
  Rational mu;
  Rational value;
};

// Sender's indirect utility over beliefs for a two-state environment, with
// Sender-favorable values where Receiver is indifferent.
struct TwoStatePlot {
  // Interior beliefs where Receiver has two or more best responses.
  std::vector<Rational> breakpoints;
  // v at 0, 1 and every belief where it can change slope.
  std::vector<BeliefPoint> points;
  // Vertices of the concave envelope, increasing in mu.
  std::vector<BeliefPoint> hull;
  Rational prior_mu;
  Rational envelope_at_prior;
};

// Throws ValidationError unless the environment has exactly two states.
TwoStatePlot plot_two_state(const Environment& env);

// Indirect utility at a single belief.
Rational indirect_utility(const Environment& env, const Rational& mu);

Rational envelope_at(const TwoStatePlot& plot, const Rational& mu);

std::string render_svg(const Environment& env, const TwoStatePlot& plot);

}  // namespace persuade

#endif  // PERSUADE_PLOT_HPP_

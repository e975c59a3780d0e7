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

#include "persuade/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "persuade/error.hpp"

namespace persuade {
namespace {

// Line a + b * mu of an action's expected utility.
struct Line {
  Rational a;
  Rational b;
};

Line line(const RationalMatrix& u, std::size_t action) {
  return {u(0, action), u(1, action) - u(0, action)};
}

void crossings(const RationalMatrix& u, std::size_t n_actions, std::vector<Rational>& out) {
  for (std::size_t i = 0; i < n_actions; ++i) {
    for (std::size_t j = i + 1; j < n_actions; ++j) {
      const Line li = line(u, i), lj = line(u, j);
      if (li.b == lj.b) continue;
      Rational mu = (lj.a - li.a) / (li.b - lj.b);
      if (mu > 0 && mu < 1) out.push_back(mu);
    }
  }
}

Belief belief_at(const Rational& mu) { return Belief{{1 - mu, mu}}; }

// Cross product sign of (b - a) x (c - a).
Rational turn(const BeliefPoint& a, const BeliefPoint& b, const BeliefPoint& c) {
  return (b.mu - a.mu) * (c.value - a.value) - (b.value - a.value) * (c.mu - a.mu);
}

double x_of(const Rational& mu) { return 60 + 480 * to_double(mu); }

}  // namespace

Rational indirect_utility(const Environment& env, const Rational& mu) {
  const Belief belief = belief_at(mu);
  bool first = true;
  Rational best;
  for (int a : receiver_best_responses(env, belief)) {
    Rational v = expected_sender_utility(env, belief, static_cast<std::size_t>(a));
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

TwoStatePlot plot_two_state(const Environment& env) {
  if (env.n_states() != 2) throw ValidationError("belief plots need exactly two states");
  const std::size_t k = env.n_actions();
  TwoStatePlot plot;

  std::vector<Rational> receiver_cross;
  crossings(env.u_receiver(), k, receiver_cross);
  std::sort(receiver_cross.begin(), receiver_cross.end());
  receiver_cross.erase(std::unique(receiver_cross.begin(), receiver_cross.end()),
                       receiver_cross.end());
  for (const Rational& mu : receiver_cross) {
    if (receiver_best_responses(env, belief_at(mu)).size() >= 2) plot.breakpoints.push_back(mu);
  }

  // Sender crossings matter where Receiver ties over a whole interval.
  std::vector<Rational> candidates = plot.breakpoints;
  crossings(env.u_sender(), k, candidates);
  candidates.push_back(0);
  candidates.push_back(1);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rational& mu : candidates) plot.points.push_back({mu, indirect_utility(env, mu)});

  // Upper hull (monotone chain).
  for (const BeliefPoint& p : plot.points) {
    while (plot.hull.size() >= 2 &&
           turn(plot.hull[plot.hull.size() - 2], plot.hull.back(), p) >= 0) {
      plot.hull.pop_back();
    }
    plot.hull.push_back(p);
  }
  plot.prior_mu = env.prior(1);
  plot.envelope_at_prior = envelope_at(plot, plot.prior_mu);
  return plot;
}

Rational envelope_at(const TwoStatePlot& plot, const Rational& mu) {
  if (mu < 0 || mu > 1) throw ValidationError("belief outside [0, 1]");
  for (std::size_t i = 0; i + 1 < plot.hull.size(); ++i) {
    const BeliefPoint& a = plot.hull[i];
    const BeliefPoint& b = plot.hull[i + 1];
    if (mu >= a.mu && mu <= b.mu) {
      return a.value + (b.value - a.value) * (mu - a.mu) / (b.mu - a.mu);
    }
  }
  return plot.hull.back().value;
}

std::string render_svg(const Environment& env, const TwoStatePlot& plot) {
  Rational lo = plot.points.front().value, hi = lo;
  for (const BeliefPoint& p : plot.points) {
    lo = std::min(lo, p.value);
    hi = std::max(hi, p.value);
  }
  if (lo == hi) hi = lo + 1;
  const double vlo = to_double(lo), vhi = to_double(hi);
  auto y_of = [&](const Rational& v) { return 340 - 280 * (to_double(v) - vlo) / (vhi - vlo); };

  std::string svg;
  char buf[256];
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"400\" "
         "viewBox=\"0 0 600 400\">\n";
  svg += "<rect width=\"600\" height=\"400\" fill=\"white\"/>\n";
  svg += "<line x1=\"60\" y1=\"340\" x2=\"540\" y2=\"340\" stroke=\"black\"/>\n";
  svg += "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"340\" stroke=\"black\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<text x=\"300\" y=\"380\" text-anchor=\"middle\" font-size=\"14\">"
                "belief in %s</text>\n",
                env.state_labels()[1].c_str());
  svg += buf;

  // v is piecewise linear: between consecutive candidate beliefs the action is
  // fixed, so draw each piece from its one-sided limits.
  svg += "<g class=\"indirect-utility\" stroke=\"steelblue\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i + 1 < plot.points.size(); ++i) {
    const Rational& a = plot.points[i].mu;
    const Rational& b = plot.points[i + 1].mu;
    const Rational mid = (a + b) / 2;
    const Belief belief{{1 - mid, mid}};
    const auto action = static_cast<std::size_t>(receiver_best_responses(env, belief).front());
    Rational best = expected_sender_utility(env, belief, action);
    std::size_t chosen = action;
    for (int alt : receiver_best_responses(env, belief)) {
      Rational v = expected_sender_utility(env, belief, static_cast<std::size_t>(alt));
      if (v > best) {
        best = v;
        chosen = static_cast<std::size_t>(alt);
      }
    }
    auto value = [&](const Rational& mu) {
      return env.u_sender(0, chosen) * (1 - mu) + env.u_sender(1, chosen) * mu;
    };
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n",
                  x_of(a), y_of(value(a)), x_of(b), y_of(value(b)));
    svg += buf;
  }
  svg += "</g>\n";

  svg += "<polyline class=\"envelope\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" "
         "stroke-dasharray=\"6 3\" points=\"";
  for (const BeliefPoint& p : plot.hull) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f ", x_of(p.mu), y_of(p.value));
    svg += buf;
  }
  svg += "\"/>\n";

  for (const Rational& mu : plot.breakpoints) {
    std::snprintf(buf, sizeof buf,
                  "<line class=\"breakpoint\" x1=\"%.3f\" y1=\"60\" x2=\"%.3f\" y2=\"340\" "
                  "stroke=\"gray\" stroke-dasharray=\"2 4\"/>\n",
                  x_of(mu), x_of(mu));
    svg += buf;
  }
  std::snprintf(buf, sizeof buf,
                "<circle class=\"prior\" cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"black\"/>\n",
                x_of(plot.prior_mu), y_of(plot.envelope_at_prior));
  svg += buf;
  svg += "<text x=\"" + std::to_string(static_cast<int>(x_of(plot.prior_mu))) +
         "\" y=\"52\" text-anchor=\"middle\" font-size=\"12\">prior " +
         to_string(plot.prior_mu) + ", envelope " + to_string(plot.envelope_at_prior) +
         "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace persuade

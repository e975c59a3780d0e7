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

#include "persuade/generators.hpp"

#include <set>

#include "persuade/error.hpp"

namespace persuade {
namespace {

RationalMatrix table(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return RationalMatrix::from_rows(v);
}

RationalMatrix uniform_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_unit();
  }
  return m;
}

std::vector<Rational> prior_or_uniform(std::vector<Rational> prior, std::size_t n) {
  if (prior.empty()) return uniform_prior(n);
  if (prior.size() != n) throw ValidationError("prior length does not match state count");
  return prior;
}

void require_sizes(std::size_t n_states, std::size_t n_actions) {
  if (n_states == 0 || n_actions == 0) {
    throw ValidationError("state and action counts must be at least 1");
  }
}

}  // namespace

std::vector<Rational> uniform_prior(std::size_t n_states) {
  return std::vector<Rational>(n_states, Rational(1, static_cast<long>(n_states)));
}

Environment make_prosecutor(const Rational& prior_guilt) {
  if (prior_guilt <= 0 || prior_guilt >= 1) {
    throw ValidationError("prior of guilt must lie strictly between 0 and 1");
  }
  //                        acquit convict
  RationalMatrix u_sender = table({{0, 1},    // innocent
                                   {0, 1}});  // guilty
  RationalMatrix u_receiver = table({{1, 0}, {0, 1}});
  return Environment({1 - prior_guilt, prior_guilt}, u_sender, u_receiver,
                     {"innocent", "guilty"}, {"acquit", "convict"});
}

Environment make_example1(const Rational& k) {
  if (k <= 0) throw ValidationError("k must be positive");
  return Environment(uniform_prior(2), table({{0, k}, {0, k}}),
                     table({{1, 0}, {1, 1}}));
}

Environment make_example2(const Rational& k) {
  if (k <= 0) throw ValidationError("k must be positive");
  return Environment(uniform_prior(2), table({{0, 2 * k, -2 * k}, {3 * k, -k, k}}),
                     table({{1, 0, -2}, {-2, 0, 1}}));
}

Environment make_quadratic(int n, const Rational& b) {
  if (n < 2 || n % 2 != 0) throw ValidationError("n must be an even integer >= 2");
  if (b <= 0) throw ValidationError("bias b must be positive");
  const std::size_t n_actions = static_cast<std::size_t>(n) + 1;
  RationalMatrix u_sender(2, n_actions), u_receiver(2, n_actions);
  std::vector<std::string> action_labels;
  for (std::size_t j = 0; j < n_actions; ++j) {
    Rational a(static_cast<long>(j), n);
    action_labels.push_back(to_string(a));
    for (std::size_t w = 0; w < 2; ++w) {
      Rational omega = static_cast<long>(w);
      u_receiver(w, j) = -(a - omega) * (a - omega);
      u_sender(w, j) = -(a - omega - b) * (a - omega - b);
    }
  }
  return Environment(uniform_prior(2), u_sender, u_receiver, {"0", "1"}, action_labels);
}

Environment make_perturbed_d1(const Rational& k, const Rational& delta, Rng& rng) {
  if (k <= 0 || delta <= 0) throw ValidationError("k and delta must be positive");
  Environment base = make_example1(k);
  RationalMatrix u_sender = base.u_sender();
  RationalMatrix u_receiver = base.u_receiver();
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t a = 0; a < 2; ++a) u_sender(w, a) += rng.uniform(delta);
  }
  // r_11, r_21 <= 0 push Receiver towards a_2; r_12, r_22 >= 0 likewise.
  for (std::size_t w = 0; w < 2; ++w) {
    u_receiver(w, 0) -= rng.uniform(delta);
    u_receiver(w, 1) += rng.uniform(delta);
  }
  return base.with_sender_utility(u_sender).with_receiver_utility(u_receiver);
}

Environment make_perturbed_d2(const Rational& k, const Rational& delta, Rng& rng) {
  if (k <= 0 || delta <= 0) throw ValidationError("k and delta must be positive");
  Environment base = make_example2(k);
  RationalMatrix u_sender = base.u_sender();
  RationalMatrix u_receiver = base.u_receiver();
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t a = 0; a < 3; ++a) u_sender(w, a) += rng.uniform(delta);
  }
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t a = 0; a < 3; ++a) u_receiver(w, a) += rng.uniform(delta);
  }
  return base.with_sender_utility(u_sender).with_receiver_utility(u_receiver);
}

Environment sample_uniform_env(std::size_t n_states, std::size_t n_actions, Rng& rng,
                               std::vector<Rational> prior) {
  require_sizes(n_states, n_actions);
  prior = prior_or_uniform(std::move(prior), n_states);
  RationalMatrix u_sender = uniform_matrix(n_states, n_actions, rng);
  RationalMatrix u_receiver = uniform_matrix(n_states, n_actions, rng);
  return Environment(std::move(prior), std::move(u_sender), std::move(u_receiver));
}

Environment make_transparent_random(std::size_t n_states, std::size_t n_actions,
                                    Rng& rng, std::vector<Rational> prior) {
  require_sizes(n_states, n_actions);
  prior = prior_or_uniform(std::move(prior), n_states);
  std::vector<Rational> v;
  while (true) {
    v.clear();
    for (std::size_t a = 0; a < n_actions; ++a) v.push_back(rng.uniform_unit());
    if (std::set<Rational>(v.begin(), v.end()).size() == n_actions) break;
  }
  RationalMatrix u_sender(n_states, n_actions);
  for (std::size_t w = 0; w < n_states; ++w) {
    for (std::size_t a = 0; a < n_actions; ++a) u_sender(w, a) = v[a];
  }
  RationalMatrix u_receiver = uniform_matrix(n_states, n_actions, rng);
  return Environment(std::move(prior), std::move(u_sender), std::move(u_receiver));
}

Environment sample_supermodular_env(std::size_t n_states, std::size_t n_actions,
                                    Rng& rng, std::vector<Rational> prior) {
  require_sizes(n_states, n_actions);
  prior = prior_or_uniform(std::move(prior), n_states);
  // u(w, a) = sum_{w' <= w, a' <= a} inc(w', a'); the cross difference of
  // adjacent cells is inc(w + 1, a + 1) > 0.
  RationalMatrix u_sender(n_states, n_actions);
  for (std::size_t w = 0; w < n_states; ++w) {
    for (std::size_t a = 0; a < n_actions; ++a) {
      Rational increment;
      do {
        increment = rng.uniform_unit();
      } while (increment == 0);
      if (w == 0 || a == 0) increment -= Rational(1, 2);  // margins may be negative
      Rational value = increment;
      if (w > 0) value += u_sender(w - 1, a);
      if (a > 0) value += u_sender(w, a - 1);
      if (w > 0 && a > 0) value -= u_sender(w - 1, a - 1);
      u_sender(w, a) = value;
    }
  }
  RationalMatrix u_receiver = uniform_matrix(n_states, n_actions, rng);
  return Environment(std::move(prior), std::move(u_sender), std::move(u_receiver));
}

}  // namespace persuade

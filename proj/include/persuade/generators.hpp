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

#ifndef PERSUADE_GENERATORS_HPP_
#define PERSUADE_GENERATORS_HPP_

#include <cstddef>
#include <vector>

#include "persuade/core.hpp"
#include "persuade/random.hpp"

namespace persuade {

std::vector<Rational> uniform_prior(std::size_t n_states);

// Prosecutor (Sender) and judge (Receiver). States {innocent, guilty},
// actions {acquit, convict}; the judge convicts iff P(guilty) >= 1/2 and the
// prosecutor always wants a conviction.
Environment make_prosecutor(const Rational& prior_guilt);

// Two states, two actions, uniform prior. Receiver is indifferent between the
// actions in the second state, so partitional-unique-response fails.
Environment make_example1(const Rational& k);

// Two states, three actions, uniform prior; violates scant-indifferences.
Environment make_example2(const Rational& k);

// Binary-state quadratic loss with constant bias b, actions {0, 1/n, ..., 1},
// equiprobable states {0, 1}. n must be even and >= 2, b > 0.
Environment make_quadratic(int n, const Rational& b);

// Example-1 tables perturbed inside the box s_ij in [0, delta],
// r_11, r_21 in [-delta, 0], r_12, r_22 in [0, delta].
Environment make_perturbed_d1(const Rational& k, const Rational& delta, Rng& rng);

// Example-2 tables with every s_ij, r_ij drawn from [0, delta].
Environment make_perturbed_d2(const Rational& k, const Rational& delta, Rng& rng);

// Every utility uniform on [0, 1] (53-bit dyadic). Sender's matrix is drawn
// first, row by row, then Receiver's. Empty prior means uniform.
Environment sample_uniform_env(std::size_t n_states, std::size_t n_actions, Rng& rng,
                               std::vector<Rational> prior = {});

// State-independent Sender utility v(a) replicated across states; v is
// redrawn until its entries are pairwise distinct.
Environment make_transparent_random(std::size_t n_states, std::size_t n_actions,
                                    Rng& rng, std::vector<Rational> prior = {});

// Sender utility strictly supermodular in the natural orders: double
// cumulative sums of strictly positive increments. Receiver utility uniform.
Environment sample_supermodular_env(std::size_t n_states, std::size_t n_actions,
                                    Rng& rng, std::vector<Rational> prior = {});

}  // namespace persuade

#endif  // PERSUADE_GENERATORS_HPP_

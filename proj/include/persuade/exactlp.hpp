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

#ifndef PERSUADE_EXACTLP_HPP_
#define PERSUADE_EXACTLP_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "persuade/rational.hpp"

namespace persuade::exactlp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective . x subject to the constraints; variable j is
// restricted to x_j >= 0 iff nonneg[j] (default: all nonnegative).
struct LinearProgram {
  std::size_t n_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<bool> nonneg;

  explicit LinearProgram(std::size_t n = 0)
      : n_vars(n), objective(n), nonneg(n, true) {}

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* to_string(Status status);

struct LpSolution {
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> point;
  // Structural columns of the final basis (indices into the internal
  // standard form; split free variables count twice).
  std::vector<std::size_t> basis;
  // Optimal: one multiplier per constraint; dual-feasible with dual value ==
  // value.
  std::vector<Rational> dual;
  // Infeasible: row multipliers y with the dual sign pattern, A^T y >= 0 and
  // b.y < 0.
  std::vector<Rational> farkas;
  // Unbounded: `point` is feasible and `ray` an improving recession direction.
  std::vector<Rational> ray;
};

// Two-phase dense simplex over exact integers (fraction-free pivoting) with
// Bland's rule. The returned point is a basic feasible solution. Every result
// is certified before returning (dual solution, Farkas multipliers or an
// improving ray); a failed certificate throws std::logic_error.
LpSolution solve(const LinearProgram& lp);

// Exact primal feasibility of `point`.
bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& point);

// Optimal: primal feasibility, dual feasibility of `solution.dual`, sign
// conditions and equal objective values. Infeasible: the Farkas conditions.
// Unbounded: a feasible point and an improving recession direction.
bool verify_certificate(const LinearProgram& lp, const LpSolution& solution);

struct SolverStats {
  std::uint64_t solves = 0;
  std::uint64_t certified = 0;
  std::uint64_t pivots = 0;
};

// Process-wide counters; the only shared state in this module.
SolverStats solver_stats();

}  // namespace persuade::exactlp

#endif  // PERSUADE_EXACTLP_HPP_

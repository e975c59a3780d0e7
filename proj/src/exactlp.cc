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

#include "persuade/exactlp.hpp"

#include <atomic>
#include <limits>
#include <optional>
#include <stdexcept>

#include "persuade/error.hpp"

namespace persuade::exactlp {
namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_certified{0};
std::atomic<std::uint64_t> g_pivots{0};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

enum class ColumnKind { kStructural, kSlack, kArtificial };

// Integer tableau in the fraction-free (Edmonds/Bareiss) representation: the
// true tableau is rows / denom. Rows [0, m) are constraints, row m is the
// phase-two objective and row m + 1 the phase-one objective. Objective rows
// hold c_B B^-1 A - c, so a negative entry marks an improving column.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n)
      : m_(m), n_(n), cells_((m + 2) * (n + 1)), denom_(1), basis_(m, kNone) {}

  Integer& at(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }
  const Integer& at(std::size_t i, std::size_t j) const {
    return cells_[i * (n_ + 1) + j];
  }
  Integer& rhs(std::size_t i) { return at(i, n_); }
  const Integer& rhs(std::size_t i) const { return at(i, n_); }
  const Integer& denom() const { return denom_; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t phase2_row() const { return m_; }
  std::size_t phase1_row() const { return m_ + 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Integer p = at(r, c);
    Integer tmp;
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      const Integer factor = at(i, c);
      for (std::size_t j = 0; j <= n_; ++j) {
        Integer& cell = at(i, j);
        if (factor == 0) {
          if (cell == 0) continue;
          tmp = cell * p;
        } else {
          tmp = cell * p;
          tmp -= factor * at(r, j);
        }
        mpz_divexact(cell.backend().data(), tmp.backend().data(),
                     denom_.backend().data());
      }
    }
    denom_ = p;
    if (denom_ < 0) {
      for (Integer& cell : cells_) cell = -cell;
      denom_ = -denom_;
    }
    basis_[r] = c;
    g_pivots.fetch_add(1, std::memory_order_relaxed);
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Integer> cells_;
  Integer denom_;
  std::vector<std::size_t> basis_;
};

// Bland's rule: lowest-index improving column, then the minimum-ratio row
// whose basic variable has the lowest index.
enum class StepResult { kOptimal, kUnbounded, kPivoted };

StepResult bland_step(Tableau& t, std::size_t objective_row,
                      const std::vector<ColumnKind>& kinds, std::size_t* unbounded_col = nullptr) {
  std::size_t entering = kNone;
  for (std::size_t j = 0; j < t.cols(); ++j) {
    if (kinds[j] == ColumnKind::kArtificial) continue;
    if (t.at(objective_row, j) < 0) {
      entering = j;
      break;
    }
  }
  if (entering == kNone) return StepResult::kOptimal;

  std::size_t leaving = kNone;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const Integer& a = t.at(i, entering);
    if (a <= 0) continue;
    if (leaving == kNone) {
      leaving = i;
      continue;
    }
    // Compare rhs_i / a_i with rhs_l / a_l by cross multiplication.
    const Integer lhs = t.rhs(i) * t.at(leaving, entering);
    const Integer rhs = t.rhs(leaving) * a;
    if (lhs < rhs || (lhs == rhs && t.basis()[i] < t.basis()[leaving])) leaving = i;
  }
  if (leaving == kNone) {
    if (unbounded_col != nullptr) *unbounded_col = entering;
    return StepResult::kUnbounded;
  }
  t.pivot(leaving, entering);
  return StepResult::kPivoted;
}

Integer integer_scale(const std::vector<Rational>& values, const Rational& extra) {
  std::vector<Rational> all(values);
  all.push_back(extra);
  return common_denominator(all);
}

Integer to_integer(const Rational& r) {
  // Caller guarantees the value is integral.
  return boost::multiprecision::numerator(r);
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
  }
  return "unknown";
}

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.n_vars) return false;
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    if (lp.nonneg[j] && point[j] < 0) return false;
  }
  for (const Constraint& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < lp.n_vars; ++j) {
      if (c.coefficients[j] != 0 && point[j] != 0) lhs += c.coefficients[j] * point[j];
    }
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Row activity A_i x.
Rational activity(const Constraint& c, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (c.coefficients[j] != 0 && x[j] != 0) lhs += c.coefficients[j] * x[j];
  }
  return lhs;
}

bool sign_ok(Relation relation, const Rational& y) {
  if (relation == Relation::kLessEqual) return y >= 0;
  if (relation == Relation::kGreaterEqual) return y <= 0;
  return true;
}

bool verify_optimal(const LinearProgram& lp, const LpSolution& solution) {
  if (!is_feasible(lp, solution.point)) return false;
  if (solution.dual.size() != lp.constraints.size()) return false;

  Rational primal = 0;
  for (std::size_t j = 0; j < lp.n_vars; ++j) primal += lp.objective[j] * solution.point[j];
  if (primal != solution.value) return false;

  Rational dual_value = 0;
  std::vector<Rational> reduced(lp.n_vars);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& c = lp.constraints[i];
    const Rational& y = solution.dual[i];
    if (!sign_ok(c.relation, y)) return false;
    if (y == 0) continue;
    dual_value += y * c.rhs;
    for (std::size_t j = 0; j < lp.n_vars; ++j) {
      if (c.coefficients[j] != 0) reduced[j] += y * c.coefficients[j];
    }
  }
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    if (lp.nonneg[j] ? reduced[j] < lp.objective[j] : reduced[j] != lp.objective[j]) {
      return false;
    }
  }
  return dual_value == primal;
}

// Farkas: y with the dual sign pattern, A^T y >= 0 (== 0 on free columns) and
// b.y < 0. Any feasible x would give 0 <= y.Ax <= y.b < 0.
bool verify_infeasible(const LinearProgram& lp, const LpSolution& solution) {
  if (solution.farkas.size() != lp.constraints.size()) return false;
  Rational yb = 0;
  std::vector<Rational> aty(lp.n_vars);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& c = lp.constraints[i];
    const Rational& y = solution.farkas[i];
    if (!sign_ok(c.relation, y)) return false;
    if (y == 0) continue;
    yb += y * c.rhs;
    for (std::size_t j = 0; j < lp.n_vars; ++j) {
      if (c.coefficients[j] != 0) aty[j] += y * c.coefficients[j];
    }
  }
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    if (lp.nonneg[j] ? aty[j] < 0 : aty[j] != 0) return false;
  }
  return yb < 0;
}

// A feasible point plus a recession direction that improves the objective.
bool verify_unbounded(const LinearProgram& lp, const LpSolution& solution) {
  if (!is_feasible(lp, solution.point)) return false;
  if (solution.ray.size() != lp.n_vars) return false;
  Rational gain = 0;
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    if (lp.nonneg[j] && solution.ray[j] < 0) return false;
    gain += lp.objective[j] * solution.ray[j];
  }
  for (const Constraint& c : lp.constraints) {
    const Rational d = activity(c, solution.ray);
    if (c.relation == Relation::kLessEqual && d > 0) return false;
    if (c.relation == Relation::kGreaterEqual && d < 0) return false;
    if (c.relation == Relation::kEqual && d != 0) return false;
  }
  return gain > 0;
}

}  // namespace

bool verify_certificate(const LinearProgram& lp, const LpSolution& solution) {
  switch (solution.status) {
    case Status::kOptimal: return verify_optimal(lp, solution);
    case Status::kInfeasible: return verify_infeasible(lp, solution);
    case Status::kUnbounded: return verify_unbounded(lp, solution);
  }
  return false;
}

LpSolution solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.n_vars || lp.nonneg.size() != lp.n_vars) {
    throw ValidationError("objective / sign flags do not match n_vars");
  }
  for (const Constraint& c : lp.constraints) {
    if (c.coefficients.size() != lp.n_vars) {
      throw ValidationError("constraint length does not match n_vars");
    }
  }
  g_solves.fetch_add(1, std::memory_order_relaxed);

  const std::size_t m = lp.constraints.size();

  // Structural columns; free variables are split into x+ and x-.
  std::vector<std::size_t> positive_col(lp.n_vars), negative_col(lp.n_vars, kNone);
  std::vector<ColumnKind> kinds;
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    positive_col[j] = kinds.size();
    kinds.push_back(ColumnKind::kStructural);
    if (!lp.nonneg[j]) {
      negative_col[j] = kinds.size();
      kinds.push_back(ColumnKind::kStructural);
    }
  }

  // Normalize each row to a nonnegative right-hand side.
  std::vector<int> row_sign(m, 1);
  std::vector<Relation> relation(m);
  for (std::size_t i = 0; i < m; ++i) {
    relation[i] = lp.constraints[i].relation;
    if (lp.constraints[i].rhs < 0) {
      row_sign[i] = -1;
      if (relation[i] == Relation::kLessEqual) {
        relation[i] = Relation::kGreaterEqual;
      } else if (relation[i] == Relation::kGreaterEqual) {
        relation[i] = Relation::kLessEqual;
      }
    }
  }

  std::vector<std::size_t> slack_col(m, kNone), identity_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    if (relation[i] != Relation::kEqual) {
      slack_col[i] = kinds.size();
      kinds.push_back(ColumnKind::kSlack);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (relation[i] == Relation::kLessEqual) {
      identity_col[i] = slack_col[i];
    } else {
      identity_col[i] = kinds.size();
      kinds.push_back(ColumnKind::kArtificial);
    }
  }

  Tableau t(m, kinds.size());
  std::vector<Integer> row_scale(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = lp.constraints[i];
    row_scale[i] = integer_scale(c.coefficients, c.rhs);
    const Rational factor = Rational(row_scale[i]) * row_sign[i];
    for (std::size_t j = 0; j < lp.n_vars; ++j) {
      if (c.coefficients[j] == 0) continue;
      Integer v = to_integer(c.coefficients[j] * factor);
      t.at(i, positive_col[j]) = v;
      if (negative_col[j] != kNone) t.at(i, negative_col[j]) = -v;
    }
    t.rhs(i) = to_integer(c.rhs * factor);
    if (slack_col[i] != kNone) {
      t.at(i, slack_col[i]) = relation[i] == Relation::kLessEqual ? 1 : -1;
    }
    t.at(i, identity_col[i]) = 1;
    t.basis()[i] = identity_col[i];
  }

  const Integer objective_scale = integer_scale(lp.objective, Rational(0));
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    Integer v = to_integer(lp.objective[j] * objective_scale);
    t.at(t.phase2_row(), positive_col[j]) = -v;
    if (negative_col[j] != kNone) t.at(t.phase2_row(), negative_col[j]) = v;
  }
  // Phase one maximizes -(sum of artificials), priced out against the
  // artificial rows.
  for (std::size_t i = 0; i < m; ++i) {
    if (kinds[identity_col[i]] != ColumnKind::kArtificial) continue;
    for (std::size_t j = 0; j <= t.cols(); ++j) {
      if (kinds.size() > j && kinds[j] == ColumnKind::kArtificial) continue;
      t.at(t.phase1_row(), j) -= t.at(i, j);
    }
  }

  LpSolution solution;
  auto certify = [&] {
    if (!verify_certificate(lp, solution)) {
      throw std::logic_error(std::string("exact LP certificate check failed (") +
                             to_string(solution.status) + ")");
    }
    g_certified.fetch_add(1, std::memory_order_relaxed);
  };
  // Row multipliers in the caller's units from an objective row of the form
  // y'A - c: identity column i holds y'_i - c_i, where c_i is -1 for a
  // phase-one artificial and 0 otherwise.
  auto row_multipliers = [&](std::size_t objective_row, const Integer& scale, bool phase1) {
    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational v(t.at(objective_row, identity_col[i]), t.denom() * scale);
      if (phase1 && kinds[identity_col[i]] == ColumnKind::kArtificial) v -= 1;
      y[i] = v * row_scale[i] * row_sign[i];
    }
    return y;
  };
  auto basic_point = [&] {
    std::vector<Rational> column_value(kinds.size());
    for (std::size_t i = 0; i < m; ++i) {
      column_value[t.basis()[i]] = Rational(t.rhs(i), t.denom());
    }
    std::vector<Rational> x(lp.n_vars);
    for (std::size_t j = 0; j < lp.n_vars; ++j) {
      x[j] = column_value[positive_col[j]];
      if (negative_col[j] != kNone) x[j] -= column_value[negative_col[j]];
    }
    return x;
  };

  StepResult step;
  while ((step = bland_step(t, t.phase1_row(), kinds)) == StepResult::kPivoted) {
  }
  if (t.rhs(t.phase1_row()) != 0) {
    solution.status = Status::kInfeasible;
    solution.farkas = row_multipliers(t.phase1_row(), Integer(1), true);
    certify();
    return solution;
  }
  // Drive zero-level artificials out of the basis where possible; rows with
  // no structural entry are redundant and keep their artificial at zero.
  for (std::size_t i = 0; i < m; ++i) {
    if (kinds[t.basis()[i]] != ColumnKind::kArtificial) continue;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (kinds[j] != ColumnKind::kArtificial && t.at(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  std::size_t ray_col = kNone;
  while ((step = bland_step(t, t.phase2_row(), kinds, &ray_col)) == StepResult::kPivoted) {
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (kinds[t.basis()[i]] == ColumnKind::kStructural) {
      solution.basis.push_back(t.basis()[i]);
    }
  }
  solution.point = basic_point();
  if (step == StepResult::kUnbounded) {
    // Raise the entering column; basic columns move by minus its entries.
    solution.status = Status::kUnbounded;
    std::vector<Rational> direction(kinds.size());
    direction[ray_col] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      direction[t.basis()[i]] = -Rational(t.at(i, ray_col), t.denom());
    }
    solution.ray.resize(lp.n_vars);
    for (std::size_t j = 0; j < lp.n_vars; ++j) {
      solution.ray[j] = direction[positive_col[j]];
      if (negative_col[j] != kNone) solution.ray[j] -= direction[negative_col[j]];
    }
    certify();
    return solution;
  }

  solution.status = Status::kOptimal;
  solution.value = 0;
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    solution.value += lp.objective[j] * solution.point[j];
  }
  solution.dual = row_multipliers(t.phase2_row(), objective_scale, false);
  certify();
  return solution;
}

SolverStats solver_stats() {
  return SolverStats{g_solves.load(), g_certified.load(), g_pivots.load()};
}

}  // namespace persuade::exactlp

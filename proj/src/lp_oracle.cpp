// Copyright 2026 The mbprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbprice/lp_oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "mbprice/lpos.hpp"
#include "mbprice/matrix.hpp"

namespace mbprice::lp {
namespace {

// Dense simplex tableau for: minimize w^T x subject to A x = rhs, x >= 0,
// kept in canonical form with respect to the current basis.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : a_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_.front().size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& objective() const { return objective_; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

  void set_costs(const std::vector<Rational>& costs) {
    reduced_ = costs;
    objective_ = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = costs[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c < cols(); ++c) reduced_[c] -= cb * a_[r][c];
      objective_ += cb * rhs_[r];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a_[r][c];
    for (auto& v : a_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k == r || sgn(a_[k][c]) == 0) continue;
      const Rational factor = a_[k][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[r][j]) != 0) a_[k][j] -= factor * a_[r][j];
      }
      rhs_[k] -= factor * rhs_[r];
    }
    if (!reduced_.empty() && sgn(reduced_[c]) != 0) {
      const Rational factor = reduced_[c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[r][j]) != 0) reduced_[j] -= factor * a_[r][j];
      }
      objective_ += factor * rhs_[r];
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest-index improving column enters; among minimum-ratio
  // rows the one whose basic variable has the lowest index leaves. Columns
  // at or beyond `allowed` never enter. Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (sgn(reduced_[c]) < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(a_[r][c]) <= 0) continue;
        const Rational ratio = rhs_[r] / a_[r][c];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, c);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_;
};

struct StandardForm {
  Matrix a;                  // rows ell_0..ell_m, one column per lattice element
  std::vector<Rational> rhs;  // (1, b(1), ..., b(m))
};

StandardForm standard_form(const PolytopeSpec& spec) {
  const int m = spec.m();
  StandardForm form{lattice::ell_matrix(m), std::vector<Rational>(static_cast<std::size_t>(m) + 1)};
  for (int i = 0; i <= m; ++i) form.rhs[static_cast<std::size_t>(i)] = spec.b_at(i);
  return form;
}

}  // namespace

LpSolution solve(const LpProblem& problem, const LpOptions& options) {
  const PolytopeSpec& spec = problem.spec;
  const int m = spec.m();
  if (m > options.max_assets) {
    throw std::domain_error("LP oracle limited to m <= " + std::to_string(options.max_assets));
  }
  if (problem.objective.m() != m) throw std::invalid_argument("objective and polytope dimensions differ");

  const StandardForm form = standard_form(spec);
  const std::size_t n_rows = form.a.rows();
  const std::size_t n_vars = form.a.cols();
  const std::size_t n_cols = n_vars + n_rows;

  // Phase 1: one artificial per row, rows sign-adjusted so rhs >= 0.
  std::vector<std::vector<Rational>> rows(n_rows, std::vector<Rational>(n_cols));
  std::vector<Rational> rhs(n_rows);
  std::vector<std::size_t> basis(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const int sign = sgn(form.rhs[r]) < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n_vars; ++c) rows[r][c] = sign * form.a(r, c);
    rows[r][n_vars + r] = 1;
    rhs[r] = sign * form.rhs[r];
    basis[r] = n_vars + r;
  }
  Tableau tableau(std::move(rows), std::move(rhs), std::move(basis));
  std::vector<Rational> phase1_costs(n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) phase1_costs[n_vars + r] = 1;
  tableau.set_costs(phase1_costs);
  tableau.optimize(n_cols);

  LpSolution solution;
  if (sgn(tableau.objective()) > 0) {
    solution.status = Status::infeasible;
    return solution;
  }

  // Pivot remaining (zero-level) artificials out; a row with no structural
  // entry is redundant and dropped.
  for (std::size_t r = 0; r < tableau.rows();) {
    if (tableau.basis()[r] < n_vars) {
      ++r;
      continue;
    }
    std::optional<std::size_t> column;
    for (std::size_t c = 0; c < n_vars; ++c) {
      if (sgn(tableau.at(r, c)) != 0) {
        column = c;
        break;
      }
    }
    if (column) {
      tableau.pivot(r, *column);
      ++r;
    } else {
      tableau.drop_row(r);
    }
  }

  // Phase 2 minimises -objective when maximising.
  const int sense = problem.direction == Direction::maximize ? -1 : 1;
  std::vector<Rational> costs(n_cols);
  for (std::size_t c = 0; c < n_vars; ++c) costs[c] = sense * problem.objective[c];
  tableau.set_costs(costs);
  if (!tableau.optimize(n_vars)) throw std::logic_error("LP unbounded over a bounded polytope");

  solution.status = Status::optimal;
  solution.argpoint = LatticeVector(m);
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    solution.argpoint[tableau.basis()[r]] = tableau.rhs(r);
    solution.basis.push_back(static_cast<std::uint32_t>(tableau.basis()[r]));
  }
  std::sort(solution.basis.begin(), solution.basis.end());
  solution.value = inner(problem.objective, solution.argpoint);

  // Multipliers: solve B^T y = c_B on the (full rank) rows of the basis.
  const std::size_t basis_size = solution.basis.size();
  if (basis_size == n_rows) {
    Matrix bt(n_rows, n_rows);
    std::vector<Rational> cb(n_rows);
    for (std::size_t k = 0; k < n_rows; ++k) {
      for (std::size_t r = 0; r < n_rows; ++r) bt(k, r) = form.a(r, solution.basis[k]);
      cb[k] = problem.objective[solution.basis[k]];
    }
    solution.duals = bt.inverse().apply(cb);
  }
  return solution;
}

LpSolution solve(const PolytopeSpec& spec, const LatticeVector& objective, Direction direction,
                 const LpOptions& options) {
  return solve(LpProblem{spec, objective, direction}, options);
}

bool verify_certificate(const LpProblem& problem, const LpSolution& solution) {
  if (solution.status != Status::optimal) return false;
  const PolytopeSpec& spec = problem.spec;
  if (!polytope::contains_primal(spec, solution.argpoint)) return false;
  if (inner(problem.objective, solution.argpoint) != solution.value) return false;
  const StandardForm form = standard_form(spec);
  if (solution.duals.size() != form.a.rows()) return false;
  Rational dual_value = 0;
  for (std::size_t r = 0; r < form.a.rows(); ++r) dual_value += solution.duals[r] * form.rhs[r];
  if (dual_value != solution.value) return false;
  for (std::size_t c = 0; c < form.a.cols(); ++c) {
    Rational column_value = 0;
    for (std::size_t r = 0; r < form.a.rows(); ++r) column_value += solution.duals[r] * form.a(r, c);
    const Rational slack = column_value - problem.objective[c];
    const int s = problem.direction == Direction::maximize ? sgn(slack) : -sgn(slack);
    if (s < 0) return false;
    if (sgn(solution.argpoint[c]) > 0 && s != 0) return false;
  }
  return true;
}

LowerGap minimize_lower_gap(const PolytopeSpec& spec, const LatticeVector& u, const LpOptions& options) {
  if (spec.empty()) throw polytope::EmptyPolytopeError("P(b) is empty: ||b||_inf > 1");
  const auto positivity = lpos::classify(u);
  if (!positivity.positive()) throw std::invalid_argument("u must be ell-positive: " + lpos::to_string(positivity.verdict));
  const LatticeVector objective = lpos::truncate(u);
  const LpSolution solution = solve(spec, objective, Direction::minimize, options);
  LowerGap gap{solution.value, inner(objective, polytope::subvertex(spec).to_vector())};
  if (gap.lp_min < gap.subvertex_bound || sgn(gap.subvertex_bound) < 0) {
    throw std::logic_error("lower-bound chain violated: lp_min=" + to_string(gap.lp_min) +
                           " subvertex_bound=" + to_string(gap.subvertex_bound));
  }
  return gap;
}

}  // namespace mbprice::lp

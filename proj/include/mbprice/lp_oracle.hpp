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

#pragma once

#include <cstdint>
#include <vector>

#include "mbprice/lattice.hpp"
#include "mbprice/polytope.hpp"
#include "mbprice/rational.hpp"

// Exact linear optimisation over P(b). This is the ground truth the closed
// form supervertex/subvertex results are checked against, and the per-node
// solver of the exponential tree algorithm.
namespace mbprice::lp {

using lattice::LatticeVector;
using polytope::PolytopeSpec;

enum class Direction { maximize, minimize };
enum class Status { optimal, infeasible };

struct LpOptions {
  int max_assets = 8;
};

struct LpProblem {
  PolytopeSpec spec;
  LatticeVector objective;
  Direction direction = Direction::maximize;
};

struct LpSolution {
  Status status = Status::infeasible;
  Rational value;
  LatticeVector argpoint;
  // Optimal basis (lattice indices) and the matching multipliers for the
  // rows ell_0..ell_m; together they certify optimality.
  std::vector<std::uint32_t> basis;
  std::vector<Rational> duals;
};

// Two-phase primal simplex with Bland's rule. Throws std::domain_error when
// m exceeds options.max_assets and std::invalid_argument on dimension
// mismatch. Infeasibility (||b||_inf > 1) is reported in the status.
LpSolution solve(const LpProblem& problem, const LpOptions& options = {});
LpSolution solve(const PolytopeSpec& spec, const LatticeVector& objective, Direction direction,
                 const LpOptions& options = {});

// Checks primal feasibility, dual feasibility, complementary slackness and
// equal objective values, all exactly.
bool verify_certificate(const LpProblem& problem, const LpSolution& solution);

struct LowerGap {
  Rational lp_min;           // min <u^+, x> over P(b)
  Rational subvertex_bound;  // <u^+, q_*>
};

// Both sides of min <u^+,x> >= <u^+,q_*> >= 0 for an ell-positive u.
// Throws polytope::EmptyPolytopeError for an empty P(b),
// std::invalid_argument when u is not ell-positive and std::logic_error if
// the inequality chain fails.
LowerGap minimize_lower_gap(const PolytopeSpec& spec, const LatticeVector& u, const LpOptions& options = {});

}  // namespace mbprice::lp

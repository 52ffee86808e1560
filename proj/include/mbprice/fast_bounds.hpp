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
#include <stdexcept>
#include <vector>

#include "mbprice/execution.hpp"
#include "mbprice/polytope.hpp"
#include "mbprice/tree_engine.hpp"

// Polynomial-size evaluation of product-measure expectations of symmetric
// payoffs at the supervertex and subvertex, and the closed-form minimizer
// lower bound for European payoffs.
namespace mbprice::fast {

using polytope::PolytopeSpec;
using polytope::WeightedElement;
using tree::Payoff;
using tree::WordView;

// Raised when the subvertex formula is requested but sum b(i) > 2 - m.
class CriterionViolatedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SumStats {
  std::uint64_t enumerated = 0;  // compositions visited
  std::uint64_t evaluated = 0;   // compositions with nonzero weight
};

struct Expectation {
  Rational value;
  SumStats stats;
};

// E_p(F_{omega-}) for a symmetric F and the product measure of a density p
// supported on `chain`: sum over compositions (i_0..i_m) of k of
// multinomial * prod w_j^{i_j} * F(omega chain_0^{i_0} ... chain_m^{i_m}),
// with 0^0 = 1 and zero-weight terms skipped. Requires |omega| + k = n and
// a symmetric payoff (std::invalid_argument otherwise).
Expectation chain_expectation(const Payoff& payoff, WordView omega, int k, const std::vector<WeightedElement>& chain,
                              Execution execution = Execution::parallel);

// E_{q*}(F_{omega-}). Unsorted b is handled through the general supervertex
// (the decreasing rearrangement is applied to the letters internally).
// Throws polytope::EmptyPolytopeError.
Expectation supervertex_expectation(const Payoff& payoff, const PolytopeSpec& spec, WordView omega, int k,
                                    Execution execution = Execution::parallel);

// E_{q_*}(F_{omega-}); throws CriterionViolatedError when q_* is not in P(b).
Expectation subvertex_expectation(const Payoff& payoff, const PolytopeSpec& spec, WordView omega, int k,
                                  Execution execution = Execution::parallel);

// Numbers defining the minimizer G of a European payoff on P(b):
// beta(0) = 1, beta(i) = b''(i); alpha_j(0) = u_j(nu_0),
// alpha_j(i) = u_j(nu_i) - u_j(nu_0).
struct MinimizerData {
  int m = 0;
  std::vector<Rational> beta;
  std::vector<std::vector<Rational>> alpha;  // alpha[j][i]
  std::vector<Rational> weights;             // s_j
  Rational strike;                           // C
  std::vector<lattice::LatticeVector> factors;
};

// Throws polytope::EmptyPolytopeError or std::invalid_argument (dimension
// mismatch, or a negative beta/alpha, which cannot happen for valid input).
MinimizerData make_minimizer_data(const tree::EuropeanCertificate& certificate, const PolytopeSpec& spec);

// G^(k)(omega) = sum over compositions (k_0..k_m) of k of
// multinomial * prod beta(i)^{k_i} *
// (sum_j s_j prod alpha_j(i)^{k_i} u_j(omega) - C)^+.
Rational minimizer_at_node(const MinimizerData& data, WordView omega, int k,
                           Execution execution = Execution::parallel);

// G^(n) at the root: the lower bound for F_min over Gamma(Lambda^n, b).
Rational minimizer_bound(const MinimizerData& data, int n, Execution execution = Execution::parallel);

}  // namespace mbprice::fast

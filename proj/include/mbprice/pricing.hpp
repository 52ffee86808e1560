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

#include <optional>
#include <string>
#include <vector>

#include "mbprice/execution.hpp"
#include "mbprice/fast_bounds.hpp"
#include "mbprice/polytope.hpp"
#include "mbprice/tree_engine.hpp"

// European basket calls on m assets following independent-label binomial
// moves: asset i is multiplied by U_i (label 0) or D_i (label 1) each step.
namespace mbprice::pricing {

struct Asset {
  Rational spot;  // S_i(0)
  Rational down;  // D_i
  Rational up;    // U_i
};

struct MarketModel {
  int steps = 1;        // n
  Rational growth = 1;  // R, one-step bond growth
  std::vector<Asset> assets;
  Rational strike = 0;  // C
  // Portfolio weights w_i; empty means all ones.
  std::vector<Rational> weights;
  // Scale values by R^-(remaining steps). Off by default: the rational value
  // is the plain conditional expectation of the payoff.
  bool discount = false;

  int m() const { return static_cast<int>(assets.size()); }
  Rational weight(int i) const;

  // Throws std::invalid_argument naming the violated condition:
  // 0 < D_i < R < U_i, S_i(0) > 0, R >= 1, C >= 0, w_i >= 0, n >= 0.
  void validate() const;
};

// b(i) = (2R - U_i - D_i) / (U_i - D_i); strictly inside (-1, 1).
std::vector<Rational> b_from_market(const MarketModel& model);

// u_i = one-step factor of asset i, s_i = w_i S_i(0), strike C.
tree::EuropeanCertificate certificate(const MarketModel& model);

// F(l_1..l_n) = (sum_i w_i S_i(0) prod_j u_i(l_j) - C)^+.
tree::Payoff payoff(const MarketModel& model);

enum class LowerKind { exact, lower_bound };

std::string to_string(LowerKind kind);

struct PriceInterval {
  polytope::PolytopeSpec spec;
  Rational f_max;
  Rational f_min;
  LowerKind f_min_kind;
  polytope::VertexDensity supervertex;
  polytope::VertexDensity subvertex;
  bool criterion_met;
  bool discounted;
};

// [F_min, F_max] over the closure of the risk-neutral measures. The lower
// end is exact when sum b(i) <= 2 - m and the minimizer bound otherwise.
PriceInterval price_interval(const MarketModel& model, Execution execution = Execution::parallel);

struct NodeBounds {
  Rational upper;
  Rational lower;
  LowerKind lower_kind;
};

// Envelope of the option value at the node omega (time |omega|).
NodeBounds option_value_bounds(const MarketModel& model, tree::WordView omega,
                               Execution execution = Execution::parallel);

}  // namespace mbprice::pricing

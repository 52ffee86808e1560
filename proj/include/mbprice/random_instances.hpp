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
#include <random>
#include <vector>

#include "mbprice/lattice.hpp"
#include "mbprice/pricing.hpp"
#include "mbprice/rational.hpp"
#include "mbprice/tree_engine.hpp"

// Seeded generators for small exact instances. Only the raw mt19937_64
// stream is used (no std distributions) so a seed yields the same
// instances on every platform.
namespace mbprice::random {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// Rational p/q with q in 1..max_den and lo <= p/q <= hi.
Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den = 8);

// b in [-1,1]^m, with occasional ties and endpoint values.
std::vector<Rational> random_b(Rng& rng, int m);
// b with sum b(i) <= 2 - m (the subvertex lies in P(b)).
std::vector<Rational> random_b_criterion(Rng& rng, int m);
// b with ||b||_inf > 1.
std::vector<Rational> random_b_empty(Rng& rng, int m);

// ell-positive: a_1..a_m > 0, a_0 free, so truncation usually bites.
lattice::LatticeVector random_ell_positive(Rng& rng, int m);
// ell-positive with nonnegative entries (u = u^+).
lattice::LatticeVector random_nonnegative_ell_positive(Rng& rng, int m);

// Random European payoff data with r factors on Lambda^n; the strike is
// drawn around the typical basket value so truncation is active.
tree::EuropeanCertificate random_european(Rng& rng, int m, int n, int factors);

// Random density supported in P(b): convex combination of LP vertices for
// random objectives. Requires a nonempty P(b) and m <= 8.
lattice::LatticeVector random_point(Rng& rng, const polytope::PolytopeSpec& spec, int vertices = 3);

// Market satisfying 0 < D_i < R < U_i.
pricing::MarketModel random_market(Rng& rng, int m, int n);

}  // namespace mbprice::random

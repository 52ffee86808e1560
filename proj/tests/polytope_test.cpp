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

#include "mbprice/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "mbprice/lp_oracle.hpp"
#include "mbprice/random_instances.hpp"
#include "support/oracles.hpp"

namespace mbprice::polytope {
namespace {

using lattice::Permutation;

std::vector<Rational> q(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

// (1, b) recomputed from parities of the indices.
std::vector<Rational> moments(const LatticeVector& x) {
  const int m = x.m();
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    for (std::uint32_t c = 0; c < x.size(); ++c) out[static_cast<std::size_t>(i)] += testing::parity(c, i, m) * x[c];
  }
  return out;
}

std::vector<Rational> one_and(const std::vector<Rational>& b) {
  std::vector<Rational> out{Rational(1)};
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Permutation random_permutation(random::Rng& rng, int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  for (int k = m - 1; k > 0; --k) {
    std::swap(images[static_cast<std::size_t>(k)], images[static_cast<std::size_t>(random::uniform_int(rng, 0, k))]);
  }
  return Permutation(images);
}

TEST(PolytopeSpec, DerivedCoordinates) {
  EXPECT_EQ(PolytopeSpec(q({"1/2", "1/2", "-1/2", "-1"})).b_prime(), q({"1/4", "0", "1/2", "1/4", "0"}));
  EXPECT_EQ(PolytopeSpec(q({"0", "0", "0"})).b_prime(), q({"1/2", "0", "0", "1/2"}));
  EXPECT_EQ(PolytopeSpec(q({"-1/2", "-1/2"})).b_dprime(), q({"1/2", "1/4", "1/4"}));
}

TEST(PolytopeSpec, EmptinessIsState) {
  EXPECT_FALSE(PolytopeSpec(q({"1", "-1"})).empty());
  const PolytopeSpec empty(q({"3/2", "0"}));
  EXPECT_TRUE(empty.empty());
  EXPECT_THROW(supervertex(empty), EmptyPolytopeError);
  EXPECT_THROW(subvertex(empty), EmptyPolytopeError);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(PolytopeSpec(q({"0"})), LatticeVector(1, q({"1/2", "1/2"}))));
  const PolytopeSpec spec(q({"1/2", "1/2"}));
  EXPECT_FALSE(contains(spec, subvertex(spec).to_vector()));
}

TEST(Supervertex, SingleAsset) {
  random::Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const Rational b = random::uniform_rational(rng, -1, 1, 9);
    const auto x = supervertex(PolytopeSpec({b})).to_vector();
    EXPECT_EQ(x[1], (1 - b) / 2);
    EXPECT_EQ(x[0], (1 + b) / 2);
    EXPECT_EQ(moments(x), one_and({b}));
  }
}

TEST(Supervertex, SymmetricPoint) {
  const auto x = supervertex(PolytopeSpec(q({"0", "0"})));
  ASSERT_EQ(x.support.size(), 2u);
  const auto v = x.to_vector();
  EXPECT_EQ(v[lattice::LatticeElement::from_bits("11")], Rational(1, 2));
  EXPECT_EQ(v[lattice::LatticeElement::from_bits("00")], Rational(1, 2));
}

TEST(Supervertex, UnsortedInputIsPermutedSorted) {
  const auto unsorted = supervertex(PolytopeSpec(q({"-1/2", "1/2"}))).to_vector();
  const auto sorted = supervertex(PolytopeSpec(q({"1/2", "-1/2"}))).to_vector();
  EXPECT_EQ(unsorted, lattice::permute_vector(Permutation::transposition(2, 1, 2), sorted));
  EXPECT_EQ(moments(unsorted), q({"1", "-1/2", "1/2"}));
}

TEST(Supervertex, RandomMomentsWeightsAndVertex) {
  random::Rng rng(2);
  for (int m = 1; m <= 5; ++m) {
    for (int t = 0; t < 25; ++t) {
      const auto b = random::random_b(rng, m);
      const PolytopeSpec spec(b);
      const auto vertex = supervertex(spec);
      Rational total = 0;
      for (const auto& [element, weight] : vertex.support) {
        EXPECT_GT(weight, 0);
        total += weight;
      }
      EXPECT_EQ(total, 1);
      EXPECT_EQ(moments(vertex.to_vector()), one_and(b));
      EXPECT_TRUE(contains(spec, vertex.to_vector()));
      EXPECT_TRUE(is_vertex(spec, vertex.to_vector()));
    }
  }
}

TEST(Supervertex, TieBreakIndependence) {
  random::Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const int m = static_cast<int>(random::uniform_int(rng, 2, 5));
    std::vector<Rational> b;
    for (int i = 0; i < m; ++i) b.push_back(Rational(random::uniform_int(rng, -2, 2)) / 2);
    const PolytopeSpec spec(b);
    auto order = decreasing_order(spec);
    const auto reference = supervertex(spec, order).to_vector();
    // Reverse every run of tied values.
    for (auto it = order.begin(); it != order.end();) {
      auto end = std::find_if(it, order.end(), [&](int i) { return b[i - 1] != b[*it - 1]; });
      std::reverse(it, end);
      it = end;
    }
    EXPECT_EQ(supervertex(spec, order).to_vector(), reference);
  }
}

TEST(Supervertex, RejectsNonDecreasingOrder) {
  const PolytopeSpec spec(q({"1/2", "-1/2"}));
  EXPECT_THROW(supervertex(spec, {2, 1}), std::invalid_argument);
}

TEST(Supervertex, Equivariance) {
  random::Rng rng(4);
  for (int m = 1; m <= 5; ++m) {
    for (int t = 0; t < 15; ++t) {
      const auto b = random::random_b(rng, m);
      const auto sigma = random_permutation(rng, m);
      const auto image = supervertex(PolytopeSpec(lattice::permute_coordinates(sigma, b))).to_vector();
      EXPECT_EQ(image, lattice::permute_vector(sigma, supervertex(PolytopeSpec(b)).to_vector()));
    }
  }
}

TEST(Subvertex, Examples) {
  const PolytopeSpec spec(q({"-1/2", "-1/2"}));
  const auto x = subvertex(spec).to_vector();
  EXPECT_EQ(x[lattice::LatticeElement::from_bits("11")], Rational(1, 2));
  EXPECT_EQ(x[lattice::LatticeElement::from_bits("01")], Rational(1, 4));
  EXPECT_EQ(x[lattice::LatticeElement::from_bits("10")], Rational(1, 4));
  EXPECT_TRUE(subvertex_in_polytope(spec));
  EXPECT_EQ(inner(lattice::ell(1, 2), x), Rational(-1, 2));

  const PolytopeSpec single(q({"0"}));
  EXPECT_TRUE(subvertex_in_polytope(single));
  EXPECT_EQ(subvertex(single).to_vector(), supervertex(single).to_vector());

  const PolytopeSpec outside(q({"1/2", "1/2"}));
  EXPECT_EQ(outside.b_dprime()[0], Rational(-1, 2));
  EXPECT_FALSE(subvertex_in_polytope(outside));
}

TEST(Subvertex, CriterionExactness) {
  random::Rng rng(5);
  for (int m = 1; m <= 5; ++m) {
    for (int t = 0; t < 40; ++t) {
      const auto b = (t % 2) ? random::random_b(rng, m) : random::random_b_criterion(rng, m);
      const PolytopeSpec spec(b);
      const auto x = subvertex(spec).to_vector();
      EXPECT_EQ(moments(x), one_and(b));
      const bool member = std::all_of(x.entries().begin(), x.entries().end(), [](const Rational& v) { return sgn(v) >= 0; });
      EXPECT_EQ(subvertex_in_polytope(spec), member);
      EXPECT_EQ(subvertex_in_polytope(spec), contains(spec, x));
      if (member) EXPECT_TRUE(is_vertex(spec, x));
    }
  }
}

TEST(IsVertex, BarycenterIsNot) {
  const PolytopeSpec spec(q({"0", "0"}));
  const LatticeVector uniform(2, q({"1/4", "1/4", "1/4", "1/4"}));
  ASSERT_TRUE(contains(spec, uniform));
  EXPECT_FALSE(is_vertex(spec, uniform));
  EXPECT_THROW(is_vertex(spec, LatticeVector(2, q({"1", "0", "0", "0"}))), std::invalid_argument);
}

TEST(IsVertex, LpOptimaAreVertices) {
  random::Rng rng(6);
  for (int m = 2; m <= 4; ++m) {
    for (int t = 0; t < 10; ++t) {
      const PolytopeSpec spec(random::random_b(rng, m));
      LatticeVector objective(m);
      for (std::size_t c = 0; c < objective.size(); ++c) objective[c] = random::uniform_rational(rng, -3, 3, 3);
      const auto solution = lp::solve(spec, objective, lp::Direction::maximize);
      EXPECT_TRUE(is_vertex(spec, solution.argpoint));
    }
  }
}

TEST(Polytope, FibersAreDisjoint) {
  random::Rng rng(8);
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t < 10; ++t) {
      const auto b = random::random_b(rng, m);
      auto other = random::random_b(rng, m);
      if (other == b) other[0] = b[0] == 1 ? Rational(0) : Rational(1);
      const auto point = random::random_point(rng, PolytopeSpec(b));
      EXPECT_TRUE(contains(PolytopeSpec(b), point));
      EXPECT_TRUE(contains_primal(PolytopeSpec(b), point));
      EXPECT_FALSE(contains(PolytopeSpec(other), point));
    }
  }
}

TEST(Polytope, InfinityNormCharacterisesEmptiness) {
  random::Rng rng(9);
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t < 10; ++t) {
      EXPECT_TRUE(PolytopeSpec(random::random_b_empty(rng, m)).empty());
      EXPECT_FALSE(PolytopeSpec(random::random_b(rng, m)).empty());
    }
  }
}

}  // namespace
}  // namespace mbprice::polytope

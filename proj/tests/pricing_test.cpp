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

#include "mbprice/pricing.hpp"

#include "gtest/gtest.h"
#include "mbprice/lpos.hpp"
#include "mbprice/random_instances.hpp"
#include "support/oracles.hpp"

namespace mbprice::pricing {
namespace {

using lattice::LatticeElement;
using tree::Word;

MarketModel crr(int n) {
  MarketModel model;
  model.steps = n;
  model.assets = {{100, Rational(1, 2), 2}};
  model.strike = 100;
  return model;
}

TEST(BFromMarket, Examples) {
  EXPECT_EQ(b_from_market(crr(1)), std::vector<Rational>{Rational(-1, 3)});
  MarketModel model = crr(1);
  model.growth = Rational(5, 4);
  model.assets[0].down = Rational(1, 2);
  model.assets[0].up = 2;
  EXPECT_EQ(b_from_market(model)[0], 0);
}

TEST(Validate, RejectsBadMarkets) {
  MarketModel model = crr(1);
  model.assets[0].down = 1;
  try {
    model.validate();
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("0 < D < R < U"), std::string::npos);
  }
  model = crr(1);
  model.growth = Rational(9, 10);
  EXPECT_THROW(model.validate(), std::invalid_argument);
  model = crr(1);
  model.strike = -1;
  EXPECT_THROW(model.validate(), std::invalid_argument);
  model = crr(1);
  model.weights = {1, 1};
  EXPECT_THROW(model.validate(), std::invalid_argument);
}

TEST(Payoff, SingleAssetSingleStep) {
  const auto f = payoff(crr(1));
  EXPECT_EQ(f(Word{LatticeElement(1, 0)}), 100);
  EXPECT_EQ(f(Word{LatticeElement(1, 1)}), 0);
  EXPECT_TRUE(f.symmetric());
}

TEST(Payoff, ZeroStrikeIsBasketValue) {
  random::Rng rng(61);
  auto model = random::random_market(rng, 3, 2);
  model.strike = 0;
  const auto f = payoff(model);
  for (std::uint64_t i = 0; i < 64; i += 5) {
    const Word w = tree::word_from_index(i, 2, 3);
    Rational expected = 0;
    for (int a = 0; a < 3; ++a) {
      Rational value = model.assets[static_cast<std::size_t>(a)].spot;
      for (const auto& letter : w) value *= letter(a + 1) ? model.assets[static_cast<std::size_t>(a)].down : model.assets[static_cast<std::size_t>(a)].up;
      expected += value;
    }
    EXPECT_EQ(f(w), expected);
    EXPECT_EQ(f(Word{w[1], w[0]}), f(w));
  }
}

TEST(PriceInterval, CrrDegeneration) {
  for (int n = 1; n <= 10; ++n) {
    const auto interval = price_interval(crr(n));
    const Rational expected = testing::crr_call(100, Rational(1, 2), 2, 1, 100, n);
    EXPECT_EQ(interval.f_max, expected) << n;
    EXPECT_EQ(interval.f_min, expected) << n;
    EXPECT_EQ(interval.f_min_kind, LowerKind::exact);
  }
  EXPECT_EQ(price_interval(crr(1)).f_max, Rational(100, 3));
}

TEST(PriceInterval, DiscountIsOptIn) {
  MarketModel model = crr(3);
  model.growth = Rational(11, 10);
  const auto plain = price_interval(model);
  model.discount = true;
  const auto discounted = price_interval(model);
  EXPECT_FALSE(plain.discounted);
  EXPECT_TRUE(discounted.discounted);
  EXPECT_EQ(discounted.f_max, plain.f_max / pow(Rational(11, 10), 3));
  EXPECT_EQ(discounted.f_max, testing::crr_call(100, Rational(1, 2), 2, Rational(11, 10), 100, 3) / pow(Rational(11, 10), 3));
}

TEST(Martingale, VerticesAndSampledPoints) {
  random::Rng rng(62);
  for (int t = 0; t < 40; ++t) {
    const int m = static_cast<int>(random::uniform_int(rng, 1, 4));
    const auto model = random::random_market(rng, m, 1);
    const polytope::PolytopeSpec spec(b_from_market(model));
    const auto top = polytope::supervertex(spec).to_vector();
    const auto point = random::random_point(rng, spec, 2);
    for (int i = 1; i <= m; ++i) {
      const auto& a = model.assets[static_cast<std::size_t>(i - 1)];
      const auto u = lpos::one_step_factor(i, a.down, a.up, m);
      EXPECT_EQ(inner(u, top), model.growth);
      EXPECT_EQ(inner(u, point), model.growth);
      if (polytope::subvertex_in_polytope(spec)) EXPECT_EQ(inner(u, polytope::subvertex(spec).to_vector()), model.growth);
    }
  }
}

TEST(PriceInterval, ZeroStrikeFactorises) {
  random::Rng rng(63);
  for (int m = 1; m <= 4; ++m) {
    auto model = random::random_market(rng, m, 6);
    model.strike = 0;
    Rational expected = 0;
    for (const auto& a : model.assets) expected += a.spot * pow(model.growth, 6);
    EXPECT_EQ(price_interval(model).f_max, expected);
  }
}

TEST(PriceInterval, MonotoneInStrike) {
  random::Rng rng(64);
  for (int t = 0; t < 10; ++t) {
    const int m = static_cast<int>(random::uniform_int(rng, 1, 3));
    auto model = random::random_market(rng, m, 4);
    const auto low = price_interval(model);
    model.strike += random::uniform_rational(rng, 1, 50, 2);
    const auto high = price_interval(model);
    EXPECT_LE(high.f_max, low.f_max);
    EXPECT_LE(high.f_min, low.f_min);
    EXPECT_LE(low.f_min, low.f_max);
  }
}

// Widening [D_i, U_i] around R is a mean preserving spread, so the upper end
// cannot fall. The lower end moves too (already at m = 1), so only f_max is
// compared.
TEST(PriceInterval, UpperEndGrowsUnderWiderMoves) {
  random::Rng rng(65);
  for (int t = 0; t < 10; ++t) {
    const int m = static_cast<int>(random::uniform_int(rng, 1, 3));
    auto model = random::random_market(rng, m, 3);
    const auto narrow = price_interval(model);
    for (auto& a : model.assets) {
      a.down *= Rational(4, 5);
      a.up *= Rational(6, 5);
    }
    const auto wide = price_interval(model);
    EXPECT_GE(wide.f_max, narrow.f_max);
  }
}

TEST(OptionValueBounds, TerminalRootAndSymmetry) {
  random::Rng rng(66);
  const auto model = random::random_market(rng, 2, 3);
  const auto f = payoff(model);
  const Word full{LatticeElement(2, 1), LatticeElement(2, 3), LatticeElement(2, 0)};
  const auto terminal = option_value_bounds(model, full);
  EXPECT_EQ(terminal.upper, f(full));
  EXPECT_EQ(terminal.lower, f(full));
  EXPECT_EQ(option_value_bounds(model, {}).upper, price_interval(model).f_max);
  const auto a = option_value_bounds(model, Word{LatticeElement(2, 1), LatticeElement(2, 2)});
  const auto b = option_value_bounds(model, Word{LatticeElement(2, 2), LatticeElement(2, 1)});
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_LE(a.lower, a.upper);
}

TEST(PriceInterval, AgreesWithTreeOracle) {
  random::Rng rng(67);
  for (int m = 1; m <= 3; ++m) {
    const int n = m == 1 ? 5 : 3;
    const auto model = random::random_market(rng, m, n);
    const auto interval = price_interval(model);
    const auto hi = tree::tree_extremum(payoff(model), interval.spec, lp::Direction::maximize);
    const auto lo = tree::tree_extremum(payoff(model), interval.spec, lp::Direction::minimize);
    EXPECT_EQ(interval.f_max, hi.value);
    if (interval.criterion_met) {
      EXPECT_EQ(interval.f_min, lo.value);
      EXPECT_EQ(interval.f_min_kind, LowerKind::exact);
    } else {
      EXPECT_LE(interval.f_min, lo.value);
      EXPECT_EQ(interval.f_min_kind, LowerKind::lower_bound);
    }
  }
}

}  // namespace
}  // namespace mbprice::pricing

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

#include <stdexcept>

#include "mbprice/lpos.hpp"

namespace mbprice::pricing {

Rational MarketModel::weight(int i) const {
  return weights.empty() ? Rational(1) : weights.at(static_cast<std::size_t>(i));
}

void MarketModel::validate() const {
  if (assets.empty()) throw std::invalid_argument("model needs at least one asset");
  lattice::check_dimension(m());
  if (steps < 0) throw std::invalid_argument("number of steps n must be nonnegative");
  if (growth < 1) throw std::invalid_argument("growth R must satisfy R >= 1");
  if (sgn(strike) < 0) throw std::invalid_argument("strike C must be nonnegative");
  if (!weights.empty() && weights.size() != assets.size()) {
    throw std::invalid_argument("weights must have one entry per asset");
  }
  for (int i = 0; i < m(); ++i) {
    const Asset& a = assets[static_cast<std::size_t>(i)];
    const std::string label = "asset " + std::to_string(i + 1);
    if (sgn(a.spot) <= 0) throw std::invalid_argument(label + ": spot S(0) must be positive");
    if (!(sgn(a.down) > 0 && a.down < growth && growth < a.up)) {
      throw std::invalid_argument(label + ": requires 0 < D < R < U (D=" + mbprice::to_string(a.down) +
                                  ", R=" + mbprice::to_string(growth) + ", U=" + mbprice::to_string(a.up) + ")");
    }
    if (sgn(weight(i)) < 0) throw std::invalid_argument(label + ": weight must be nonnegative");
  }
}

std::vector<Rational> b_from_market(const MarketModel& model) {
  model.validate();
  std::vector<Rational> b;
  b.reserve(model.assets.size());
  for (const auto& a : model.assets) b.push_back((2 * model.growth - a.up - a.down) / (a.up - a.down));
  return b;
}

tree::EuropeanCertificate certificate(const MarketModel& model) {
  model.validate();
  tree::EuropeanCertificate cert;
  const int m = model.m();
  for (int i = 1; i <= m; ++i) {
    const Asset& a = model.assets[static_cast<std::size_t>(i - 1)];
    cert.factors.push_back(lpos::one_step_factor(i, a.down, a.up, m));
    cert.weights.push_back(model.weight(i - 1) * a.spot);
  }
  cert.strike = model.strike;
  return cert;
}

tree::Payoff payoff(const MarketModel& model) { return tree::Payoff::european(model.steps, certificate(model)); }

std::string to_string(LowerKind kind) { return kind == LowerKind::exact ? "exact" : "lower_bound"; }

namespace {

Rational discount_factor(const MarketModel& model, int remaining) {
  if (!model.discount) return 1;
  return 1 / mbprice::pow(model.growth, static_cast<unsigned long>(remaining));
}

}  // namespace

PriceInterval price_interval(const MarketModel& model, Execution execution) {
  polytope::PolytopeSpec spec(b_from_market(model));
  const tree::Payoff f = payoff(model);
  const int n = model.steps;
  const bool criterion = polytope::subvertex_in_polytope(spec);
  const Rational scale = discount_factor(model, n);

  Rational f_max = fast::supervertex_expectation(f, spec, {}, n, execution).value;
  Rational f_min;
  if (criterion) {
    f_min = fast::subvertex_expectation(f, spec, {}, n, execution).value;
  } else {
    f_min = fast::minimizer_bound(fast::make_minimizer_data(*f.certificate(), spec), n, execution);
  }
  PriceInterval interval{spec,
                         f_max * scale,
                         f_min * scale,
                         criterion ? LowerKind::exact : LowerKind::lower_bound,
                         polytope::supervertex(spec),
                         polytope::subvertex(spec),
                         criterion,
                         model.discount};
  return interval;
}

NodeBounds option_value_bounds(const MarketModel& model, tree::WordView omega, Execution execution) {
  const int n = model.steps;
  const int k = n - static_cast<int>(omega.size());
  if (k < 0) throw std::invalid_argument("node deeper than the horizon");
  polytope::PolytopeSpec spec(b_from_market(model));
  const tree::Payoff f = payoff(model);
  const Rational scale = discount_factor(model, k);
  NodeBounds bounds;
  bounds.upper = fast::supervertex_expectation(f, spec, omega, k, execution).value * scale;
  if (polytope::subvertex_in_polytope(spec)) {
    bounds.lower = fast::subvertex_expectation(f, spec, omega, k, execution).value * scale;
    bounds.lower_kind = LowerKind::exact;
  } else {
    const auto data = fast::make_minimizer_data(*f.certificate(), spec);
    bounds.lower = fast::minimizer_at_node(data, omega, k, execution) * scale;
    bounds.lower_kind = LowerKind::lower_bound;
  }
  return bounds;
}

}  // namespace mbprice::pricing

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

#include "mbprice/random_instances.hpp"

#include <numeric>
#include <stdexcept>

#include "mbprice/lp_oracle.hpp"
#include "mbprice/lpos.hpp"

namespace mbprice::random {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den) {
  if (hi < lo) throw std::invalid_argument("empty rational range");
  // Retry until the chosen denominator admits a value in range.
  while (true) {
    const auto den = uniform_int(rng, 1, max_den);
    Integer low = lo.get_num() * den;
    mpz_cdiv_q(low.get_mpz_t(), low.get_mpz_t(), lo.get_den_mpz_t());
    Integer high = hi.get_num() * den;
    mpz_fdiv_q(high.get_mpz_t(), high.get_mpz_t(), hi.get_den_mpz_t());
    if (high < low) continue;
    const Integer width = high - low + 1;
    Integer offset = rng();
    offset %= width;
    Rational value(low + offset, den);
    value.canonicalize();
    return value;
  }
}

std::vector<Rational> random_b(Rng& rng, int m) {
  std::vector<Rational> b;
  for (int i = 0; i < m; ++i) {
    const auto mode = uniform_int(rng, 0, 9);
    if (mode == 0 && !b.empty()) {
      b.push_back(b[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(b.size()) - 1))]);
    } else if (mode == 1) {
      b.push_back(uniform_int(rng, 0, 1) ? Rational(1) : Rational(-1));
    } else {
      b.push_back(uniform_rational(rng, -1, 1, 6));
    }
  }
  return b;
}

std::vector<Rational> random_b_criterion(Rng& rng, int m) {
  const Rational top = Rational(2 - m) / m;
  std::vector<Rational> b;
  for (int i = 0; i < m; ++i) b.push_back(uniform_rational(rng, -1, top, 6));
  return b;
}

std::vector<Rational> random_b_empty(Rng& rng, int m) {
  std::vector<Rational> b = random_b(rng, m);
  const auto i = static_cast<std::size_t>(uniform_int(rng, 0, m - 1));
  b[i] = uniform_int(rng, 0, 1) ? uniform_rational(rng, Rational(9, 8), 3, 8) : uniform_rational(rng, -3, Rational(-9, 8), 8);
  return b;
}

namespace {

std::vector<Rational> positive_coefficients(Rng& rng, int m) {
  std::vector<Rational> a(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i) a[static_cast<std::size_t>(i)] = uniform_rational(rng, Rational(1, 8), 3, 8);
  return a;
}

}  // namespace

lattice::LatticeVector random_ell_positive(Rng& rng, int m) {
  std::vector<Rational> a = positive_coefficients(rng, m);
  a[0] = uniform_rational(rng, -2 * m, 2 * m, 4);
  return lpos::EllCoefficients{m, lpos::Basis::ell, std::move(a)}.to_vector();
}

lattice::LatticeVector random_nonnegative_ell_positive(Rng& rng, int m) {
  std::vector<Rational> a = positive_coefficients(rng, m);
  const Rational total = std::accumulate(a.begin() + 1, a.end(), Rational(0));
  a[0] = total + uniform_rational(rng, 0, 2, 4);
  return lpos::EllCoefficients{m, lpos::Basis::ell, std::move(a)}.to_vector();
}

tree::EuropeanCertificate random_european(Rng& rng, int m, int n, int factors) {
  tree::EuropeanCertificate cert;
  Rational typical = 0;
  for (int j = 0; j < factors; ++j) {
    cert.factors.push_back(random_nonnegative_ell_positive(rng, m));
    cert.weights.push_back(uniform_rational(rng, 0, 3, 4));
    const auto& u = cert.factors.back();
    const Rational mean = std::accumulate(u.entries().begin(), u.entries().end(), Rational(0)) /
                          static_cast<long>(u.size());
    typical += cert.weights.back() * mbprice::pow(mean, static_cast<unsigned long>(n));
  }
  cert.strike = typical * uniform_rational(rng, 0, Rational(3, 2), 8);
  return cert;
}

lattice::LatticeVector random_point(Rng& rng, const polytope::PolytopeSpec& spec, int vertices) {
  if (spec.empty()) throw polytope::EmptyPolytopeError("P(b) is empty");
  const int m = spec.m();
  std::vector<Rational> mix;
  for (int v = 0; v < vertices; ++v) mix.push_back(uniform_rational(rng, Rational(1, 8), 1, 8));
  const Rational total = std::accumulate(mix.begin(), mix.end(), Rational(0));
  lattice::LatticeVector point(m);
  for (int v = 0; v < vertices; ++v) {
    lattice::LatticeVector objective(m);
    for (std::size_t c = 0; c < objective.size(); ++c) objective[c] = uniform_rational(rng, -4, 4, 2);
    const auto solution = lp::solve(spec, objective, lp::Direction::maximize);
    point += (mix[static_cast<std::size_t>(v)] / total) * solution.argpoint;
  }
  return point;
}

pricing::MarketModel random_market(Rng& rng, int m, int n) {
  pricing::MarketModel model;
  model.steps = n;
  model.growth = uniform_rational(rng, 1, Rational(11, 10), 20);
  Rational notional = 0;
  for (int i = 0; i < m; ++i) {
    pricing::Asset a;
    a.spot = uniform_rational(rng, 50, 150, 2);
    a.down = uniform_rational(rng, Rational(1, 2), model.growth - Rational(1, 20), 20);
    a.up = uniform_rational(rng, model.growth + Rational(1, 20), 2, 20);
    notional += a.spot;
    model.assets.push_back(a);
  }
  model.strike = notional * uniform_rational(rng, Rational(1, 2), Rational(3, 2), 10);
  return model;
}

}  // namespace mbprice::random

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

#include "mbprice/verify.hpp"

#include <stdexcept>

#include "mbprice/fast_bounds.hpp"
#include "mbprice/lp_oracle.hpp"
#include "mbprice/lpos.hpp"
#include "mbprice/random_instances.hpp"

namespace mbprice::verify {
namespace {

enum CheckId { kMax, kMin, kTreeMax, kTreeMin, kSandwich, kCheckCount };

std::vector<std::string> strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> basket_strings(const tree::EuropeanCertificate& cert) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < cert.factors.size(); ++j) {
    std::string line = "s=" + to_string(cert.weights[j]) + " u=";
    for (std::size_t c = 0; c < cert.factors[j].size(); ++c) {
      if (c) line += ",";
      line += to_string(cert.factors[j][c]);
    }
    out.push_back(line);
  }
  out.push_back("C=" + to_string(cert.strike));
  return out;
}

}  // namespace

VerifyReport run(const VerifyConfig& config) {
  if (config.max_m < 1 || config.max_m > 8) throw std::invalid_argument("verify: --m must lie in 1..8");
  if (config.max_n < 1) throw std::invalid_argument("verify: --n must be at least 1");
  if (config.cases < 0) throw std::invalid_argument("verify: --cases must be nonnegative");

  VerifyReport report;
  report.config = config;
  if (config.cases == 0) return report;
  report.checks = {{"max_at_supervertex"},
                   {"min_bounded_by_subvertex"},
                   {"fast_supervertex_equals_tree_max"},
                   {"fast_subvertex_equals_tree_min"},
                   {"minimizer_sandwich"}};

  random::Rng rng(config.seed);
  auto fail = [&](CheckId id, const std::vector<Rational>& b, std::vector<std::string> u, int n,
                  const Rational& expected, const Rational& actual) {
    ++report.checks[id].count;
    report.counterexample =
        Counterexample{report.checks[id].name, strings(b), std::move(u), n, to_string(expected), to_string(actual)};
  };
  auto pass = [&](CheckId id) {
    ++report.checks[id].count;
    ++report.checks[id].passed;
  };

  for (int c = 0; c < config.cases; ++c) {
    const int m = static_cast<int>(random::uniform_int(rng, 1, config.max_m));
    int n = static_cast<int>(random::uniform_int(rng, 1, config.max_n));
    while (n > 1 && m * n > config.cap_bits) --n;
    const std::vector<Rational> b = (c % 2 == 0) ? random::random_b(rng, m) : random::random_b_criterion(rng, m);
    const polytope::PolytopeSpec spec(b);
    const bool criterion = polytope::subvertex_in_polytope(spec);

    // One-step theorems on a random ell-positive u.
    const auto u = random::random_ell_positive(rng, m);
    const auto u_plus = lpos::truncate(u);
    const auto u_text = strings(u.entries());
    lattice::LatticeVector top = polytope::supervertex(spec).to_vector();
    if (config.corrupt_supervertex) {
      lattice::LatticeVector uniform(m);
      for (std::size_t k = 0; k < uniform.size(); ++k) uniform[k] = Rational(1, static_cast<long>(uniform.size()));
      top = Rational(1, 2) * (top + uniform);
    }
    const auto lp_max = lp::solve(spec, u_plus, lp::Direction::maximize);
    const Rational at_top = inner(u_plus, top);
    if (lp_max.value != at_top) {
      fail(kMax, b, u_text, 1, lp_max.value, at_top);
      return report;
    }
    pass(kMax);

    const auto lp_min = lp::solve(spec, u_plus, lp::Direction::minimize);
    const Rational at_bottom = inner(u_plus, polytope::subvertex(spec).to_vector());
    if (lp_min.value < at_bottom || sgn(at_bottom) < 0 || (criterion && lp_min.value != at_bottom)) {
      fail(kMin, b, u_text, 1, lp_min.value, at_bottom);
      return report;
    }
    pass(kMin);

    if (m * n > config.cap_bits) continue;

    // Multi-step: European payoff, fast formulas against the tree.
    const int factors = static_cast<int>(random::uniform_int(rng, 1, 2));
    const auto cert = random::random_european(rng, m, n, factors);
    const auto payoff = tree::Payoff::european(n, cert);
    tree::TreeOptions options;
    options.cap_bits = config.cap_bits;
    const auto tree_max = tree::tree_extremum(payoff, spec, lp::Direction::maximize, options);
    const auto fast_max = fast::supervertex_expectation(payoff, spec, {}, n);
    if (fast_max.value != tree_max.value) {
      fail(kTreeMax, b, basket_strings(cert), n, tree_max.value, fast_max.value);
      return report;
    }
    pass(kTreeMax);

    const auto tree_min = tree::tree_extremum(payoff, spec, lp::Direction::minimize, options);
    if (criterion) {
      const auto fast_min = fast::subvertex_expectation(payoff, spec, {}, n);
      if (fast_min.value != tree_min.value) {
        fail(kTreeMin, b, basket_strings(cert), n, tree_min.value, fast_min.value);
        return report;
      }
      pass(kTreeMin);
    }

    const Rational bound = fast::minimizer_bound(fast::make_minimizer_data(cert, spec), n);
    if (bound > tree_min.value || tree_min.value > tree_max.value) {
      fail(kSandwich, b, basket_strings(cert), n, tree_min.value, bound);
      return report;
    }
    pass(kSandwich);
  }
  return report;
}

}  // namespace mbprice::verify

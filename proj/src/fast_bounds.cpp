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

#include "mbprice/fast_bounds.hpp"

#include <numeric>

#include "mbprice/composition.hpp"
#include "parallel_for.hpp"

namespace mbprice::fast {
namespace {

using PowerTable = std::vector<std::vector<Rational>>;

// table[i][e] = bases[i]^e for e = 0..k.
PowerTable power_table(const std::vector<Rational>& bases, int k) {
  PowerTable table(bases.size(), std::vector<Rational>(static_cast<std::size_t>(k) + 1));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    table[i][0] = 1;
    for (int e = 1; e <= k; ++e) {
      table[i][static_cast<std::size_t>(e)] = table[i][static_cast<std::size_t>(e) - 1] * bases[i];
    }
  }
  return table;
}

// One composition's contribution, or nothing when a zero weight is raised
// to a positive power.
template <typename TermValue>
bool accumulate_term(const std::vector<int>& parts, const Integer& coefficient, const std::vector<Rational>& weights,
                     const PowerTable& weight_powers, const TermValue& term_value, Rational& sum) {
  Rational product(coefficient);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) continue;
    if (sgn(weights[i]) == 0) return false;
    product *= weight_powers[i][static_cast<std::size_t>(parts[i])];
  }
  sum += product * term_value(parts);
  return true;
}

template <typename TermValue>
Rational composition_sum_serial(int k, const std::vector<Rational>& weights, const TermValue& term_value,
                                SumStats& stats) {
  const PowerTable weight_powers = power_table(weights, k);
  CompositionIterator it(k, static_cast<int>(weights.size()));
  Rational sum = 0;
  do {
    ++stats.enumerated;
    if (accumulate_term(it.parts(), it.multinomial(), weights, weight_powers, term_value, sum)) ++stats.evaluated;
  } while (it.next());
  return sum;
}

// Splits the compositions by the value j of the last part; the rest is a
// composition of k - j into one part fewer, and the multinomial factors as
// C(k, j) times the smaller multinomial. Slices are summed in j order.
template <typename TermValue>
Rational composition_sum_parallel(int k, const std::vector<Rational>& weights, const TermValue& term_value,
                                  SumStats& stats) {
  const int parts = static_cast<int>(weights.size());
  if (parts < 2) return composition_sum_serial(k, weights, term_value, stats);
  const PowerTable weight_powers = power_table(weights, k);
  std::vector<Rational> partial(static_cast<std::size_t>(k) + 1);
  std::vector<SumStats> partial_stats(static_cast<std::size_t>(k) + 1);
  detail::parallel_for(k + 1, Execution::parallel, [&](std::int64_t slice) {
    const int last = static_cast<int>(slice);
    const Integer outer = binomial(k, last);
    CompositionIterator it(k - last, parts - 1);
    std::vector<int> full(static_cast<std::size_t>(parts));
    full.back() = last;
    Rational sum = 0;
    SumStats local;
    do {
      std::copy(it.parts().begin(), it.parts().end(), full.begin());
      ++local.enumerated;
      if (accumulate_term(full, outer * it.multinomial(), weights, weight_powers, term_value, sum)) ++local.evaluated;
    } while (it.next());
    partial[static_cast<std::size_t>(slice)] = std::move(sum);
    partial_stats[static_cast<std::size_t>(slice)] = local;
  });
  Rational total = 0;
  for (std::size_t j = 0; j < partial.size(); ++j) {
    total += partial[j];
    stats.enumerated += partial_stats[j].enumerated;
    stats.evaluated += partial_stats[j].evaluated;
  }
  return total;
}

template <typename TermValue>
Rational composition_sum(int k, const std::vector<Rational>& weights, const TermValue& term_value,
                         Execution execution, SumStats& stats) {
  if (execution == Execution::serial) return composition_sum_serial(k, weights, term_value, stats);
  return composition_sum_parallel(k, weights, term_value, stats);
}

// (sum_j s_j prod_i base_j(i)^{parts_i} - C)^+ from per-factor power tables.
class BasketTerm {
 public:
  BasketTerm(std::vector<Rational> scales, const std::vector<std::vector<Rational>>& bases, Rational strike, int k)
      : scales_(std::move(scales)), strike_(std::move(strike)) {
    powers_.reserve(bases.size());
    for (const auto& b : bases) powers_.push_back(power_table(b, k));
  }

  Rational operator()(const std::vector<int>& parts) const {
    Rational total = 0;
    for (std::size_t j = 0; j < scales_.size(); ++j) {
      if (sgn(scales_[j]) == 0) continue;
      Rational product = scales_[j];
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] != 0) product *= powers_[j][i][static_cast<std::size_t>(parts[i])];
      }
      total += product;
    }
    return positive_part(total - strike_);
  }

 private:
  std::vector<Rational> scales_;
  std::vector<PowerTable> powers_;
  Rational strike_;
};

std::vector<Rational> chain_weights(const std::vector<WeightedElement>& chain) {
  std::vector<Rational> weights;
  weights.reserve(chain.size());
  for (const auto& entry : chain) weights.push_back(entry.weight);
  return weights;
}

Rational factor_on_word(const lattice::LatticeVector& factor, WordView word) {
  Rational product = 1;
  for (const auto& letter : word) product *= factor[letter];
  return product;
}

}  // namespace

Expectation chain_expectation(const Payoff& payoff, WordView omega, int k, const std::vector<WeightedElement>& chain,
                              Execution execution) {
  if (!payoff.symmetric()) throw std::invalid_argument("composition formula requires a symmetric payoff");
  if (static_cast<int>(omega.size()) + k != payoff.n() || k < 0) {
    throw std::invalid_argument("|omega| + k must equal the horizon n");
  }
  if (chain.empty()) throw std::invalid_argument("empty support chain");
  for (const auto& entry : chain) {
    if (entry.element.m() != payoff.m()) throw std::invalid_argument("chain and payoff disagree on m");
  }
  const std::vector<Rational> weights = chain_weights(chain);
  Expectation result;

  if (const auto& cert = payoff.certificate()) {
    std::vector<Rational> scales;
    std::vector<std::vector<Rational>> bases;
    for (std::size_t j = 0; j < cert->factors.size(); ++j) {
      scales.push_back(cert->weights[j] * factor_on_word(cert->factors[j], omega));
      std::vector<Rational> values;
      for (const auto& entry : chain) values.push_back(cert->factors[j][entry.element]);
      bases.push_back(std::move(values));
    }
    const BasketTerm term(std::move(scales), bases, cert->strike, k);
    result.value = composition_sum(k, weights, term, execution, result.stats);
    return result;
  }

  const tree::Word prefix(omega.begin(), omega.end());
  auto term = [&](const std::vector<int>& parts) {
    tree::Word word = prefix;
    for (std::size_t i = 0; i < parts.size(); ++i) word.insert(word.end(), static_cast<std::size_t>(parts[i]), chain[i].element);
    return payoff(word);
  };
  result.value = composition_sum(k, weights, term, execution, result.stats);
  return result;
}

Expectation supervertex_expectation(const Payoff& payoff, const PolytopeSpec& spec, WordView omega, int k,
                                    Execution execution) {
  if (spec.empty()) throw polytope::EmptyPolytopeError("P(b) is empty: ||b||_inf > 1");
  if (spec.m() != payoff.m()) throw std::invalid_argument("payoff and polytope disagree on m");
  return chain_expectation(payoff, omega, k, polytope::supervertex_chain(spec), execution);
}

Expectation subvertex_expectation(const Payoff& payoff, const PolytopeSpec& spec, WordView omega, int k,
                                  Execution execution) {
  if (spec.empty()) throw polytope::EmptyPolytopeError("P(b) is empty: ||b||_inf > 1");
  if (spec.m() != payoff.m()) throw std::invalid_argument("payoff and polytope disagree on m");
  if (!polytope::subvertex_in_polytope(spec)) {
    throw CriterionViolatedError("subvertex not in P(b): criterion violated, sum b(i) > 2 - m");
  }
  return chain_expectation(payoff, omega, k, polytope::subvertex_chain(spec), execution);
}

MinimizerData make_minimizer_data(const tree::EuropeanCertificate& certificate, const PolytopeSpec& spec) {
  if (spec.empty()) throw polytope::EmptyPolytopeError("P(b) is empty: ||b||_inf > 1");
  certificate.validate();
  const int m = spec.m();
  if (certificate.factors.front().m() != m) throw std::invalid_argument("certificate and polytope disagree on m");
  MinimizerData data;
  data.m = m;
  data.beta = spec.b_dprime();
  data.beta[0] = 1;
  data.weights = certificate.weights;
  data.strike = certificate.strike;
  data.factors = certificate.factors;
  for (const auto& u : certificate.factors) {
    std::vector<Rational> alpha(static_cast<std::size_t>(m) + 1);
    const Rational top = u[lattice::nu(0, m)];
    alpha[0] = top;
    for (int i = 1; i <= m; ++i) alpha[static_cast<std::size_t>(i)] = u[lattice::nu(i, m)] - top;
    data.alpha.push_back(std::move(alpha));
  }
  for (const auto& v : data.beta) {
    if (sgn(v) < 0) throw std::invalid_argument("minimizer beta must be nonnegative");
  }
  for (const auto& alpha : data.alpha) {
    for (const auto& v : alpha) {
      if (sgn(v) < 0) throw std::invalid_argument("minimizer alpha must be nonnegative");
    }
  }
  return data;
}

Rational minimizer_at_node(const MinimizerData& data, WordView omega, int k, Execution execution) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<Rational> scales;
  for (std::size_t j = 0; j < data.factors.size(); ++j) {
    scales.push_back(data.weights[j] * factor_on_word(data.factors[j], omega));
  }
  const BasketTerm term(std::move(scales), data.alpha, data.strike, k);
  SumStats stats;
  return composition_sum(k, data.beta, term, execution, stats);
}

Rational minimizer_bound(const MinimizerData& data, int n, Execution execution) {
  return minimizer_at_node(data, {}, n, execution);
}

}  // namespace mbprice::fast

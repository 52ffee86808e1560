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

#include "mbprice/tree_engine.hpp"

#include <cstdlib>
#include <memory>
#include <string>

#include "mbprice/lpos.hpp"
#include "parallel_for.hpp"

namespace mbprice::tree {
namespace {

std::uint64_t level_size(int m, int length) { return std::uint64_t{1} << (m * length); }

void check_word(WordView word, int m) {
  for (const auto& letter : word) {
    if (letter.m() != m) throw std::invalid_argument("word letter has the wrong number of assets");
  }
}

// Density of the child level restricted to succ(w) as a lattice vector.
LatticeVector children(const std::vector<Rational>& level, std::uint64_t parent, int m) {
  const std::uint64_t width = std::uint64_t{1} << m;
  std::vector<Rational> values(level.begin() + static_cast<std::ptrdiff_t>(parent * width),
                               level.begin() + static_cast<std::ptrdiff_t>((parent + 1) * width));
  return LatticeVector(m, std::move(values));
}

}  // namespace

int default_oracle_cap_bits() {
  if (const char* env = std::getenv("MB_MAX_ORACLE_BITS")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits > 0 && bits <= 40) return static_cast<int>(bits);
  }
  return kDefaultOracleCapBits;
}

void check_cap(int m, int length, int cap_bits) {
  if (m * length > cap_bits) {
    throw CapExceededError("tree level of 2^" + std::to_string(m * length) + " nodes exceeds the oracle cap 2^" +
                           std::to_string(cap_bits) + " (set MB_MAX_ORACLE_BITS to raise it)");
  }
}

std::uint64_t word_index(WordView word) {
  std::uint64_t index = 0;
  for (const auto& letter : word) index = (index << letter.m()) | letter.index();
  return index;
}

Word word_from_index(std::uint64_t index, int length, int m) {
  Word word(static_cast<std::size_t>(length), LatticeElement::zeros(m));
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  for (int j = length - 1; j >= 0; --j) {
    word[static_cast<std::size_t>(j)] = LatticeElement(m, static_cast<std::uint32_t>(index & mask));
    index >>= m;
  }
  return word;
}

Word concat(WordView a, WordView b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void EuropeanCertificate::validate() const {
  if (factors.empty()) throw std::invalid_argument("European payoff needs at least one factor");
  if (factors.size() != weights.size()) throw std::invalid_argument("one weight per factor required");
  if (sgn(strike) < 0) throw std::invalid_argument("strike must be nonnegative");
  const int m = factors.front().m();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (factors[j].m() != m) throw std::invalid_argument("factors disagree on m");
    if (sgn(weights[j]) < 0) throw std::invalid_argument("weights must be nonnegative");
    if (lpos::truncate(factors[j]) != factors[j]) throw std::invalid_argument("factor must be nonnegative");
    // Boundary factors (some a_i = 0) are admitted: both sides of the bounds
    // are continuous in u, and single-asset factors u_i live there when m > 1.
    const auto positivity = lpos::classify(factors[j]);
    if (positivity.verdict != lpos::Verdict::positive && positivity.verdict != lpos::Verdict::borderline) {
      throw std::invalid_argument("factor " + std::to_string(j + 1) + ": " + lpos::to_string(positivity.verdict));
    }
  }
}

Rational EuropeanCertificate::basket(WordView word) const {
  Rational total = 0;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (sgn(weights[j]) == 0) continue;
    Rational product = weights[j];
    for (const auto& letter : word) product *= factors[j][letter];
    total += product;
  }
  return total;
}

Payoff::Payoff(int m, int n, Function function, bool symmetric)
    : m_(m), n_(n), function_(std::move(function)), symmetric_(symmetric) {
  lattice::check_dimension(m);
  if (n < 0) throw std::invalid_argument("horizon n must be nonnegative");
}

Payoff Payoff::european(int n, EuropeanCertificate certificate) {
  certificate.validate();
  const int m = certificate.factors.front().m();
  auto shared = std::make_shared<const EuropeanCertificate>(certificate);
  Payoff payoff(m, n, [shared](WordView word) { return positive_part(shared->basket(word) - shared->strike); }, true);
  payoff.certificate_ = std::move(certificate);
  return payoff;
}

Rational Payoff::operator()(WordView word) const {
  if (static_cast<int>(word.size()) != n_) {
    throw std::invalid_argument("payoff expects a word of length " + std::to_string(n_));
  }
  check_word(word, m_);
  return function_(word);
}

std::vector<Rational> Payoff::tabulate(Execution execution) const {
  const std::uint64_t size = level_size(m_, n_);
  std::vector<Rational> values(size);
  detail::parallel_for(static_cast<std::int64_t>(size), execution, [&](std::int64_t i) {
    const Word word = word_from_index(static_cast<std::uint64_t>(i), n_, m_);
    values[static_cast<std::size_t>(i)] = function_(word);
  });
  return values;
}

Payoff restrict(const Payoff& payoff, WordView omega) {
  const int k = payoff.n() - static_cast<int>(omega.size());
  if (k < 0) throw std::invalid_argument("prefix longer than the horizon");
  check_word(omega, payoff.m());
  if (omega.empty()) return payoff;
  if (const auto& cert = payoff.certificate()) {
    EuropeanCertificate restricted = *cert;
    for (std::size_t j = 0; j < restricted.factors.size(); ++j) {
      for (const auto& letter : omega) restricted.weights[j] *= restricted.factors[j][letter];
    }
    return Payoff::european(k, std::move(restricted));
  }
  auto prefix = std::make_shared<const Word>(omega.begin(), omega.end());
  return Payoff(
      payoff.m(), k, [payoff, prefix](WordView tau) { return payoff(concat(*prefix, tau)); }, payoff.symmetric());
}

bool is_density(const LatticeVector& x) {
  Rational total = 0;
  for (const auto& v : x.entries()) {
    if (sgn(v) < 0) return false;
    total += v;
  }
  return total == 1;
}

TreePolicy TreePolicy::constant(LatticeVector q) {
  if (!is_density(q)) throw std::invalid_argument("constant policy value is not a density");
  const int m = q.m();
  return TreePolicy(m, [q](WordView) { return q; }, q);
}

TreePolicy TreePolicy::from_levels(int m, std::vector<std::vector<LatticeVector>> levels) {
  lattice::check_dimension(m);
  for (std::size_t t = 0; t < levels.size(); ++t) {
    if (levels[t].size() != level_size(m, static_cast<int>(t))) {
      throw std::invalid_argument("policy level " + std::to_string(t) + " has the wrong number of nodes");
    }
    for (const auto& q : levels[t]) {
      if (q.m() != m || !is_density(q)) throw std::invalid_argument("policy value is not a density");
    }
  }
  auto shared = std::make_shared<const std::vector<std::vector<LatticeVector>>>(std::move(levels));
  return TreePolicy(
      m,
      [shared](WordView word) {
        if (word.size() >= shared->size()) throw std::out_of_range("policy queried beyond its levels");
        return (*shared)[word.size()][word_index(word)];
      },
      std::nullopt);
}

TreePolicy TreePolicy::from_function(int m, Function function) {
  lattice::check_dimension(m);
  return TreePolicy(
      m,
      [m, function = std::move(function)](WordView word) {
        LatticeVector q = function(word);
        if (q.m() != m || !is_density(q)) throw std::invalid_argument("policy value is not a density");
        return q;
      },
      std::nullopt);
}

LatticeVector TreePolicy::at(WordView word) const {
  check_word(word, m_);
  return function_(word);
}

Rational cylinder_probability(const TreePolicy& policy, WordView omega) {
  Rational p = 1;
  for (std::size_t j = 0; j < omega.size() && sgn(p) != 0; ++j) {
    p *= policy.at(omega.subspan(0, j))[omega[j]];
  }
  return p;
}

std::vector<Rational> measure_of_policy(const TreePolicy& policy, WordView omega, int n, int cap_bits) {
  const int m = policy.m();
  const int k = n - static_cast<int>(omega.size());
  if (k < 0) throw std::invalid_argument("prefix longer than the horizon");
  check_cap(m, k, cap_bits);
  const std::uint64_t width = std::uint64_t{1} << m;
  // Grow the conditional measure one level at a time.
  std::vector<Rational> current{Rational(1)};
  Word prefix(omega.begin(), omega.end());
  for (int level = 0; level < k; ++level) {
    std::vector<Rational> next(current.size() * width);
    for (std::uint64_t w = 0; w < current.size(); ++w) {
      if (sgn(current[w]) == 0) continue;
      const Word node = concat(prefix, word_from_index(w, level, m));
      const LatticeVector q = policy.at(node);
      for (std::uint64_t c = 0; c < width; ++c) next[w * width + c] = current[w] * q[c];
    }
    current = std::move(next);
  }
  return current;
}

std::vector<Rational> extend(const Payoff& payoff, const TreePolicy& policy, int k, Execution execution,
                             int cap_bits) {
  const int m = payoff.m();
  const int n = payoff.n();
  if (policy.m() != m) throw std::invalid_argument("policy and payoff disagree on m");
  if (k < 0 || k > n) throw std::invalid_argument("extension level must lie in 0..n");
  check_cap(m, n, cap_bits);
  std::vector<Rational> level = payoff.tabulate(execution);
  for (int step = 1; step <= k; ++step) {
    const int length = n - step;
    std::vector<Rational> next(level_size(m, length));
    detail::parallel_for(static_cast<std::int64_t>(next.size()), execution, [&](std::int64_t i) {
      const auto w = static_cast<std::uint64_t>(i);
      const LatticeVector q = policy.constant_value() ? *policy.constant_value() : policy.at(word_from_index(w, length, m));
      next[w] = inner(children(level, w, m), q);
    });
    level = std::move(next);
  }
  return level;
}

Rational extend_at(const Payoff& payoff, const TreePolicy& policy, WordView omega, int cap_bits) {
  const Payoff local = restrict(payoff, omega);
  const int k = local.n();
  check_cap(payoff.m(), k, cap_bits);
  auto shifted = TreePolicy::from_function(policy.m(), [&policy, prefix = Word(omega.begin(), omega.end())](WordView tau) {
    return policy.at(concat(prefix, tau));
  });
  return extend(local, shifted, k, Execution::serial, cap_bits).front();
}

TreePolicy reconstruct_policy(int m, int n, const std::vector<Rational>& density) {
  lattice::check_dimension(m);
  if (density.size() != level_size(m, n)) throw std::invalid_argument("density has the wrong size for Lambda^n");
  const std::uint64_t width = std::uint64_t{1} << m;
  // Cylinder masses P'(A_w), from the leaves up.
  std::vector<std::vector<Rational>> mass(static_cast<std::size_t>(n) + 1);
  mass[static_cast<std::size_t>(n)] = density;
  for (int t = n - 1; t >= 0; --t) {
    auto& here = mass[static_cast<std::size_t>(t)];
    const auto& below = mass[static_cast<std::size_t>(t) + 1];
    here.assign(level_size(m, t), Rational(0));
    for (std::uint64_t w = 0; w < below.size(); ++w) here[w / width] += below[w];
  }
  std::vector<std::vector<LatticeVector>> levels(static_cast<std::size_t>(n));
  LatticeVector uniform(m);
  for (std::uint64_t c = 0; c < width; ++c) uniform[c] = Rational(1, static_cast<unsigned long>(width));
  for (int t = 0; t < n; ++t) {
    auto& nodes = levels[static_cast<std::size_t>(t)];
    nodes.reserve(level_size(m, t));
    const auto& here = mass[static_cast<std::size_t>(t)];
    const auto& below = mass[static_cast<std::size_t>(t) + 1];
    for (std::uint64_t w = 0; w < here.size(); ++w) {
      if (sgn(here[w]) == 0) {
        nodes.push_back(uniform);
        continue;
      }
      LatticeVector q(m);
      for (std::uint64_t c = 0; c < width; ++c) q[c] = below[w * width + c] / here[w];
      nodes.push_back(std::move(q));
    }
  }
  return TreePolicy::from_levels(m, std::move(levels));
}

TreeExtremum tree_extremum(const Payoff& payoff, const PolytopeSpec& spec, lp::Direction direction,
                           const TreeOptions& options) {
  const int m = payoff.m();
  const int n = payoff.n();
  if (spec.m() != m) throw std::invalid_argument("payoff and polytope disagree on m");
  if (spec.empty()) throw polytope::EmptyPolytopeError("P(b) is empty: ||b||_inf > 1");
  check_cap(m, n, options.cap_bits);

  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<LatticeVector>> policy_levels(static_cast<std::size_t>(n));
  values[0] = payoff.tabulate(options.execution);
  for (int k = 1; k <= n; ++k) {
    const int length = n - k;
    const auto& below = values[static_cast<std::size_t>(k) - 1];
    std::vector<Rational> here(level_size(m, length));
    std::vector<LatticeVector> choices(here.size());
    detail::parallel_for(static_cast<std::int64_t>(here.size()), options.execution, [&](std::int64_t i) {
      const auto w = static_cast<std::size_t>(i);
      lp::LpSolution solution = lp::solve(spec, children(below, w, m), direction, options.lp);
      here[w] = std::move(solution.value);
      choices[w] = std::move(solution.argpoint);
    });
    values[static_cast<std::size_t>(k)] = std::move(here);
    policy_levels[static_cast<std::size_t>(length)] = std::move(choices);
  }
  Rational value = values[static_cast<std::size_t>(n)].front();
  return {std::move(value), TreePolicy::from_levels(m, std::move(policy_levels)), std::move(values)};
}

}  // namespace mbprice::tree

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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbprice/execution.hpp"
#include "mbprice/lattice.hpp"
#include "mbprice/lp_oracle.hpp"
#include "mbprice/polytope.hpp"
#include "mbprice/rational.hpp"

// The Lambda-labelled tree of height n: payoffs on its leaves, policies on
// its internal nodes, the measures they induce, backward induction and the
// exponential per-node LP algorithm for extreme expectations.
namespace mbprice::tree {

using lattice::LatticeElement;
using lattice::LatticeVector;
using polytope::PolytopeSpec;

using Word = std::vector<LatticeElement>;
using WordView = std::span<const LatticeElement>;

// Raised when a level of the tree would exceed 2^cap_bits nodes.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDefaultOracleCapBits = 20;

// kDefaultOracleCapBits unless MB_MAX_ORACLE_BITS holds a positive integer.
int default_oracle_cap_bits();

// Throws CapExceededError when m * length > cap_bits.
void check_cap(int m, int length, int cap_bits);

// Words of a fixed length are indexed big-endian over letters, so the
// children of the node with index w are w * 2^m + index(lambda).
std::uint64_t word_index(WordView word);
Word word_from_index(std::uint64_t index, int length, int m);

Word concat(WordView a, WordView b);

// The data making F(l_1..l_n) = (sum_j s_j prod_k u_j(l_k) - C)^+ European:
// nonnegative factors u_j in the closed ell-positive cone (a_1..a_m >= 0),
// weights s_j >= 0, strike C >= 0.
struct EuropeanCertificate {
  std::vector<LatticeVector> factors;
  std::vector<Rational> weights;
  Rational strike;

  // Throws std::invalid_argument if any of the conditions above fails.
  void validate() const;
  // sum_j s_j prod_k u_j(word_k), before truncation.
  Rational basket(WordView word) const;
};

// A function on the leaves Lambda^n. Evaluation is const and reentrant.
class Payoff {
 public:
  using Function = std::function<Rational(WordView)>;

  Payoff(int m, int n, Function function, bool symmetric = false);

  static Payoff european(int n, EuropeanCertificate certificate);

  int m() const { return m_; }
  int n() const { return n_; }
  bool symmetric() const { return symmetric_; }
  const std::optional<EuropeanCertificate>& certificate() const { return certificate_; }

  // Throws std::invalid_argument unless the word has length n and matching m.
  Rational operator()(WordView word) const;

  // Values on all of Lambda^n by word index.
  std::vector<Rational> tabulate(Execution execution = Execution::parallel) const;

 private:
  int m_;
  int n_;
  Function function_;
  bool symmetric_;
  std::optional<EuropeanCertificate> certificate_;
};

// F_{omega-}(tau) = F(omega tau), a payoff on Lambda^k with k = n - |omega|.
// A European certificate carries over with s_j replaced by s_j u_j(omega).
Payoff restrict(const Payoff& payoff, WordView omega);

// Nonnegative entries summing to one.
bool is_density(const LatticeVector& x);

// Phi: internal words (length < n) to densities on Lambda.
class TreePolicy {
 public:
  using Function = std::function<LatticeVector(WordView)>;

  // Throws std::invalid_argument if q is not a density.
  static TreePolicy constant(LatticeVector q);
  // levels[t][w] is the density at the word of length t with index w.
  static TreePolicy from_levels(int m, std::vector<std::vector<LatticeVector>> levels);
  // Values are validated on every lookup.
  static TreePolicy from_function(int m, Function function);

  int m() const { return m_; }
  LatticeVector at(WordView word) const;
  // Constant policies only.
  const std::optional<LatticeVector>& constant_value() const { return constant_; }

 private:
  TreePolicy(int m, Function function, std::optional<LatticeVector> constant)
      : m_(m), function_(std::move(function)), constant_(std::move(constant)) {}

  int m_;
  Function function_;
  std::optional<LatticeVector> constant_;
};

// P(Phi)(A_omega) = prod_j Phi(omega_1..omega_{j-1})(omega_j).
Rational cylinder_probability(const TreePolicy& policy, WordView omega);

// P(Phi, A_omega) on Lambda^k, k = n - |omega|, indexed by word index of tau.
std::vector<Rational> measure_of_policy(const TreePolicy& policy, WordView omega, int n,
                                        int cap_bits = default_oracle_cap_bits());

// Backward induction F^(k)_Phi on all words of length n - k.
std::vector<Rational> extend(const Payoff& payoff, const TreePolicy& policy, int k,
                             Execution execution = Execution::parallel,
                             int cap_bits = default_oracle_cap_bits());

// F^(k)_Phi(omega) for a single node.
Rational extend_at(const Payoff& payoff, const TreePolicy& policy, WordView omega,
                   int cap_bits = default_oracle_cap_bits());

// Policy whose induced measure is the given density on Lambda^n; nodes of
// probability zero get the uniform density.
TreePolicy reconstruct_policy(int m, int n, const std::vector<Rational>& density);

struct TreeOptions {
  int cap_bits = default_oracle_cap_bits();
  Execution execution = Execution::parallel;
  lp::LpOptions lp;
};

struct TreeExtremum {
  Rational value;
  TreePolicy policy;
  // levels[k] holds F^(k)_max (or min) on words of length n - k.
  std::vector<std::vector<Rational>> levels;
};

// Exact F_max / F_min over Gamma(Lambda^n, b): one LP per internal node,
// bottom-up. Throws polytope::EmptyPolytopeError or CapExceededError.
TreeExtremum tree_extremum(const Payoff& payoff, const PolytopeSpec& spec, lp::Direction direction,
                           const TreeOptions& options = {});

}  // namespace mbprice::tree

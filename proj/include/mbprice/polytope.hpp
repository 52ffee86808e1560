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

#include <stdexcept>
#include <utility>
#include <vector>

#include "mbprice/lattice.hpp"
#include "mbprice/rational.hpp"

namespace mbprice::polytope {

using lattice::LatticeElement;
using lattice::LatticeVector;

// Raised when an operation needs a point of P(b) but ||b||_inf > 1.
class EmptyPolytopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The fiber P(b) = { x >= 0 : <ell_0,x> = 1, <ell_i,x> = b(i) } over a
// point b of R^m, together with the derived coordinates b' and b''.
// Emptiness is a state of the spec, not an error.
class PolytopeSpec {
 public:
  // Throws std::domain_error for m outside 1..kMaxAssets.
  explicit PolytopeSpec(std::vector<Rational> b);

  int m() const { return static_cast<int>(b_.size()); }
  const std::vector<Rational>& b() const { return b_; }
  // b'(i) = (b(i) - b(i+1))/2 with b(0) = 1, b(m+1) = -1.
  const std::vector<Rational>& b_prime() const { return b_prime_; }
  // b''(i) = (b(i)+1)/2 for i >= 1 and b''(0) = 1 - sum of the others.
  const std::vector<Rational>& b_dprime() const { return b_dprime_; }
  bool empty() const { return empty_; }

  // b with the conventions b(0) = 1 and b(m+1) = -1 applied.
  Rational b_at(int i) const;

 private:
  std::vector<Rational> b_;
  std::vector<Rational> b_prime_;
  std::vector<Rational> b_dprime_;
  bool empty_;
};

inline PolytopeSpec make_spec(std::vector<Rational> b) { return PolytopeSpec(std::move(b)); }

enum class VertexKind { supervertex, subvertex };

struct WeightedElement {
  LatticeElement element;
  Rational weight;
};

// A vector supported on a chain of lattice elements. Supervertex weights
// are nonnegative; a subvertex may carry a negative weight on nu_0.
struct VertexDensity {
  int m;
  VertexKind kind;
  // Nonzero weights only, in chain order.
  std::vector<WeightedElement> support;

  LatticeVector to_vector() const;
};

// x(lambda) >= 0 and <ell'_i, x> = b'(i) for every i.
// Throws std::invalid_argument on dimension mismatch.
bool contains(const PolytopeSpec& spec, const LatticeVector& x);
// Same membership test written against the primal rows ell_0..ell_m.
bool contains_primal(const PolytopeSpec& spec, const LatticeVector& x);

// The decreasing arrangement i_1..i_m of b used by the supervertex:
// stable, ties broken by ascending index. Entries are 1-based.
std::vector<int> decreasing_order(const PolytopeSpec& spec);

// Full chain theta_0 > theta_1 > ... > theta_m for a decreasing arrangement,
// with weights (b(i_k) - b(i_{k+1}))/2 (zeros kept). theta_k is the
// indicator of {i_{k+1}, ..., i_m}.
std::vector<WeightedElement> supervertex_chain(const PolytopeSpec& spec, const std::vector<int>& order);
std::vector<WeightedElement> supervertex_chain(const PolytopeSpec& spec);

// Throws EmptyPolytopeError when P(b) is empty. The order overload accepts
// any arrangement sorting b decreasingly (std::invalid_argument otherwise).
VertexDensity supervertex(const PolytopeSpec& spec);
VertexDensity supervertex(const PolytopeSpec& spec, const std::vector<int>& order);

// nu_0..nu_m with weights b''(0..m), zeros kept.
std::vector<WeightedElement> subvertex_chain(const PolytopeSpec& spec);

// q_* = sum b''(i) e_{nu_i}; only a vector, see subvertex_in_polytope.
// Throws EmptyPolytopeError when P(b) is empty.
VertexDensity subvertex(const PolytopeSpec& spec);

// sum_i b(i) <= 2 - m, the exact condition for q_* to lie in P(b).
bool subvertex_in_polytope(const PolytopeSpec& spec);

// Support-minimality test: x is a vertex iff the columns of the constraint
// matrix on supp(x) are linearly independent.
// Throws std::invalid_argument when x is not in P(b).
bool is_vertex(const PolytopeSpec& spec, const LatticeVector& x);

}  // namespace mbprice::polytope

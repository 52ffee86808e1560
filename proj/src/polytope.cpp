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

namespace mbprice::polytope {

using lattice::c_vector;

PolytopeSpec::PolytopeSpec(std::vector<Rational> b) : b_(std::move(b)) {
  const int m = static_cast<int>(b_.size());
  lattice::check_dimension(m);
  b_prime_.resize(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) b_prime_[static_cast<std::size_t>(i)] = (b_at(i) - b_at(i + 1)) / 2;
  b_dprime_.resize(static_cast<std::size_t>(m) + 1);
  Rational rest = 0;
  for (int i = 1; i <= m; ++i) {
    b_dprime_[static_cast<std::size_t>(i)] = (b_at(i) + 1) / 2;
    rest += b_dprime_[static_cast<std::size_t>(i)];
  }
  b_dprime_[0] = 1 - rest;
  empty_ = std::any_of(b_.begin(), b_.end(), [](const Rational& v) { return abs(v) > 1; });
}

Rational PolytopeSpec::b_at(int i) const {
  if (i == 0) return 1;
  if (i == m() + 1) return -1;
  return b_.at(static_cast<std::size_t>(i - 1));
}

LatticeVector VertexDensity::to_vector() const {
  LatticeVector v(m);
  for (const auto& [element, weight] : support) v[element] += weight;
  return v;
}

namespace {

void check_same_dimension(const PolytopeSpec& spec, const LatticeVector& x) {
  if (x.m() != spec.m()) throw std::invalid_argument("vector and polytope dimensions differ");
}

void require_nonempty(const PolytopeSpec& spec) {
  if (spec.empty()) throw EmptyPolytopeError("P(b) is empty: ||b||_inf > 1");
}

bool nonnegative(const LatticeVector& x) {
  return std::all_of(x.entries().begin(), x.entries().end(), [](const Rational& v) { return sgn(v) >= 0; });
}

VertexDensity drop_zeros(int m, VertexKind kind, const std::vector<WeightedElement>& chain) {
  VertexDensity v{m, kind, {}};
  for (const auto& entry : chain) {
    if (sgn(entry.weight) != 0) v.support.push_back(entry);
  }
  return v;
}

}  // namespace

bool contains(const PolytopeSpec& spec, const LatticeVector& x) {
  check_same_dimension(spec, x);
  if (!nonnegative(x)) return false;
  const int m = spec.m();
  std::vector<Rational> image(static_cast<std::size_t>(m) + 1);
  for (std::uint32_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    const auto c = c_vector(LatticeElement(m, k));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] > 0) {
        image[i] += x[k];
      } else if (c[i] < 0) {
        image[i] -= x[k];
      }
    }
  }
  return image == spec.b_prime();
}

bool contains_primal(const PolytopeSpec& spec, const LatticeVector& x) {
  check_same_dimension(spec, x);
  if (!nonnegative(x)) return false;
  if (inner(lattice::ell(0, spec.m()), x) != 1) return false;
  for (int i = 1; i <= spec.m(); ++i) {
    if (inner(lattice::ell(i, spec.m()), x) != spec.b_at(i)) return false;
  }
  return true;
}

std::vector<int> decreasing_order(const PolytopeSpec& spec) {
  std::vector<int> order(static_cast<std::size_t>(spec.m()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return spec.b_at(a) > spec.b_at(c); });
  return order;
}

std::vector<WeightedElement> supervertex_chain(const PolytopeSpec& spec, const std::vector<int>& order) {
  const int m = spec.m();
  if (static_cast<int>(order.size()) != m) throw std::invalid_argument("ordering has wrong length");
  // Validates that order is a permutation.
  lattice::Permutation check(order);
  for (int k = 1; k < m; ++k) {
    if (spec.b_at(order[static_cast<std::size_t>(k - 1)]) < spec.b_at(order[static_cast<std::size_t>(k)])) {
      throw std::invalid_argument("ordering does not sort b decreasingly");
    }
  }
  auto index_at = [&](int k) {
    if (k == 0) return 0;
    if (k == m + 1) return m + 1;
    return order[static_cast<std::size_t>(k - 1)];
  };
  std::vector<WeightedElement> chain;
  chain.reserve(static_cast<std::size_t>(m) + 1);
  LatticeElement theta = LatticeElement::ones(m);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) theta = theta.with(index_at(k), 0);
    chain.push_back({theta, (spec.b_at(index_at(k)) - spec.b_at(index_at(k + 1))) / 2});
  }
  return chain;
}

std::vector<WeightedElement> supervertex_chain(const PolytopeSpec& spec) {
  return supervertex_chain(spec, decreasing_order(spec));
}

VertexDensity supervertex(const PolytopeSpec& spec) { return supervertex(spec, decreasing_order(spec)); }

VertexDensity supervertex(const PolytopeSpec& spec, const std::vector<int>& order) {
  require_nonempty(spec);
  return drop_zeros(spec.m(), VertexKind::supervertex, supervertex_chain(spec, order));
}

std::vector<WeightedElement> subvertex_chain(const PolytopeSpec& spec) {
  const int m = spec.m();
  std::vector<WeightedElement> chain;
  chain.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    chain.push_back({lattice::nu(i, m), spec.b_dprime()[static_cast<std::size_t>(i)]});
  }
  return chain;
}

VertexDensity subvertex(const PolytopeSpec& spec) {
  require_nonempty(spec);
  return drop_zeros(spec.m(), VertexKind::subvertex, subvertex_chain(spec));
}

bool subvertex_in_polytope(const PolytopeSpec& spec) {
  const Rational total = std::accumulate(spec.b().begin(), spec.b().end(), Rational(0));
  return total <= 2 - spec.m();
}

bool is_vertex(const PolytopeSpec& spec, const LatticeVector& x) {
  if (!contains(spec, x)) throw std::invalid_argument("is_vertex: point is not in P(b)");
  const int m = spec.m();
  std::vector<std::uint32_t> support;
  for (std::uint32_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) != 0) support.push_back(k);
  }
  Matrix columns(static_cast<std::size_t>(m) + 1, support.size());
  for (std::size_t c = 0; c < support.size(); ++c) {
    const auto cv = c_vector(LatticeElement(m, support[c]));
    for (std::size_t r = 0; r < cv.size(); ++r) columns(r, c) = cv[r];
  }
  // A unique solution of the restricted system means no point of P(b) has a
  // strictly smaller support.
  return columns.rank() == support.size();
}

}  // namespace mbprice::polytope

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

#include "mbprice/lpos.hpp"

#include <stdexcept>

namespace mbprice::lpos {
namespace {

Matrix transition_from_ell(Basis basis, int m) {
  switch (basis) {
    case Basis::ell:
      return Matrix::identity(static_cast<std::size_t>(m) + 1);
    case Basis::ell_prime:
      return lattice::ell_to_ell_prime(m);
    case Basis::ell_dprime:
      return lattice::ell_to_ell_dprime(m);
  }
  throw std::logic_error("unknown basis");
}

LatticeVector basis_vector(Basis basis, int i, int m) {
  switch (basis) {
    case Basis::ell:
      return lattice::ell(i, m);
    case Basis::ell_prime:
      return lattice::ell_prime(i, m);
    case Basis::ell_dprime:
      return lattice::ell_dprime(i, m);
  }
  throw std::logic_error("unknown basis");
}

}  // namespace

// Rows of T express the new basis in the old one (new = T * old), so a
// vector with coefficients a in the old basis has coefficients
// alpha = (T^T)^{-1} a in the new basis.
EllCoefficients EllCoefficients::to(Basis target) const {
  if (coeffs.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("coefficient vector must have m+1 entries");
  }
  if (target == basis) return *this;
  const Matrix from = transition_from_ell(basis, m);
  const std::vector<Rational> in_ell = from.transpose().apply(coeffs);
  if (target == Basis::ell) return {m, Basis::ell, in_ell};
  const Matrix to_target = transition_from_ell(target, m).transpose().inverse();
  return {m, target, to_target.apply(in_ell)};
}

LatticeVector EllCoefficients::to_vector() const {
  if (coeffs.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("coefficient vector must have m+1 entries");
  }
  LatticeVector v(m);
  for (int i = 0; i <= m; ++i) {
    const Rational& a = coeffs[static_cast<std::size_t>(i)];
    if (sgn(a) == 0) continue;
    v += a * basis_vector(basis, i, m);
  }
  return v;
}

LatticeVector truncate(const LatticeVector& x) {
  LatticeVector out = x;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (sgn(out[k]) < 0) out[k] = 0;
  }
  return out;
}

Positivity classify(const LatticeVector& x) {
  const int m = x.m();
  const Rational scale(1, static_cast<unsigned long>(x.size()));
  EllCoefficients coefficients{m, Basis::ell, std::vector<Rational>(static_cast<std::size_t>(m) + 1)};
  for (int i = 0; i <= m; ++i) {
    coefficients.coeffs[static_cast<std::size_t>(i)] = inner(lattice::ell(i, m), x) * scale;
  }
  if (coefficients.to_vector() != x) return {Verdict::outside_span, std::move(coefficients)};
  bool zero_seen = false;
  for (int i = 1; i <= m; ++i) {
    const int s = sgn(coefficients.coeffs[static_cast<std::size_t>(i)]);
    if (s < 0) return {Verdict::not_positive, std::move(coefficients)};
    if (s == 0) zero_seen = true;
  }
  return {zero_seen ? Verdict::borderline : Verdict::positive, std::move(coefficients)};
}

bool is_ell_positive(const LatticeVector& x) { return classify(x).positive(); }

bool is_ell_positive(const EllCoefficients& u) {
  const EllCoefficients a = u.to(Basis::ell);
  for (int i = 1; i <= a.m; ++i) {
    if (sgn(a.coeffs[static_cast<std::size_t>(i)]) <= 0) return false;
  }
  return true;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::positive:
      return "ell-positive";
    case Verdict::borderline:
      return "borderline: some ell coefficient is exactly zero";
    case Verdict::not_positive:
      return "not ell-positive: some ell coefficient is negative";
    case Verdict::outside_span:
      return "not in span{ell_0..ell_m}";
  }
  return "unknown";
}

LatticeVector one_step_factor(int i, const Rational& down, const Rational& up, int m) {
  lattice::check_dimension(m);
  if (i < 1 || i > m) throw std::invalid_argument("asset index must lie in 1..m");
  if (sgn(down) <= 0 || down >= up) throw std::invalid_argument("one-step factor requires 0 < D < U");
  LatticeVector u(m);
  for (std::uint32_t k = 0; k < u.size(); ++k) u[k] = LatticeElement(m, k)(i) ? down : up;
  return u;
}

bool is_order_reversing(const LatticeVector& x) {
  const int m = x.m();
  // Checking covering pairs suffices by transitivity.
  for (std::uint32_t k = 0; k < x.size(); ++k) {
    for (int bit = 0; bit < m; ++bit) {
      const std::uint32_t mask = std::uint32_t{1} << bit;
      if ((k & mask) == 0) continue;
      if (x[k] > x[k & ~mask]) return false;
    }
  }
  return true;
}

TruncatedSum::TruncatedSum(int m) : m_(m) { lattice::check_dimension(m); }

void TruncatedSum::add(EllCoefficients term) {
  if (term.m != m_) throw std::invalid_argument("term dimension mismatch");
  if (!is_ell_positive(term)) throw std::invalid_argument("TruncatedSum term is not ell-positive");
  terms_.push_back(std::move(term));
}

LatticeVector TruncatedSum::evaluate() const {
  LatticeVector total(m_);
  for (const auto& term : terms_) total += truncate(term.to_vector());
  return total;
}

}  // namespace mbprice::lpos
